"""Max-plus and max-times scalar arithmetic with an explicit bottom element.

Scores live in R extended by a bottom element (written ``-inf``); weights on
the multiplicative side live in [0, 1].  The exp/log bridge converts between
the two sides, sending bottom to 0 and 0 to 1.

Bottom is represented by IEEE ``-inf``: it is a distinguished non-finite
value (never a very negative float), ``max`` treats it as neutral and ``+``
as absorbing, exactly as required.  The named operations below avoid every
arithmetic path that could turn it into a NaN.
"""

from __future__ import annotations

import math
import os

BOTTOM = float("-inf")

DEFAULT_TOLERANCE = 1e-9

# environment override consulted by default_tolerance()
TOLERANCE_ENV_VAR = "IDEMKIT_TOLERANCE"


def default_tolerance() -> float:
    """Library-wide comparison tolerance, overridable via IDEMKIT_TOLERANCE."""
    raw = os.environ.get(TOLERANCE_ENV_VAR)
    return float(raw) if raw else DEFAULT_TOLERANCE


def resolve_tolerance(tol: float | None) -> float:
    return default_tolerance() if tol is None else float(tol)


def is_bottom(a: float) -> bool:
    return a == BOTTOM


def check_score(a: float) -> float:
    """Validate a score: finite or bottom, never NaN or +inf."""
    a = float(a)
    if math.isnan(a) or a == math.inf:
        raise ValueError(f"not a valid score: {a!r}")
    return a


def check_unit(u: float) -> float:
    """Validate a unit-interval value."""
    u = float(u)
    if math.isnan(u) or not 0.0 <= u <= 1.0:
        raise ValueError(f"not a value in [0, 1]: {u!r}")
    return u


def oplus(a: float, b: float) -> float:
    """Semiring addition: maximum, with bottom as the neutral element."""
    return a if a >= b else b


def otimes(a: float, b: float) -> float:
    """Semiring multiplication: addition, with bottom absorbing and 0 neutral."""
    return a + b


def exp_bridge(a: float) -> float:
    """Map a score in [-inf, 0] to [0, 1] via exp; bottom goes to exactly 0."""
    if a > 0.0:
        raise ValueError(f"score {a!r} is positive; the bridge covers [-inf, 0] only")
    return math.exp(a)


def log_bridge(u: float) -> float:
    """Inverse of exp_bridge: [0, 1] to [-inf, 0], sending 0 to bottom."""
    if u == 0.0:
        return BOTTOM
    return math.log(u)


def score_eq(a: float, b: float, tol: float | None = None) -> bool:
    """Equality up to tolerance; bottom only ever equals bottom."""
    if is_bottom(a) or is_bottom(b):
        return is_bottom(a) and is_bottom(b)
    return abs(a - b) <= resolve_tolerance(tol)


def format_score(a: float, digits: int = 9) -> str:
    """Textual encoding: decimal literal with the given significant digits,
    or the exact token ``-inf`` for bottom."""
    if is_bottom(a):
        return "-inf"
    return f"%.{digits}g" % a
