"""Normalized densities, their measure functionals, and the two monad structures.

A max-plus density peaks at 0 and doubles as a finite-support measure: its
functional sends phi to max(f(x) + phi(x)).  The max-times counterpart peaks
at 1 and multiplies instead of adding.  Meta densities (finitely supported
densities over densities) carry the monad multiplications, and a third
nesting level feeds the associativity checks.

Constructors reject unnormalized input instead of silently renormalizing;
the explicit normalize_* helpers shift (or scale) by the peak.  Weights at
bottom (or 0 on the times side) are dropped from meta supports, and support
entries equal within tolerance are merged by taking the larger weight.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Mapping

from .semiring import BOTTOM, check_score, check_unit, is_bottom, resolve_tolerance
from .spaces import FiniteSpace, PointMap, RealFunction, UnitFunction, validate_map

# slack on the times side, where division by the peak cannot stay exact
TIMES_NORM_SLACK = 1e-12

DEFAULT_PROBE_BOUND = 64.0


@dataclass(frozen=True, eq=False)
class MaxPlusDensity:
    """Weights in [-inf, 0] with peak exactly 0; values at bottom mark points
    outside the support."""

    space: FiniteSpace
    weights: dict[str, float]

    def __post_init__(self):
        vals = {}
        extra = set(self.weights) - set(self.space.points)
        if extra:
            raise ValueError(f"weights given for unknown points: {sorted(extra)}")
        for p in self.space.points:
            if p not in self.weights:
                raise ValueError(f"missing weight for point {p!r}")
            w = check_score(self.weights[p])
            if w > 0.0:
                raise ValueError(f"positive weight {w!r} at point {p!r}")
            vals[p] = w
        if max(vals.values()) != 0.0:
            raise ValueError(
                f"peak weight is {max(vals.values())!r}, expected exactly 0 "
                "(use normalize_maxplus)"
            )
        object.__setattr__(self, "weights", vals)

    def __call__(self, point: str) -> float:
        return self.weights[point]

    def support(self) -> tuple[str, ...]:
        return tuple(p for p in self.space.points if not is_bottom(self.weights[p]))


@dataclass(frozen=True, eq=False)
class MaxTimesDensity:
    """Weights in [0, 1] with peak 1 (within a 1e-12 slack; canonical
    constructors produce an exact 1)."""

    space: FiniteSpace
    weights: dict[str, float]

    def __post_init__(self):
        vals = {}
        extra = set(self.weights) - set(self.space.points)
        if extra:
            raise ValueError(f"weights given for unknown points: {sorted(extra)}")
        for p in self.space.points:
            if p not in self.weights:
                raise ValueError(f"missing weight for point {p!r}")
            vals[p] = check_unit(self.weights[p])
        peak = max(vals.values())
        if abs(peak - 1.0) > TIMES_NORM_SLACK:
            raise ValueError(f"peak weight is {peak!r}, expected 1 (use normalize_maxtimes)")
        object.__setattr__(self, "weights", vals)

    def __call__(self, point: str) -> float:
        return self.weights[point]

    def support(self) -> tuple[str, ...]:
        return tuple(p for p in self.space.points if self.weights[p] > 0.0)


def normalize_maxplus(space: FiniteSpace, weights: Mapping[str, float]) -> MaxPlusDensity:
    """Shift weights so the peak becomes exactly 0."""
    finite = [check_score(w) for w in weights.values() if not is_bottom(w)]
    if not finite:
        raise ValueError("cannot normalize: every weight is bottom")
    peak = max(finite)
    return MaxPlusDensity(space, {p: float(w) - peak for p, w in weights.items()})


def normalize_maxtimes(space: FiniteSpace, weights: Mapping[str, float]) -> MaxTimesDensity:
    """Scale weights so the peak becomes exactly 1."""
    peak = max(float(w) for w in weights.values())
    if peak <= 0.0:
        raise ValueError("cannot normalize: every weight is 0")
    return MaxTimesDensity(space, {p: float(w) / peak for p, w in weights.items()})


def density_close(
    f: MaxPlusDensity, g: MaxPlusDensity, tol: float | None = None
) -> bool:
    """Same space, identical bottom pattern, finite weights within tolerance."""
    if f.space != g.space:
        return False
    tol = resolve_tolerance(tol)
    for p in f.space.points:
        a, b = f.weights[p], g.weights[p]
        if is_bottom(a) or is_bottom(b):
            if not (is_bottom(a) and is_bottom(b)):
                return False
        elif abs(a - b) > tol:
            return False
    return True


def times_close(
    f: MaxTimesDensity, g: MaxTimesDensity, tol: float | None = None
) -> bool:
    if f.space != g.space:
        return False
    tol = resolve_tolerance(tol)
    return all(abs(f.weights[p] - g.weights[p]) <= tol for p in f.space.points)


def _merged_support(pairs, close):
    """Merge support entries whose carriers coincide, keeping the max weight."""
    merged: list = []
    for item, w in pairs:
        for k, (other, v) in enumerate(merged):
            if close(item, other):
                if w > v:
                    merged[k] = (other, w)
                break
        else:
            merged.append((item, w))
    return merged


@dataclass(frozen=True, eq=False)
class MetaDensity:
    """Finitely supported density over densities: pairs (density, weight <= 0)
    sharing one space, peak weight exactly 0, bottom-weight entries dropped."""

    support: tuple[tuple[MaxPlusDensity, float], ...]

    def __post_init__(self):
        kept = []
        for f, w in self.support:
            w = check_score(w)
            if is_bottom(w):
                continue
            if w > 0.0:
                raise ValueError(f"positive support weight {w!r}")
            if not isinstance(f, MaxPlusDensity):
                raise ValueError("support entries must be MaxPlusDensity values")
            kept.append((f, w))
        if not kept:
            raise ValueError("empty support after dropping bottom weights")
        space = kept[0][0].space
        if any(f.space != space for f, _ in kept):
            raise ValueError("support densities live on different spaces")
        kept = _merged_support(kept, density_close)
        if max(w for _, w in kept) != 0.0:
            raise ValueError("peak support weight must be exactly 0")
        object.__setattr__(self, "support", tuple(kept))

    @property
    def space(self) -> FiniteSpace:
        return self.support[0][0].space


@dataclass(frozen=True, eq=False)
class MetaTimesDensity:
    """Max-times counterpart: pairs (density, weight in [0,1]), peak weight 1,
    zero-weight entries dropped."""

    support: tuple[tuple[MaxTimesDensity, float], ...]

    def __post_init__(self):
        kept = []
        for f, w in self.support:
            w = check_unit(w)
            if w == 0.0:
                continue
            if not isinstance(f, MaxTimesDensity):
                raise ValueError("support entries must be MaxTimesDensity values")
            kept.append((f, w))
        if not kept:
            raise ValueError("empty support after dropping zero weights")
        space = kept[0][0].space
        if any(f.space != space for f, _ in kept):
            raise ValueError("support densities live on different spaces")
        kept = _merged_support(kept, times_close)
        if abs(max(w for _, w in kept) - 1.0) > TIMES_NORM_SLACK:
            raise ValueError("peak support weight must be 1")
        object.__setattr__(self, "support", tuple(kept))

    @property
    def space(self) -> FiniteSpace:
        return self.support[0][0].space


def meta_close(a: MetaDensity, b: MetaDensity, tol: float | None = None) -> bool:
    """Supports match pairwise: same carriers within tolerance, close weights."""
    if len(a.support) != len(b.support):
        return False
    tol = resolve_tolerance(tol)
    taken = [False] * len(b.support)
    for f, w in a.support:
        for k, (g, v) in enumerate(b.support):
            if not taken[k] and abs(w - v) <= tol and density_close(f, g, tol):
                taken[k] = True
                break
        else:
            return False
    return True


def meta_times_close(a: MetaTimesDensity, b: MetaTimesDensity, tol: float | None = None) -> bool:
    if len(a.support) != len(b.support):
        return False
    tol = resolve_tolerance(tol)
    taken = [False] * len(b.support)
    for f, w in a.support:
        for k, (g, v) in enumerate(b.support):
            if not taken[k] and abs(w - v) <= tol and times_close(f, g, tol):
                taken[k] = True
                break
        else:
            return False
    return True


@dataclass(frozen=True, eq=False)
class ThirdLevel:
    """One more nesting: pairs (meta density, weight <= 0), peak exactly 0."""

    support: tuple[tuple[MetaDensity, float], ...]

    def __post_init__(self):
        kept = []
        for m, w in self.support:
            w = check_score(w)
            if is_bottom(w):
                continue
            if w > 0.0:
                raise ValueError(f"positive support weight {w!r}")
            kept.append((m, w))
        if not kept:
            raise ValueError("empty support after dropping bottom weights")
        space = kept[0][0].space
        if any(m.space != space for m, _ in kept):
            raise ValueError("support metas live on different spaces")
        kept = _merged_support(kept, meta_close)
        if max(w for _, w in kept) != 0.0:
            raise ValueError("peak support weight must be exactly 0")
        object.__setattr__(self, "support", tuple(kept))

    @property
    def space(self) -> FiniteSpace:
        return self.support[0][0].space


@dataclass(frozen=True, eq=False)
class ThirdLevelTimes:
    support: tuple[tuple[MetaTimesDensity, float], ...]

    def __post_init__(self):
        kept = []
        for m, w in self.support:
            w = check_unit(w)
            if w == 0.0:
                continue
            kept.append((m, w))
        if not kept:
            raise ValueError("empty support after dropping zero weights")
        space = kept[0][0].space
        if any(m.space != space for m, _ in kept):
            raise ValueError("support metas live on different spaces")
        kept = _merged_support(kept, meta_times_close)
        if abs(max(w for _, w in kept) - 1.0) > TIMES_NORM_SLACK:
            raise ValueError("peak support weight must be 1")
        object.__setattr__(self, "support", tuple(kept))

    @property
    def space(self) -> FiniteSpace:
        return self.support[0][0].space


# ---------------------------------------------------------------------------
# measure functionals


def eval_measure(f: MaxPlusDensity, phi: RealFunction) -> float:
    """The measure of phi under the density f: max(f(x) + phi(x))."""
    if f.space != phi.space:
        raise ValueError("density and function live on different spaces")
    return max(w + phi.values[p] for p, w in f.weights.items())


def eval_measure_times(g: MaxTimesDensity, phi: UnitFunction) -> float:
    """Max-times measure of phi: max(g(x) * phi(x))."""
    if g.space != phi.space:
        raise ValueError("density and function live on different spaces")
    return max(w * phi.values[p] for p, w in g.weights.items())


def probe_function(space: FiniteSpace, x: str, bound: float) -> RealFunction:
    """The recovery probe: 0 at x and -bound elsewhere."""
    if x not in space:
        raise ValueError(f"unknown point {x!r}")
    return RealFunction(space, {p: 0.0 if p == x else -bound for p in space.points})


def density_from_functional(
    oracle: Callable[[RealFunction], float],
    space: FiniteSpace,
    bound: float = DEFAULT_PROBE_BOUND,
    tol: float | None = None,
) -> MaxPlusDensity:
    """Recover the density of a measure functional from probe evaluations.

    Each point is probed with the function that is 0 there and -bound
    elsewhere; a probe value at or below -bound (up to tolerance) is recorded
    as bottom.  Recovery is exact for functionals of valid densities whose
    finite weights all exceed -bound.
    """
    if bound <= 0.0:
        raise ValueError("probe bound must be positive")
    cut = -bound + resolve_tolerance(tol)
    weights = {}
    for x in space.points:
        v = float(oracle(probe_function(space, x, bound)))
        weights[x] = BOTTOM if v <= cut else v
    return MaxPlusDensity(space, weights)


# ---------------------------------------------------------------------------
# units, pushforwards, multiplications


def dirac(x: str, space: FiniteSpace) -> MaxPlusDensity:
    """Unit of the max-plus monad: weight 0 at x, bottom elsewhere."""
    if x not in space:
        raise ValueError(f"unknown point {x!r}")
    return MaxPlusDensity(space, {p: 0.0 if p == x else BOTTOM for p in space.points})


def dirac_times(x: str, space: FiniteSpace) -> MaxTimesDensity:
    """Unit of the max-times monad: weight 1 at x, 0 elsewhere."""
    if x not in space:
        raise ValueError(f"unknown point {x!r}")
    return MaxTimesDensity(space, {p: 1.0 if p == x else 0.0 for p in space.points})


def pushforward(g: PointMap, f: MaxPlusDensity) -> MaxPlusDensity:
    """Functor action: weight at y is the max of f over the fiber of y
    (empty fiber gives bottom)."""
    if not validate_map(g):
        raise ValueError("invalid point map")
    if f.space != g.source:
        raise ValueError("density does not live on the source of the map")
    weights = {y: BOTTOM for y in g.target.points}
    for x, w in f.weights.items():
        y = g.assignment[x]
        if w > weights[y]:
            weights[y] = w
    return MaxPlusDensity(g.target, weights)


def pushforward_times(g: PointMap, f: MaxTimesDensity) -> MaxTimesDensity:
    """Max-times functor action; an empty fiber gives 0."""
    if not validate_map(g):
        raise ValueError("invalid point map")
    if f.space != g.source:
        raise ValueError("density does not live on the source of the map")
    weights = {y: 0.0 for y in g.target.points}
    for x, w in f.weights.items():
        y = g.assignment[x]
        if w > weights[y]:
            weights[y] = w
    return MaxTimesDensity(g.target, weights)


def meta_pushforward(g: PointMap, F: MetaDensity) -> MetaDensity:
    """Induced action on meta densities: push every support density forward;
    colliding images merge by max weight."""
    return MetaDensity(tuple((pushforward(g, f), w) for f, w in F.support))


def multiply(F: MetaDensity) -> MaxPlusDensity:
    """Monad multiplication: weight at x is max over support pairs of
    density(x) + pair weight."""
    weights = {x: BOTTOM for x in F.space.points}
    for f, w in F.support:
        for x, fx in f.weights.items():
            cand = fx + w
            if cand > weights[x]:
                weights[x] = cand
    return MaxPlusDensity(F.space, weights)


def multiply_times(F: MetaTimesDensity) -> MaxTimesDensity:
    """Max-times monad multiplication: per-point max of density(x) * weight."""
    weights = {x: 0.0 for x in F.space.points}
    for f, w in F.support:
        for x, fx in f.weights.items():
            cand = fx * w
            if cand > weights[x]:
                weights[x] = cand
    return MaxTimesDensity(F.space, weights)


def measure_multiplication(
    N: MetaDensity, bound: float = DEFAULT_PROBE_BOUND
) -> MaxPlusDensity:
    """Multiplication computed on the measure side, through probe functionals.

    The support pairs define the functional phi -> max(weight_i + measure_i(phi));
    the result is read back off with density_from_functional.  This is a code
    path independent of multiply(), on purpose: comparing the two is the
    runtime check that densities and measures multiply compatibly.
    """

    def oracle(phi: RealFunction) -> float:
        return max(w + eval_measure(f, phi) for f, w in N.support)

    return density_from_functional(oracle, N.space, bound)


# ---------------------------------------------------------------------------
# law checks (multiply_fn is a hook for the harness's mutation testing)


def check_unit_laws(
    f: MaxPlusDensity,
    tol: float | None = None,
    multiply_fn: Callable[[MetaDensity], MaxPlusDensity] = multiply,
) -> bool:
    """Multiplication absorbs the unit on both sides and returns f."""
    via_unit = multiply_fn(MetaDensity(((f, 0.0),)))
    pairs = tuple((dirac(x, f.space), w) for x, w in f.weights.items() if not is_bottom(w))
    via_functor = multiply_fn(MetaDensity(pairs))
    return density_close(via_unit, f, tol) and density_close(via_functor, f, tol)


def check_unit_laws_times(
    g: MaxTimesDensity,
    tol: float | None = None,
    multiply_fn: Callable[[MetaTimesDensity], MaxTimesDensity] = multiply_times,
) -> bool:
    via_unit = multiply_fn(MetaTimesDensity(((g, 1.0),)))
    pairs = tuple((dirac_times(x, g.space), w) for x, w in g.weights.items() if w > 0.0)
    via_functor = multiply_fn(MetaTimesDensity(pairs))
    return times_close(via_unit, g, tol) and times_close(via_functor, g, tol)


def flatten_outer(G: ThirdLevel) -> MetaDensity:
    """Multiplication one level up: the combined weight of a density is the
    max over metas of (its weight there) + (the meta's weight in G)."""
    pairs = []
    for meta, W in G.support:
        for f, w in meta.support:
            pairs.append((f, w + W))
    return MetaDensity(tuple(pairs))


def flatten_outer_times(G: ThirdLevelTimes) -> MetaTimesDensity:
    pairs = []
    for meta, W in G.support:
        for f, w in meta.support:
            pairs.append((f, w * W))
    return MetaTimesDensity(tuple(pairs))


def check_associativity(
    G: ThirdLevel,
    tol: float | None = None,
    multiply_fn: Callable[[MetaDensity], MaxPlusDensity] = multiply,
) -> bool:
    """Both ways of collapsing a third-level element agree.

    Path A multiplies after flattening the outer two levels; path B first
    multiplies every support meta (pushing G down one level) and multiplies
    the result.  The two composites are computed independently.
    """
    path_a = multiply_fn(flatten_outer(G))
    collapsed = MetaDensity(tuple((multiply_fn(m), W) for m, W in G.support))
    path_b = multiply_fn(collapsed)
    return density_close(path_a, path_b, tol)


def check_associativity_times(
    G: ThirdLevelTimes,
    tol: float | None = None,
    multiply_fn: Callable[[MetaTimesDensity], MaxTimesDensity] = multiply_times,
) -> bool:
    path_a = multiply_fn(flatten_outer_times(G))
    collapsed = MetaTimesDensity(tuple((multiply_fn(m), W) for m, W in G.support))
    path_b = multiply_fn(collapsed)
    return times_close(path_a, path_b, tol)
