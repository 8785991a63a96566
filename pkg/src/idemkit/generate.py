"""Seeded random instances for the law suites and tests.

All generators take a numpy Generator and produce canonically normalized
values: max-plus peaks are exact zeros (a draw minus the running maximum),
multiplicative peaks are exact ones (a draw divided by the maximum), so the
constructors' normalization invariants hold without rounding slack.
"""

from __future__ import annotations

import string

import numpy as np

from .capacities import Capacity, MetaPossibility, PossibilityProfile
from .convexity import GeneratorSet, index_space
from .measures import (
    MaxPlusDensity,
    MaxTimesDensity,
    MetaDensity,
    MetaTimesDensity,
    ThirdLevel,
    ThirdLevelTimes,
)
from .seeding import trial_stream
from .semiring import BOTTOM
from .spaces import FiniteSpace, PointMap, RealFunction, UnitFunction

__all__ = [
    "trial_stream",
    "random_space",
    "random_real_function",
    "random_unit_function",
    "random_point_map",
    "random_comonotone_pair",
    "random_maxplus_density",
    "random_maxtimes_density",
    "random_meta",
    "random_meta_times",
    "random_third",
    "random_third_times",
    "random_capacity",
    "random_possibility_profile",
    "random_meta_possibility",
    "random_weight_vector",
    "random_generator_set",
]

_LABELS = string.ascii_lowercase


def random_space(rng: np.random.Generator, max_points: int = 5, min_points: int = 1) -> FiniteSpace:
    size = int(rng.integers(min_points, max_points + 1))
    return FiniteSpace(tuple(_LABELS[:size]))


def random_real_function(
    rng: np.random.Generator, space: FiniteSpace, lo: float = -5.0, hi: float = 5.0
) -> RealFunction:
    vals = rng.uniform(lo, hi, len(space))
    return RealFunction(space, {p: float(v) for p, v in zip(space.points, vals)})


def random_unit_function(rng: np.random.Generator, space: FiniteSpace) -> UnitFunction:
    vals = rng.uniform(0.0, 1.0, len(space))
    return UnitFunction(space, {p: float(v) for p, v in zip(space.points, vals)})


def random_point_map(
    rng: np.random.Generator, source: FiniteSpace, target: FiniteSpace
) -> PointMap:
    picks = rng.integers(0, len(target), len(source))
    return PointMap(
        source, target, {p: target.points[int(k)] for p, k in zip(source.points, picks)}
    )


def random_comonotone_pair(
    rng: np.random.Generator, space: FiniteSpace
) -> tuple[RealFunction, RealFunction]:
    """Two non-decreasing reshapings of one shared ranking; ties included."""
    n = len(space)
    ranks = rng.integers(0, n, n)

    def reshape() -> RealFunction:
        incs = rng.uniform(0.0, 2.0, n)
        incs[rng.random(n) < 0.3] = 0.0  # flat stretches cover ties
        table = float(rng.uniform(-3.0, 3.0)) + np.cumsum(incs)
        return RealFunction(
            space, {p: float(table[ranks[i]]) for i, p in enumerate(space.points)}
        )

    return reshape(), reshape()


def random_maxplus_density(
    rng: np.random.Generator,
    space: FiniteSpace,
    min_weight: float = -8.0,
    bottom_rate: float = 0.25,
) -> MaxPlusDensity:
    n = len(space)
    finite = rng.random(n) >= bottom_rate
    if not finite.any():
        finite[int(rng.integers(0, n))] = True
    draws = rng.uniform(min_weight, 0.0, n)
    peak = draws[finite].max()
    weights = {
        p: float(draws[i]) - peak if finite[i] else BOTTOM
        for i, p in enumerate(space.points)
    }
    return MaxPlusDensity(space, weights)


def random_maxtimes_density(
    rng: np.random.Generator, space: FiniteSpace, zero_rate: float = 0.25
) -> MaxTimesDensity:
    n = len(space)
    draws = rng.uniform(0.0, 1.0, n)
    draws[rng.random(n) < zero_rate] = 0.0
    if draws.max() <= 0.0:
        draws[int(rng.integers(0, n))] = 1.0
    peak = draws.max()
    return MaxTimesDensity(
        space, {p: float(v) / peak for p, v in zip(space.points, draws)}
    )


def _normalized_level(rng: np.random.Generator, count: int, min_weight: float) -> np.ndarray:
    draws = rng.uniform(min_weight, 0.0, count)
    return draws - draws.max()


def random_meta(
    rng: np.random.Generator,
    space: FiniteSpace,
    max_support: int = 4,
    min_weight: float = -8.0,
) -> MetaDensity:
    k = int(rng.integers(1, max_support + 1))
    weights = _normalized_level(rng, k, min_weight)
    pairs = tuple(
        (random_maxplus_density(rng, space, min_weight), float(w)) for w in weights
    )
    return MetaDensity(pairs)


def random_meta_times(
    rng: np.random.Generator, space: FiniteSpace, max_support: int = 4
) -> MetaTimesDensity:
    k = int(rng.integers(1, max_support + 1))
    draws = rng.uniform(0.0, 1.0, k)
    draws = draws / draws.max() if draws.max() > 0 else np.ones(k)
    pairs = tuple(
        (random_maxtimes_density(rng, space), float(w)) for w in draws
    )
    return MetaTimesDensity(pairs)


def random_third(
    rng: np.random.Generator,
    space: FiniteSpace,
    max_outer: int = 4,
    max_inner: int = 4,
    min_weight: float = -8.0,
) -> ThirdLevel:
    k = int(rng.integers(1, max_outer + 1))
    weights = _normalized_level(rng, k, min_weight)
    pairs = tuple(
        (random_meta(rng, space, max_inner, min_weight), float(w)) for w in weights
    )
    return ThirdLevel(pairs)


def random_third_times(
    rng: np.random.Generator, space: FiniteSpace, max_outer: int = 4, max_inner: int = 4
) -> ThirdLevelTimes:
    k = int(rng.integers(1, max_outer + 1))
    draws = rng.uniform(0.0, 1.0, k)
    draws = draws / draws.max() if draws.max() > 0 else np.ones(k)
    pairs = tuple(
        (random_meta_times(rng, space, max_inner), float(w)) for w in draws
    )
    return ThirdLevelTimes(pairs)


def random_capacity(rng: np.random.Generator, space: FiniteSpace) -> Capacity:
    """Uniform draws made monotone by an upward sweep, then normalized."""
    n = len(space)
    vals = rng.uniform(0.0, 1.0, 1 << n)
    for mask in range(1, 1 << n):
        for i in range(n):
            if mask >> i & 1:
                below = vals[mask ^ (1 << i)]
                if below > vals[mask]:
                    vals[mask] = below
    vals[0] = 0.0
    return Capacity(space, vals / vals[-1])


def random_possibility_profile(
    rng: np.random.Generator,
    space: FiniteSpace,
    zero_rate: float = 0.2,
    quantum: int | None = None,
) -> PossibilityProfile:
    """Random profile with peak exactly 1; with `quantum`, every value is a
    multiple of 1/quantum so it lies on the matching threshold sweep grid."""
    n = len(space)
    if quantum is not None:
        draws = rng.integers(0, quantum + 1, n) / float(quantum)
        draws[int(rng.integers(0, n))] = 1.0
    else:
        draws = rng.uniform(0.0, 1.0, n)
        draws[rng.random(n) < zero_rate] = 0.0
        if draws.max() <= 0.0:
            draws[int(rng.integers(0, n))] = 1.0
        draws = draws / draws.max()
    return PossibilityProfile(space, {p: float(v) for p, v in zip(space.points, draws)})


def random_meta_possibility(
    rng: np.random.Generator,
    space: FiniteSpace,
    max_support: int = 4,
    quantum: int | None = None,
) -> MetaPossibility:
    k = int(rng.integers(1, max_support + 1))
    draws = rng.uniform(0.0, 1.0, k)
    draws = draws / draws.max() if draws.max() > 0 else np.ones(k)
    pairs = tuple(
        (random_possibility_profile(rng, space, quantum=quantum), float(w))
        for w in draws
    )
    return MetaPossibility(pairs)


def random_weight_vector(
    rng: np.random.Generator, count: int, min_weight: float = -6.0, bottom_rate: float = 0.2
) -> np.ndarray:
    finite = rng.random(count) >= bottom_rate
    if not finite.any():
        finite[int(rng.integers(0, count))] = True
    draws = rng.uniform(min_weight, 0.0, count)
    out = np.where(finite, draws - draws[finite].max(), BOTTOM)
    return out


def random_generator_set(
    rng: np.random.Generator,
    dim: int,
    max_count: int = 5,
    lo: float = -4.0,
    hi: float = 4.0,
) -> GeneratorSet:
    count = int(rng.integers(2, max_count + 1))
    return GeneratorSet(rng.uniform(lo, hi, (count, dim)))


def random_meta_on_generators(
    rng: np.random.Generator, count: int, max_support: int = 4
) -> MetaDensity:
    """Meta density over the index space of a generator set."""
    return random_meta(rng, index_space(count), max_support)
