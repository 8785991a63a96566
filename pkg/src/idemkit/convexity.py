"""Max-plus convex combinations, tropical hulls, and idempotent barycenters.

Points are plain coordinate arrays; a convex set is represented intensionally
by its generators, since a finite point set is essentially never closed under
the continuum of admissible combinations.  Membership in the generated hull
is decided by residuation: the greatest admissible weight vector is the only
candidate that can ever reproduce a point, because combinations are monotone
in every weight.

The barycenter map takes a normalized weight vector (a max-plus density over
the generators) to the point whose coordinates are the induced measures of
the coordinate functionals.  Its arithmetic is deliberately the same
expression as combine's, so the two agree bit for bit on identical inputs.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .measures import MaxPlusDensity, MetaDensity, multiply
from .semiring import resolve_tolerance
from .spaces import FiniteSpace

POINT_SLACK = 1e-9


@dataclass(frozen=True, eq=False)
class GeneratorSet:
    """Finite generating family in a fixed dimension; rows are points."""

    points: np.ndarray

    def __post_init__(self):
        pts = np.asarray(self.points, dtype=float)
        if pts.ndim != 2 or pts.shape[0] < 1 or pts.shape[1] < 1:
            raise ValueError("generators must form a non-empty 2-d array of coordinates")
        if not np.all(np.isfinite(pts)):
            raise ValueError("generator coordinates must be finite")
        for i in range(len(pts)):
            for j in range(i + 1, len(pts)):
                if np.max(np.abs(pts[i] - pts[j])) <= POINT_SLACK:
                    raise ValueError(f"generators {i} and {j} coincide")
        pts = pts.copy()
        pts.setflags(write=False)
        object.__setattr__(self, "points", pts)

    @property
    def dimension(self) -> int:
        return int(self.points.shape[1])

    def __len__(self) -> int:
        return int(self.points.shape[0])


def as_point(value, dimension: int | None = None) -> np.ndarray:
    p = np.asarray(value, dtype=float)
    if p.ndim != 1 or p.size < 1 or not np.all(np.isfinite(p)):
        raise ValueError("a point is a 1-d array of finite coordinates")
    if dimension is not None and p.size != dimension:
        raise ValueError(f"point has dimension {p.size}, expected {dimension}")
    return p


def as_weight_vector(weights, count: int) -> np.ndarray:
    """Validate weights: one per generator, each in [-inf, 0], peak exactly 0."""
    lam = np.asarray(weights, dtype=float)
    if lam.ndim != 1 or lam.size != count:
        raise ValueError(f"expected {count} weights, got shape {lam.shape}")
    if np.any(np.isnan(lam)) or np.any(lam == np.inf):
        raise ValueError("weights must be scores (finite or -inf)")
    if np.any(lam > 0.0):
        raise ValueError("weights must be non-positive")
    if lam.max() != 0.0:
        raise ValueError(f"max weight is {lam.max()!r}, expected 0")
    return lam


def _max_combination(points: np.ndarray, lam: np.ndarray) -> np.ndarray:
    # shared by combine and barycenter so the two are bitwise identical
    return np.max(points + lam[:, None], axis=0)


def combine(gens: GeneratorSet, lam) -> np.ndarray:
    """Coordinatewise max of (weight + generator); bottom weights drop out."""
    lam = as_weight_vector(lam, len(gens))
    return _max_combination(gens.points, lam)


def barycenter(gens: GeneratorSet, weights) -> np.ndarray:
    """Point whose coordinate t is the measure of the t-th coordinate
    functional under the weight density."""
    lam = as_weight_vector(weights, len(gens))
    return _max_combination(gens.points, lam)


def residual_weights(p: np.ndarray, gens: GeneratorSet) -> np.ndarray:
    """Greatest admissible weights: lam_i = min(0, min_t(p_t - x_it))."""
    return np.minimum(0.0, np.min(p[None, :] - gens.points, axis=1))


def hull_member(point, gens: GeneratorSet, tol: float | None = None) -> bool:
    """Membership in the generated hull.

    Combinations are monotone in each weight, so the residuation candidate
    succeeds iff any admissible weight vector does; if even its peak sits
    below 0 no normalized combination can dominate the point.
    """
    tol = resolve_tolerance(tol)
    p = as_point(point, gens.dimension)
    lam = residual_weights(p, gens)
    peak = lam.max()
    if peak < -tol:
        return False
    return bool(np.max(np.abs(combine(gens, lam - peak) - p)) <= tol)


def index_space(count: int, prefix: str = "g") -> FiniteSpace:
    """Label space for generator indices, used to put densities on generators."""
    return FiniteSpace(tuple(f"{prefix}{i}" for i in range(count)))


def density_weights(f: MaxPlusDensity) -> np.ndarray:
    """Weight vector of a density over an index space, in point order."""
    return np.array([f.weights[p] for p in f.space.points])


def barycenter_member(point, gens: GeneratorSet, tol: float | None = None) -> bool:
    """Membership decided through the barycenter route: does some weight
    density land on the point?  Uses the same residuation candidate but
    walks it through the density type and the barycenter map."""
    tol = resolve_tolerance(tol)
    p = as_point(point, gens.dimension)
    lam = residual_weights(p, gens)
    peak = lam.max()
    if peak < -tol:
        return False
    dens = MaxPlusDensity(
        index_space(len(gens)), {f"g{i}": v for i, v in enumerate(lam - peak)}
    )
    return bool(np.max(np.abs(barycenter(gens, density_weights(dens)) - p)) <= tol)


def check_algebra(gens: GeneratorSet, N: MetaDensity, tol: float | None = None) -> bool:
    """Barycenter absorbs the monad multiplication.

    Left: barycenter of the multiplied meta.  Right: map every support
    density to its barycenter point and combine those images under the
    meta's weights.  The two must agree coordinatewise.
    """
    tol = resolve_tolerance(tol)
    if N.space != index_space(len(gens)):
        raise ValueError("meta density must live on the generator index space")
    left = barycenter(gens, density_weights(multiply(N)))
    images = np.stack([_max_combination(gens.points, density_weights(f)) for f, _ in N.support])
    outer = np.array([w for _, w in N.support])
    right = _max_combination(images, outer)
    return bool(np.max(np.abs(left - right)) <= tol)


def check_convexity_equivalence(
    gens: GeneratorSet, grid, tol: float | None = None
) -> bool:
    """Hull membership and barycenter reachability give the same verdict on
    every probe point."""
    pts = np.asarray(grid, dtype=float)
    if pts.ndim != 2 or pts.shape[1] != gens.dimension:
        raise ValueError("grid points must match the generator dimension")
    return all(
        hull_member(p, gens, tol) == barycenter_member(p, gens, tol) for p in pts
    )


def bounding_grid(gens: GeneratorSet, per_axis: int = 11) -> np.ndarray:
    """Regular grid spanning the generators' bounding box."""
    if per_axis < 1:
        raise ValueError("per_axis must be positive")
    lo = gens.points.min(axis=0)
    hi = gens.points.max(axis=0)
    axes = [np.linspace(lo[t], hi[t], per_axis) for t in range(gens.dimension)]
    mesh = np.meshgrid(*axes, indexing="ij")
    return np.stack([m.ravel() for m in mesh], axis=1)
