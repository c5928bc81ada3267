"""Oriented hyperplanes and signed-distance sums.

An oriented hyperplane in R^n is stored as a unit normal ``n`` and a scalar
offset ``c``; the hyperplane is ``{x : n.x = c}`` and the normal points into
the half-space ``n.x > c``.  The signed distance of a point ``P`` is
``c - n.P``: zero on the plane, *negative* when the normal points into the
half-space containing ``P``, and ``|c - n.P|`` is always the Euclidean
distance to the plane.

For a finite multiset of oriented hyperplanes the value function

    v(P) = sum of signed distances from P to each plane

is affine with gradient ``-(n_1 + ... + n_k)``.  It is therefore constant
exactly when the unit normals cancel; we call such a set *Viviani* (after
the classical constant-sum theorem for equilateral triangles).  The norm of
the normal sum is the *defect*: the rate at which v changes per unit length
along the normal-sum direction.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .errors import DimensionMismatch, NonUnitNormal, VivianiError, ZeroNormal

#: Absolute tolerance on the defect below which a set counts as Viviani.
#: The defect is a sum of at most k unit vectors, so an absolute threshold
#: is scale-free in the coordinates.
DEFAULT_TOL = 1e-9

_ZERO_NORM = 1e-12
_UNIT_SLACK = 1e-9


def as_vector(coords, dim: int | None = None) -> np.ndarray:
    """Validate and return ``coords`` as a read-only float vector.

    Entries must be finite and the length at least 1; ``dim``, when given,
    pins the expected dimension.
    """
    v = np.array(coords, dtype=float, copy=True).reshape(-1)
    if v.size < 1:
        raise VivianiError("vector needs at least one coordinate")
    if not np.all(np.isfinite(v)):
        raise VivianiError("vector coordinates must be finite")
    if dim is not None and v.size != dim:
        raise DimensionMismatch(f"expected dimension {dim}, got {v.size}")
    v.flags.writeable = False
    return v


@dataclass(frozen=True, eq=False)
class OrientedHyperplane:
    """Hyperplane ``{x : normal.x = offset}`` with a unit normal.

    The constructor rejects normals whose length deviates from 1 by more
    than 1e-9; use :func:`make_hyperplane_from_anchor` when you hold an
    unnormalized direction.
    """

    normal: np.ndarray
    offset: float

    def __post_init__(self):
        n = as_vector(self.normal)
        if abs(float(np.linalg.norm(n)) - 1.0) > _UNIT_SLACK:
            raise NonUnitNormal(
                f"normal has length {np.linalg.norm(n)!r}, expected 1 within {_UNIT_SLACK}"
            )
        c = float(self.offset)
        if not np.isfinite(c):
            raise VivianiError("offset must be finite")
        object.__setattr__(self, "normal", n)
        object.__setattr__(self, "offset", c)

    @property
    def dimension(self) -> int:
        return self.normal.size

    def __repr__(self) -> str:
        return f"OrientedHyperplane(normal={self.normal.tolist()}, offset={self.offset})"


@dataclass(frozen=True, eq=False)
class HyperplaneSet:
    """Nonempty ordered multiset of oriented hyperplanes of one dimension."""

    planes: tuple[OrientedHyperplane, ...]

    def __post_init__(self):
        planes = tuple(self.planes)
        if not planes:
            raise VivianiError("a hyperplane set must contain at least one plane")
        dim = planes[0].dimension
        for p in planes:
            if p.dimension != dim:
                raise DimensionMismatch(
                    f"mixed dimensions in hyperplane set: {dim} and {p.dimension}"
                )
        object.__setattr__(self, "planes", planes)

    @property
    def dimension(self) -> int:
        return self.planes[0].dimension

    def __len__(self) -> int:
        return len(self.planes)

    def __iter__(self) -> Iterator[OrientedHyperplane]:
        return iter(self.planes)

    def __getitem__(self, i) -> OrientedHyperplane:
        return self.planes[i]

    @property
    def normals(self) -> np.ndarray:
        """Normals stacked as a (k, n) array."""
        return np.array([p.normal for p in self.planes])

    @property
    def offsets(self) -> np.ndarray:
        return np.array([p.offset for p in self.planes])

    @classmethod
    def from_arrays(cls, normals, offsets) -> "HyperplaneSet":
        normals = np.asarray(normals, dtype=float)
        offsets = np.asarray(offsets, dtype=float).reshape(-1)
        if normals.ndim != 2 or normals.shape[0] != offsets.size:
            raise VivianiError("need one offset per normal row")
        return cls(tuple(OrientedHyperplane(n, c) for n, c in zip(normals, offsets)))


def make_hyperplane_from_anchor(normal_raw, anchor) -> OrientedHyperplane:
    """Hyperplane through ``anchor`` oriented along ``normal_raw``.

    The direction is normalized; the offset is fixed so the anchor lies on
    the plane.  Raises :class:`ZeroNormal` for directions shorter than 1e-12
    and :class:`DimensionMismatch` when the two vectors disagree.
    """
    d = as_vector(normal_raw)
    a = as_vector(anchor, dim=d.size)
    length = float(np.linalg.norm(d))
    if length <= _ZERO_NORM:
        raise ZeroNormal(f"direction norm {length!r} is below {_ZERO_NORM}")
    n = d / length
    return OrientedHyperplane(n, float(n @ a))


def signed_distance(P, p: OrientedHyperplane) -> float:
    """Signed distance from point ``P`` to plane ``p`` (``offset - normal.P``).

    Negative exactly when the normal points into the open half-space
    containing ``P``; the absolute value is the Euclidean distance.
    """
    x = as_vector(P, dim=p.dimension)
    return float(p.offset - p.normal @ x)


def viviani_value(P, S: HyperplaneSet) -> float:
    """Sum of signed distances from ``P`` to every plane of ``S``."""
    x = as_vector(P, dim=S.dimension)
    return float(np.sum(S.offsets - S.normals @ x))


def viviani_values(points, S: HyperplaneSet) -> np.ndarray:
    """Vectorized :func:`viviani_value` over the rows of ``points``."""
    pts = np.atleast_2d(np.asarray(points, dtype=float))
    if pts.shape[1] != S.dimension:
        raise DimensionMismatch(
            f"points have dimension {pts.shape[1]}, planes {S.dimension}"
        )
    return np.sum(S.offsets[None, :] - pts @ S.normals.T, axis=1)


def normal_sum(S: HyperplaneSet) -> np.ndarray:
    """Componentwise sum of the unit normals."""
    out = np.sum(S.normals, axis=0)
    out.flags.writeable = False
    return out


def viviani_defect(S: HyperplaneSet) -> float:
    """Norm of the normal sum; zero exactly for Viviani sets.

    Equals the magnitude of the gradient of v, i.e. how fast the
    signed-distance sum drifts per unit length in the worst direction.
    """
    return float(np.linalg.norm(normal_sum(S)))


def is_viviani(S: HyperplaneSet, tol: float = DEFAULT_TOL) -> bool:
    """Whether the signed-distance sum of ``S`` is constant (defect <= tol).

    Depends only on the unit normals, never on the offsets.
    """
    if tol <= 0:
        raise VivianiError("tolerance must be positive")
    return viviani_defect(S) <= tol


def viviani_gradient(S: HyperplaneSet) -> np.ndarray:
    """Gradient of the (affine) signed-distance sum: minus the normal sum.

    For any two points P, Q: ``v(Q) - v(P) == gradient . (Q - P)``.
    """
    out = -np.sum(S.normals, axis=0)
    out.flags.writeable = False
    return out


def level_set_direction(S: HyperplaneSet) -> np.ndarray | None:
    """Unit direction along which v decreases fastest, or None if constant.

    None when ``S`` is Viviani at the default tolerance.  Otherwise returns
    ``normal_sum / defect``; a unit step along it changes v by exactly minus
    the defect, and the level sets of v are the hyperplanes orthogonal to it.
    """
    s = normal_sum(S)
    d = float(np.linalg.norm(s))
    if d <= DEFAULT_TOL:
        return None
    out = s / d
    out.flags.writeable = False
    return out

