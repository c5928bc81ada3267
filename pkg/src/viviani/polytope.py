"""Convex polygons and polytopes as oriented hyperplane sets.

The planar types store counterclockwise vertex lists; converting to
hyperplanes yields one plane per edge with the normal pointing away from
the interior, so every interior point has all signed distances positive.
Generators cover the families with identically-cancelling outward normals:
equiangular polygons, the five regular polyhedra, and a one-parameter
family of irregular tetrahedra.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import (
    ClosureViolation,
    DomainError,
    InvalidPolygon,
    InvalidPolytope,
    NonPositiveLength,
    UnknownSolid,
    VivianiError,
)
from .geometry import (
    DEFAULT_TOL,
    HyperplaneSet,
    as_vector,
    is_viviani,
    make_hyperplane_from_anchor,
)

_REL_EPS = 1e-12  # relative threshold for degeneracy checks, scaled by diameter


@dataclass(frozen=True, eq=False)
class ConvexPolygon:
    """Strictly convex polygon, vertices stored counterclockwise.

    Clockwise input is reoriented silently (orientation is presentation, the
    outward-normal contract is what matters).  Repeated vertices or collinear
    edges are rejected.  "Diameter" below always means the bounding-box
    diagonal, which is within sqrt(2) of the true diameter.
    """

    vertices: np.ndarray

    def __post_init__(self):
        v = np.array(self.vertices, dtype=float)
        if v.ndim != 2 or v.shape[1] != 2:
            raise InvalidPolygon("vertices must be an (k, 2) array")
        if v.shape[0] < 3:
            raise InvalidPolygon("a polygon needs at least 3 vertices")
        if not np.all(np.isfinite(v)):
            raise InvalidPolygon("vertex coordinates must be finite")
        diam = float(np.linalg.norm(v.max(axis=0) - v.min(axis=0)))
        if diam <= 0.0:
            raise InvalidPolygon("all vertices coincide")
        # shoelace sign; flip clockwise input to counterclockwise
        x, y = v[:, 0], v[:, 1]
        area2 = float(np.sum(x * np.roll(y, -1) - np.roll(x, -1) * y))
        if area2 < 0.0:
            v = v[::-1].copy()
        edges = np.roll(v, -1, axis=0) - v
        if np.any(np.linalg.norm(edges, axis=1) <= _REL_EPS * diam):
            raise InvalidPolygon("repeated vertices")
        cross = edges[:, 0] * np.roll(edges[:, 1], -1) - edges[:, 1] * np.roll(edges[:, 0], -1)
        if np.any(cross <= _REL_EPS * diam * diam):
            raise InvalidPolygon("polygon is not strictly convex")
        v.flags.writeable = False
        object.__setattr__(self, "vertices", v)

    @property
    def k(self) -> int:
        return self.vertices.shape[0]

    @property
    def diameter(self) -> float:
        v = self.vertices
        return float(np.linalg.norm(v.max(axis=0) - v.min(axis=0)))

    def side_lengths(self) -> np.ndarray:
        edges = np.roll(self.vertices, -1, axis=0) - self.vertices
        return np.linalg.norm(edges, axis=1)


class TriangleClass(Enum):
    EQUILATERAL = "equilateral"
    NOT_EQUILATERAL = "not_equilateral"


class QuadrilateralClass(Enum):
    PARALLELOGRAM = "parallelogram"
    NOT_PARALLELOGRAM = "not_parallelogram"


def polygon_to_hyperplanes(G: ConvexPolygon) -> HyperplaneSet:
    """One oriented line per edge, normal pointing away from the interior.

    Each line passes through both endpoints of its edge; for counterclockwise
    vertices the outward normal of edge direction (dx, dy) is (dy, -dx).
    """
    v = G.vertices
    planes = []
    for i in range(G.k):
        a = v[i]
        d = v[(i + 1) % G.k] - a
        planes.append(make_hyperplane_from_anchor((d[1], -d[0]), a))
    return HyperplaneSet(tuple(planes))


def is_viviani_polygon(G: ConvexPolygon, tol: float = DEFAULT_TOL) -> bool:
    """Whether the polygon's outward edge normals cancel (defect <= tol)."""
    return is_viviani(polygon_to_hyperplanes(G), tol)


def classify_triangle(G: ConvexPolygon, side_tol: float = 1e-9) -> TriangleClass:
    """Equilateral iff all three side lengths agree within side_tol * diameter.

    At matching tolerances this agrees with :func:`is_viviani_polygon`: the
    triangles with cancelling outward normals are exactly the equilateral ones.
    """
    if G.k != 3:
        raise VivianiError(f"expected a triangle, got {G.k} vertices")
    s = G.side_lengths()
    if float(s.max() - s.min()) <= side_tol * G.diameter:
        return TriangleClass.EQUILATERAL
    return TriangleClass.NOT_EQUILATERAL


def classify_quadrilateral(G: ConvexPolygon, tol: float = 1e-9) -> QuadrilateralClass:
    """Parallelogram iff both pairs of opposite edge vectors are negatives.

    Tolerance is relative to the diameter.  Agrees with
    :func:`is_viviani_polygon` at matching tolerances: the quadrilaterals
    with cancelling outward normals are exactly the parallelograms.
    """
    if G.k != 4:
        raise VivianiError(f"expected a quadrilateral, got {G.k} vertices")
    e = np.roll(G.vertices, -1, axis=0) - G.vertices
    scale = tol * G.diameter
    if np.linalg.norm(e[0] + e[2]) <= scale and np.linalg.norm(e[1] + e[3]) <= scale:
        return QuadrilateralClass.PARALLELOGRAM
    return QuadrilateralClass.NOT_PARALLELOGRAM


def unsigned_distance_sum(P, S: HyperplaneSet) -> float:
    """Sum of |signed distance| from ``P`` to each plane of ``S``.

    Inside a convex polytope with outward normals this coincides with the
    signed sum; outside it is strictly larger.
    """
    x = as_vector(P, dim=S.dimension)
    return float(np.sum(np.abs(S.offsets - S.normals @ x)))


def make_equiangular_polygon(side_lengths) -> ConvexPolygon:
    """Equiangular k-gon with the given side lengths.

    Edge i runs in direction (cos, sin) of angle 2*pi*i/k, starting at the
    origin, so every exterior angle equals 2*pi/k.  The lengths must close:
    sum of s_i * (cos, sin)(2*pi*i/k) must vanish within 1e-9 of the
    perimeter, else :class:`ClosureViolation`.  Outward edge normals of the
    result are the k equally spaced unit vectors, so the defect of the edge
    set is at floating-point noise (a closure residual at the tolerance limit
    leaks only into the final edge's normal).
    """
    s = np.asarray(side_lengths, dtype=float).reshape(-1)
    k = s.size
    if k < 3:
        raise VivianiError("an equiangular polygon needs at least 3 sides")
    if not np.all(np.isfinite(s)):
        raise NonPositiveLength("side lengths must be finite")
    if np.any(s <= 0.0):
        raise NonPositiveLength("side lengths must be strictly positive")
    theta = 2.0 * np.pi * np.arange(k) / k
    dirs = np.column_stack([np.cos(theta), np.sin(theta)])
    residual = s @ dirs
    if np.linalg.norm(residual) > 1e-9 * float(s.sum()):
        raise ClosureViolation(
            f"side lengths do not close: residual {residual.tolist()} "
            f"exceeds 1e-9 of the perimeter"
        )
    steps = dirs * s[:, None]
    vertices = np.vstack([np.zeros(2), np.cumsum(steps[:-1], axis=0)])
    return ConvexPolygon(vertices)


def regular_polygon(k: int, circumradius: float = 1.0, center=(0.0, 0.0),
                    phase: float = 0.0) -> ConvexPolygon:
    """Regular k-gon with the given circumradius, center and first-vertex angle."""
    if k < 3:
        raise VivianiError("a polygon needs at least 3 vertices")
    if circumradius <= 0.0:
        raise NonPositiveLength("circumradius must be positive")
    c = as_vector(center, dim=2)
    ang = phase + 2.0 * np.pi * np.arange(k) / k
    return ConvexPolygon(c + circumradius * np.column_stack([np.cos(ang), np.sin(ang)]))


def apothem(k: int, circumradius: float = 1.0) -> float:
    """Center-to-side distance of a regular k-gon."""
    return circumradius * math.cos(math.pi / k)


# --- regular polyhedra ------------------------------------------------------

_PHI = (1.0 + math.sqrt(5.0)) / 2.0


def _cyclic(coords):
    x, y, z = coords
    return [(x, y, z), (z, x, y), (y, z, x)]


def _signs(pattern):
    """All sign choices applied to the nonzero entries of each pattern."""
    out = []
    for p in pattern:
        nz = [i for i, c in enumerate(p) if c != 0.0]
        for bits in range(1 << len(nz)):
            q = list(p)
            for b, i in enumerate(nz):
                if bits >> b & 1:
                    q[i] = -q[i]
            out.append(tuple(q))
    return sorted(set(out))


def _unit_rows(rows) -> np.ndarray:
    a = np.asarray(rows, dtype=float)
    return a / np.linalg.norm(a, axis=1)[:, None]


def _icosahedron_data():
    """Unit icosahedron vertices plus its 20 face-center directions.

    Faces are the triangles of the edge graph (nearest-neighbor pairs of the
    golden-ratio coordinates).  Face centroids of antipodal faces are exact
    negations, so the returned directions cancel exactly in floating point.
    """
    raw = np.array(_signs(_cyclic((0.0, 1.0, _PHI))))
    d2 = ((raw[:, None, :] - raw[None, :, :]) ** 2).sum(axis=-1)
    edge2 = d2[d2 > 0].min()
    adj = (d2 > 0) & (d2 <= edge2 * (1.0 + 1e-9))
    centers = []
    m = raw.shape[0]
    for i in range(m):
        for j in range(i + 1, m):
            if not adj[i, j]:
                continue
            for l in range(j + 1, m):
                if adj[i, l] and adj[j, l]:
                    centers.append(raw[i] + raw[j] + raw[l])
    return _unit_rows(raw), _unit_rows(centers)


_SOLIDS = ("tetrahedron", "cube", "octahedron", "dodecahedron", "icosahedron")


def platonic_solid_normals(name: str) -> HyperplaneSet:
    """Face planes of the unit-circumradius regular polyhedron ``name``.

    Centered at the origin in a fixed orientation (cube axis-aligned, the
    others from the usual golden-ratio coordinates).  Face normals are the
    vertex directions of the dual solid; each offset is the largest dot
    product of a vertex with the face normal, i.e. the inradius, so the
    planes are exactly the supporting planes of the faces and all normals
    point outward.
    """
    if name not in _SOLIDS:
        raise UnknownSolid(f"unknown solid {name!r}; expected one of {_SOLIDS}")
    if name == "tetrahedron":
        verts = _unit_rows([(1, 1, 1), (1, -1, -1), (-1, 1, -1), (-1, -1, 1)])
        normals = -verts
    elif name == "cube":
        verts = _unit_rows(_signs([(1.0, 1.0, 1.0)]))
        normals = np.vstack([np.eye(3), -np.eye(3)])
    elif name == "octahedron":
        verts = np.vstack([np.eye(3), -np.eye(3)])
        normals = _unit_rows(_signs([(1.0, 1.0, 1.0)]))
    elif name == "dodecahedron":
        ico_verts, ico_faces = _icosahedron_data()
        verts, normals = ico_faces, ico_verts
    else:
        verts, normals = _icosahedron_data()
    offsets = (verts @ normals.T).max(axis=0)
    return HyperplaneSet.from_arrays(normals, offsets)


def tetrahedron_family(t: float) -> HyperplaneSet:
    """Irregular tetrahedra, one for each t in (0, pi), all with defect zero.

    The four face planes are tangent to the unit sphere (offset 1) with unit
    normals

        ( cos(t/2), sin(t)/2, (1 - cos t)/2)
        (-cos(t/2), sin(t)/2, (1 - cos t)/2)
        ( 0, -sin t, cos t)
        ( 0, 0, -1)

    which cancel identically in t.  Endpoints are excluded: at t = 0 or pi
    two normals coincide and the region degenerates.
    """
    t = float(t)
    if not 0.0 < t < math.pi:
        raise DomainError(f"t must lie strictly between 0 and pi, got {t!r}")
    half = math.cos(t / 2.0)
    sy = math.sin(t) / 2.0
    sz = (1.0 - math.cos(t)) / 2.0
    normals = np.array([
        [half, sy, sz],
        [-half, sy, sz],
        [0.0, -math.sin(t), math.cos(t)],
        [0.0, 0.0, -1.0],
    ])
    return HyperplaneSet.from_arrays(normals, np.ones(4))


# --- validated H-representation ----------------------------------------------

@dataclass(frozen=True, eq=False)
class ConvexPolytopeH:
    """Bounded full-dimensional intersection of half-spaces {x : n.x <= c}.

    Construction verifies that the planes are pairwise distinct as oriented
    objects and probes boundedness and interior nonemptiness numerically
    (subgradient descent with seeded random restarts, no LP).  The probes are
    probabilistic: for generic inputs the chance of a wrong verdict is far
    below 1e-6 per construction, but adversarially thin polytopes may be
    misjudged.
    """

    halfspaces: HyperplaneSet

    def __post_init__(self):
        hs = self.halfspaces
        if not isinstance(hs, HyperplaneSet):
            hs = HyperplaneSet(tuple(hs))
            object.__setattr__(self, "halfspaces", hs)
        N, c = hs.normals, hs.offsets
        scale = 1.0 + float(np.abs(c).max())
        for i in range(len(hs)):
            for j in range(i + 1, len(hs)):
                if (np.linalg.norm(N[i] - N[j]) <= 1e-9
                        and abs(c[i] - c[j]) <= 1e-9 * scale):
                    raise InvalidPolytope(f"halfspaces {i} and {j} coincide")
        if not _positively_spans(N):
            raise InvalidPolytope("region is unbounded (normals do not positively span)")
        x = _interior_probe(N, c)
        if x is None:
            raise InvalidPolytope("region has empty interior")
        x.flags.writeable = False
        object.__setattr__(self, "_interior_point", x)

    @property
    def dimension(self) -> int:
        return self.halfspaces.dimension

    def interior_point(self) -> np.ndarray:
        """A point strictly inside the region (found during validation)."""
        return self._interior_point


def _positively_spans(N: np.ndarray) -> bool:
    """Whether no unit u satisfies n_i . u <= 0 for all rows n_i.

    Equivalent to boundedness of {x : Nx <= c} (for feasible c): an escape
    direction is a nonzero point of the cone {u : Nu <= 0}, and a nonzero
    polyhedral cone contains a common null direction of all rows or an
    extreme ray, i.e. a null direction of some n-1 rows.  Shortcuts first:
    rows that cancel and span the space positively span it (any vector is a
    nonnegative combination after adding enough of the zero sum).  For face
    counts where enumerating row subsets is infeasible, falls back to a
    seeded subgradient probe with a coarse threshold (documented as
    probabilistic in :class:`ConvexPolytopeH`).
    """
    from itertools import combinations

    k, n = N.shape
    if k <= n:
        return False  # fewer than n+1 halfspaces can never bound a region
    if np.linalg.matrix_rank(N, tol=1e-9) < n:
        return False  # common null direction
    if np.linalg.norm(N.sum(axis=0)) <= DEFAULT_TOL:
        return True
    if n == 1:
        return bool(N.min() < 0.0 < N.max())
    if math.comb(k, n - 1) <= 20000:
        for idx in combinations(range(k), n - 1):
            sub = N[list(idx)]
            s = np.linalg.svd(sub, compute_uv=False)
            if s[-1] <= 1e-9:
                continue  # nullity > 1; its rays recur in independent subsets
            ray = np.linalg.svd(sub)[2][-1]
            for cand in (ray, -ray):
                if float(np.max(N @ cand)) <= 1e-9:
                    return False
        return True
    return _span_probe(N)


def _span_probe(N: np.ndarray, restarts: int = 64, iters: int = 400) -> bool:
    """Probabilistic fallback: minimize max_i n_i . u over the sphere by
    projected subgradient descent from seeded random starts; a small best
    value means a near-escape direction exists."""
    rng = np.random.default_rng(1234)
    n = N.shape[1]
    best = np.inf
    for _ in range(restarts):
        u = rng.normal(size=n)
        u /= np.linalg.norm(u)
        for it in range(iters):
            d = N @ u
            i = int(np.argmax(d))
            best = min(best, float(d[i]))
            u = u - (0.5 / math.sqrt(it + 1.0)) * N[i]
            nu = np.linalg.norm(u)
            if nu <= 1e-12:
                break
            u /= nu
        if best <= 1e-2:
            return False
    return True


def _interior_probe(N: np.ndarray, c: np.ndarray, iters: int = 2000):
    """Point with max_i (n_i . x - c_i) < 0, or None if none was found.

    Subgradient descent on the (convex, piecewise-linear) worst violation,
    started from the centroid of the anchor feet of the planes.
    """
    scale = 1.0 + float(np.abs(c).max())
    x = (c[:, None] * N).mean(axis=0)
    best_x, best_g = x.copy(), np.inf
    for it in range(iters):
        viol = N @ x - c
        i = int(np.argmax(viol))
        g = float(viol[i])
        if g < best_g:
            best_g, best_x = g, x.copy()
        if g < -1e-6 * scale:
            break
        x = x - (scale / math.sqrt(it + 1.0)) * N[i]
    if best_g < -1e-9 * scale:
        return best_x
    return None
