import math

import numpy as np
import pytest

from viviani import (
    ClosureViolation,
    ConvexPolygon,
    ConvexPolytopeH,
    DomainError,
    HyperplaneSet,
    InvalidPolygon,
    InvalidPolytope,
    NonPositiveLength,
    QuadrilateralClass,
    TriangleClass,
    UnknownSolid,
    VivianiError,
    apothem,
    classify_quadrilateral,
    classify_triangle,
    is_viviani_polygon,
    make_equiangular_polygon,
    platonic_solid_normals,
    polygon_to_hyperplanes,
    regular_polygon,
    signed_distance,
    tetrahedron_family,
    unsigned_distance_sum,
    viviani_defect,
    viviani_value,
)

from helpers import (
    closing_equiangular_sides,
    equilateral_triangle,
    random_convex_quadrilateral,
    random_equilateral_triangle,
    random_parallelogram,
    random_triangle,
)


class TestConvexPolygon:
    def test_clockwise_is_reoriented(self):
        ccw = ConvexPolygon(np.array([[0.0, 0], [1, 0], [1, 1], [0, 1]]))
        cw = ConvexPolygon(np.array([[0.0, 0], [0, 1], [1, 1], [1, 0]]))
        centroid = np.array([0.5, 0.5])
        for S in (polygon_to_hyperplanes(ccw), polygon_to_hyperplanes(cw)):
            assert all(signed_distance(centroid, p) > 0 for p in S)

    def test_rejects_nonconvex(self):
        dart = np.array([[0.0, 0], [4, 0], [1, 1], [0, 4]])
        with pytest.raises(InvalidPolygon):
            ConvexPolygon(dart)

    def test_rejects_collinear_edge(self):
        with pytest.raises(InvalidPolygon):
            ConvexPolygon(np.array([[0.0, 0], [1, 0], [2, 0], [1, 1]]))

    def test_rejects_repeated_vertex(self):
        with pytest.raises(InvalidPolygon):
            ConvexPolygon(np.array([[0.0, 0], [1, 0], [1, 0], [0, 1]]))

    def test_rejects_too_few(self):
        with pytest.raises(InvalidPolygon):
            ConvexPolygon(np.array([[0.0, 0], [1, 0]]))


class TestPolygonToHyperplanes:
    def test_unit_square(self):
        square = ConvexPolygon(np.array([[0.0, 0], [1, 0], [1, 1], [0, 1]]))
        S = polygon_to_hyperplanes(square)
        normals = S.normals.tolist()
        assert normals == [[0, -1], [1, 0], [0, 1], [-1, 0]]
        assert S.offsets.tolist() == [0, 1, 1, 0]

    def test_equilateral_normals_at_120_degrees(self):
        tri = ConvexPolygon(equilateral_triangle(2.0))
        S = polygon_to_hyperplanes(tri)
        N = S.normals
        for i in range(3):
            for j in range(i + 1, 3):
                assert float(N[i] @ N[j]) == pytest.approx(-0.5, abs=1e-12)
        assert viviani_defect(S) <= 1e-12

    def test_right_triangle_hypotenuse(self):
        tri = ConvexPolygon(np.array([[0.0, 0], [4, 0], [0, 3]]))
        S = polygon_to_hyperplanes(tri)
        hyp = S[1]
        assert hyp.normal == pytest.approx([3 / 5, 4 / 5], abs=1e-15)
        assert hyp.offset == pytest.approx(12 / 5, abs=1e-15)

    def test_outward_orientation(self):
        rng = np.random.default_rng(0)
        for _ in range(50):
            poly = random_convex_quadrilateral(rng)
            S = polygon_to_hyperplanes(poly)
            centroid = poly.vertices.mean(axis=0)
            assert all(signed_distance(centroid, p) > 0 for p in S)

    def test_edges_lie_on_their_planes(self):
        rng = np.random.default_rng(1)
        poly = random_triangle(rng)
        S = polygon_to_hyperplanes(poly)
        v = poly.vertices
        for i, p in enumerate(S):
            for vertex in (v[i], v[(i + 1) % 3]):
                assert abs(signed_distance(vertex, p)) <= 1e-12 * (1 + abs(p.offset))


class TestVivianiPolygon:
    def test_equilateral_true(self):
        assert is_viviani_polygon(ConvexPolygon(equilateral_triangle(1.0)))

    def test_parallelogram_true(self):
        quad = ConvexPolygon(np.array([[0.0, 0], [3, 0], [4, 2], [1, 2]]))
        assert is_viviani_polygon(quad)

    def test_trapezoid_false(self):
        quad = ConvexPolygon(np.array([[0.0, 0], [4, 0], [3, 2], [1, 2]]))
        assert not is_viviani_polygon(quad)


class TestClassifiers:
    def test_equilateral(self):
        tri = ConvexPolygon(np.array([[0.0, 0], [1, 0], [0.5, math.sqrt(3) / 2]]))
        assert classify_triangle(tri) is TriangleClass.EQUILATERAL

    def test_right_triangle(self):
        tri = ConvexPolygon(np.array([[0.0, 0], [4, 0], [0, 3]]))
        assert classify_triangle(tri) is TriangleClass.NOT_EQUILATERAL

    def test_rotated_translated_equilateral(self):
        rng = np.random.default_rng(2)
        for _ in range(20):
            assert classify_triangle(random_equilateral_triangle(rng)) is TriangleClass.EQUILATERAL

    def test_triangle_arity_check(self):
        with pytest.raises(VivianiError):
            classify_triangle(ConvexPolygon(np.array([[0.0, 0], [1, 0], [1, 1], [0, 1]])))

    def test_parallelogram_examples(self):
        quad = ConvexPolygon(np.array([[0.0, 0], [3, 0], [4, 2], [1, 2]]))
        assert classify_quadrilateral(quad) is QuadrilateralClass.PARALLELOGRAM
        trap = ConvexPolygon(np.array([[0.0, 0], [4, 0], [3, 2], [1, 2]]))
        assert classify_quadrilateral(trap) is QuadrilateralClass.NOT_PARALLELOGRAM
        square = ConvexPolygon(np.array([[0.0, 0], [1, 0], [1, 1], [0, 1]]))
        assert classify_quadrilateral(square) is QuadrilateralClass.PARALLELOGRAM

    def test_triangle_characterization_sample(self):
        rng = np.random.default_rng(3)
        for _ in range(100):
            tri = random_equilateral_triangle(rng) if rng.random() < 0.5 else random_triangle(rng)
            viviani = is_viviani_polygon(tri, tol=1e-6)
            equilateral = classify_triangle(tri, side_tol=1e-6) is TriangleClass.EQUILATERAL
            assert viviani == equilateral

    def test_quadrilateral_characterization_sample(self):
        rng = np.random.default_rng(4)
        for _ in range(100):
            if rng.random() < 0.5:
                quad = random_parallelogram(rng)
            else:
                quad = random_convex_quadrilateral(rng)
            viviani = is_viviani_polygon(quad, tol=1e-6)
            para = classify_quadrilateral(quad, tol=1e-6) is QuadrilateralClass.PARALLELOGRAM
            assert viviani == para


class TestEquiangular:
    def test_rectangle(self):
        rect = make_equiangular_polygon([2, 1, 2, 1])
        assert rect.vertices == pytest.approx(
            np.array([[0.0, 0], [2, 0], [2, 1], [0, 1]]), abs=1e-12
        )

    def test_regular_pentagon_defect(self):
        pent = make_equiangular_polygon([1, 1, 1, 1, 1])
        assert viviani_defect(polygon_to_hyperplanes(pent)) <= 1e-12

    def test_closure_violation(self):
        with pytest.raises(ClosureViolation):
            make_equiangular_polygon([1, 1, 2])

    def test_nonpositive_side(self):
        with pytest.raises(NonPositiveLength):
            make_equiangular_polygon([1, -1, 1, 1])

    def test_too_few_sides(self):
        with pytest.raises(VivianiError):
            make_equiangular_polygon([1, 1])

    def test_random_closing_sides(self):
        rng = np.random.default_rng(5)
        for _ in range(25):
            k = int(rng.integers(3, 13))
            poly = make_equiangular_polygon(closing_equiangular_sides(rng, k))
            assert poly.k == k
            assert viviani_defect(polygon_to_hyperplanes(poly)) <= 1e-9


class TestPlatonic:
    COUNTS = {
        "tetrahedron": 4,
        "cube": 6,
        "octahedron": 8,
        "dodecahedron": 12,
        "icosahedron": 20,
    }

    @pytest.mark.parametrize("name", sorted(COUNTS))
    def test_face_counts_units_and_defect(self, name):
        S = platonic_solid_normals(name)
        assert len(S) == self.COUNTS[name]
        assert np.abs(np.linalg.norm(S.normals, axis=1) - 1.0).max() <= 1e-12
        assert viviani_defect(S) <= 1e-12

    @pytest.mark.parametrize("name", sorted(COUNTS))
    def test_origin_inside_uniform_inradius(self, name):
        S = platonic_solid_normals(name)
        offs = S.offsets
        assert np.all(offs > 0)
        assert offs.max() - offs.min() <= 1e-12

    def test_cube_axis_aligned(self):
        S = platonic_solid_normals("cube")
        assert sorted(S.normals.tolist()) == sorted(
            [[1.0, 0, 0], [-1, 0, 0], [0, 1, 0], [0, -1, 0], [0, 0, 1], [0, 0, -1]]
        )

    def test_tetrahedron_pairwise_dots(self):
        N = platonic_solid_normals("tetrahedron").normals
        for i in range(4):
            for j in range(i + 1, 4):
                assert float(N[i] @ N[j]) == pytest.approx(-1 / 3, abs=1e-12)

    def test_unknown_solid(self):
        with pytest.raises(UnknownSolid):
            platonic_solid_normals("teapot")


class TestTetrahedronFamily:
    def test_quarter_turn_normals(self):
        S = tetrahedron_family(math.pi / 2)
        r = math.sqrt(2) / 2
        expected = np.array([
            [r, 0.5, 0.5],
            [-r, 0.5, 0.5],
            [0.0, -1.0, 0.0],
            [0.0, 0.0, -1.0],
        ])
        assert S.normals == pytest.approx(expected, abs=1e-12)
        assert np.linalg.norm(S.normals.sum(axis=0)) <= 1e-12

    def test_unit_normals_across_range(self):
        for t in np.linspace(0.01, math.pi - 0.01, 100):
            S = tetrahedron_family(float(t))
            assert np.abs(np.linalg.norm(S.normals, axis=1) - 1.0).max() <= 1e-12
            assert viviani_defect(S) <= 1e-12

    @pytest.mark.parametrize("t", [0.0, math.pi, -0.3, 4.0])
    def test_domain(self, t):
        with pytest.raises(DomainError):
            tetrahedron_family(t)

    def test_constant_value_is_four(self):
        S = tetrahedron_family(1.0)
        rng = np.random.default_rng(6)
        for _ in range(10):
            assert viviani_value(rng.uniform(-2, 2, size=3), S) == pytest.approx(4.0, abs=1e-12)


class TestUnsignedSum:
    def test_regular_pentagon_interior_constant(self):
        k, R = 5, 1.0
        pent = regular_polygon(k, R)
        S = polygon_to_hyperplanes(pent)
        expected = k * apothem(k, R)
        rng = np.random.default_rng(7)
        hits = 0
        while hits < 5:
            x = rng.uniform(-R, R, size=2)
            if all(signed_distance(x, p) > 1e-6 for p in S):
                assert unsigned_distance_sum(x, S) == pytest.approx(expected, abs=1e-12)
                hits += 1

    def test_exterior_strictly_larger(self):
        k, R = 5, 1.0
        S = polygon_to_hyperplanes(regular_polygon(k, R))
        expected = k * apothem(k, R)
        rng = np.random.default_rng(8)
        hits = 0
        while hits < 5:
            x = rng.uniform(-3 * R, 3 * R, size=2)
            if min(signed_distance(x, p) for p in S) < -1e-3:
                assert unsigned_distance_sum(x, S) > expected
                hits += 1

    def test_interior_matches_signed_value(self):
        rng = np.random.default_rng(9)
        poly = random_convex_quadrilateral(rng)
        S = polygon_to_hyperplanes(poly)
        w = rng.dirichlet(np.ones(4))
        interior = w @ poly.vertices
        assert unsigned_distance_sum(interior, S) == pytest.approx(
            viviani_value(interior, S), abs=1e-12
        )


class TestPolytopeH:
    def cube_set(self):
        normals = np.vstack([np.eye(3), -np.eye(3)])
        return HyperplaneSet.from_arrays(normals, np.ones(6))

    def test_cube_accepted(self):
        poly = ConvexPolytopeH(self.cube_set())
        x = poly.interior_point()
        assert all(signed_distance(x, p) > 0 for p in poly.halfspaces)

    def test_unbounded_rejected(self):
        normals = np.vstack([np.eye(3), -np.eye(3)])[:5]  # open on one side
        S = HyperplaneSet.from_arrays(normals, np.ones(5))
        with pytest.raises(InvalidPolytope):
            ConvexPolytopeH(S)

    def test_infeasible_rejected(self):
        # x <= 0 together with x >= 1, boxed in y
        normals = np.array([[1.0, 0], [-1, 0], [0, 1], [0, -1]])
        offsets = np.array([0.0, -1.0, 1.0, 1.0])
        with pytest.raises(InvalidPolytope):
            ConvexPolytopeH(HyperplaneSet.from_arrays(normals, offsets))

    def test_duplicate_plane_rejected(self):
        normals = np.vstack([np.eye(3), -np.eye(3), np.eye(3)[:1]])
        S = HyperplaneSet.from_arrays(normals, np.ones(7))
        with pytest.raises(InvalidPolytope):
            ConvexPolytopeH(S)

    @pytest.mark.parametrize(
        "name", ["tetrahedron", "cube", "octahedron", "dodecahedron", "icosahedron"]
    )
    def test_platonic_solids_accepted(self, name):
        ConvexPolytopeH(platonic_solid_normals(name))


class TestRegularPolygon:
    def test_vertices_on_circle(self):
        poly = regular_polygon(7, 2.5, center=(1.0, -2.0), phase=0.3)
        d = np.linalg.norm(poly.vertices - np.array([1.0, -2.0]), axis=1)
        assert d == pytest.approx(np.full(7, 2.5), abs=1e-12)

    def test_apothem_matches_plane_distance(self):
        k, R = 9, 1.0
        S = polygon_to_hyperplanes(regular_polygon(k, R))
        center = np.zeros(2)
        for p in S:
            assert signed_distance(center, p) == pytest.approx(apothem(k, R), abs=1e-12)
