"""Exact polytope geometry: hulls, facets, splits, maps, serialization."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from minkval.geometry import (
    convex_hull,
    cross_product,
    DimensionMismatchError,
    dot,
    EmptyInputError,
    halfspace_split,
    hat_simplex,
    in_hull,
    LinearMap,
    mat_det,
    OriginNotContainedError,
    Polytope,
    polytope_close,
    polytope_from_json,
    polytope_to_json,
    primitive_int,
    SingularMapError,
    standard_simplex,
    transform_phi,
    triangulate_points,
    unit_vec,
    vscale,
    zero_vec,
)

F = Fraction


class TestHull:
    def test_interior_points_pruned(self):
        P = convex_hull([(0, 0), (2, 0), (0, 2), (1, 1), (F(1, 2), F(1, 2))])
        assert set(P.vertices) == {(0, 0), (2, 0), (0, 2)}

    def test_cube_vertices(self, cube3):
        assert len(cube3.vertices) == 8
        assert cube3.dim == 3

    def test_duplicate_points_collapse(self):
        P = convex_hull([(0, 0), (1, 0), (1, 0), (0, 1)])
        assert len(P.vertices) == 3

    def test_empty_input(self):
        with pytest.raises(EmptyInputError):
            convex_hull([])

    def test_origin_required(self):
        with pytest.raises(OriginNotContainedError):
            convex_hull([(1, 0), (2, 0), (1, 1)])
        P = convex_hull([(1, 0), (2, 0), (1, 1)], require_origin=False)
        assert P.dim == 2

    def test_mixed_dimension_rejected(self):
        with pytest.raises(DimensionMismatchError):
            convex_hull([(0, 0), (1, 0, 0)])


class TestDimensionAndVolume:
    def test_simplex_dim_chain(self):
        for d in range(1, 5):
            assert standard_simplex(d, 4).dim == d

    def test_cube_volume(self, cube3):
        assert cube3.volume == 8

    def test_simplex_volume(self):
        for n in (2, 3, 4):
            T = standard_simplex(n, n)
            fact = 1
            for k in range(2, n + 1):
                fact *= k
            assert T.volume == F(1, fact)

    def test_scaling_volume(self, tri3):
        assert tri3.scale(F(1, 2)).volume == tri3.volume / 8

    def test_lower_dim_volume_zero(self, tri2in3):
        assert tri2in3.volume == 0

    def test_triangulation_volumes_add(self, cube3):
        total = F(0)
        for cell in cube3.triangulation():
            rows = [tuple(F(a) - F(b) for a, b in zip(v, cell[0]))
                    for v in cell[1:]]
            total += abs(mat_det(rows))
        assert total / 6 == cube3.volume


class TestSupport:
    def test_cube_support(self, cube3):
        assert cube3.support((1, 2, 3)) == 6
        assert cube3.support((-1, -2, -3)) == 6
        assert cube3.support((0, 0, 0)) == 0

    def test_simplex_support(self, tri3):
        assert tri3.support((1, 2, 3)) == 3
        assert tri3.support((-1, -1, -1)) == 0

    def test_rational_exactness(self):
        P = convex_hull([(0, 0), (F(1, 3), 0), (0, F(1, 7))])
        assert P.support((21, 0)) == 7
        assert P.support((0, 21)) == 3

    @given(st.tuples(*[st.integers(-20, 20)] * 3),
           st.tuples(*[st.integers(-20, 20)] * 3))
    @settings(max_examples=60, deadline=None)
    def test_subadditive(self, x, y):
        P = convex_hull([(0, 0, 0), (2, 0, 0), (0, 3, 0), (0, 0, 1), (1, 1, 1)])
        xy = tuple(a + b for a, b in zip(x, y))
        assert P.support(xy) <= P.support(x) + P.support(y)

    @given(st.tuples(*[st.integers(-10, 10)] * 3), st.fractions(0, 5))
    @settings(max_examples=40, deadline=None)
    def test_positive_homogeneity(self, x, lam):
        P = convex_hull([(0, 0, 0), (2, 0, 0), (0, 3, 0), (0, 0, 1)])
        assert P.support(vscale(lam, x)) == lam * P.support(x)


class TestFacets:
    def test_normals_primitive_and_outward(self, cube3):
        assert len(cube3.facets) == 6
        for f in cube3.facets:
            g = 0
            for c in f.normal:
                g = abs(c) if g == 0 else __import__("math").gcd(g, abs(int(c)))
            assert g == 1
            assert f.offset == cube3.support(f.normal)

    def test_area_vectors_close(self, tri3):
        n = tri3.n
        total = zero_vec(n)
        for f in tri3.facets:
            total = tuple(t + f.weight * c for t, c in zip(total, f.normal))
        assert all(c == 0 for c in total)

    def test_facet_weights_cube(self, cube3):
        for f in cube3.facets:
            assert f.weight == 4

    def test_lower_dim_has_no_facets(self, tri2in3):
        assert tri2in3.facets == ()

    def test_surface_atom(self, tri2in3):
        N0, t = tri2in3.surface_atom()
        assert dot(N0, (1, 0, 0)) == 0 or N0 == (0, 0, 1)
        assert t == F(1, 2)


class TestOriginLocation:
    def test_interior(self, cube3):
        assert cube3.origin_location() == "interior"

    def test_boundary_vertex(self, tri3):
        assert tri3.origin_location() == "relative-boundary"

    def test_relative_interior(self):
        P = convex_hull([(-1, -1, 0), (2, 0, 0), (0, 2, 0)])
        assert P.origin_location() == "relative-interior"

    def test_relative_boundary(self, tri2in3):
        assert tri2in3.origin_location() == "relative-boundary"

    def test_outside(self):
        P = convex_hull([(1, 1), (2, 1), (1, 2)], require_origin=False)
        assert P.origin_location() == "outside"


class TestMembership:
    def test_in_hull(self):
        pts = [(0, 0), (4, 0), (0, 4)]
        assert in_hull((1, 1), pts)
        assert in_hull((0, 0), pts)
        assert not in_hull((3, 3), pts)

    def test_contains(self, tri3):
        assert tri3.contains((F(1, 4), F(1, 4), F(1, 4)))
        assert not tri3.contains((1, 1, 1))


class TestFaceLattice:
    def test_counts_simplex(self, tri3):
        for j in range(0, 3):
            from math import comb
            assert len(tri3.faces(j)) == comb(4, j + 1)

    def test_faces_through_origin(self, tri3):
        assert len(tri3.faces_through_origin(1)) == 3
        assert len(tri3.faces_through_origin(2)) == 3


class TestSplit:
    def test_volumes_add(self, cube3):
        sc = halfspace_split(cube3, (1, 2, 1))
        assert not sc.degenerate
        assert sc.lower.volume + sc.upper.volume == cube3.volume

    def test_section_flat(self, cube3):
        sc = halfspace_split(cube3, (1, 0, 0))
        assert sc.section.dim == 2
        for v in sc.section.vertices:
            assert v[0] == 0

    def test_no_crossing_degenerate(self, tri3):
        sc = halfspace_split(tri3, (1, 1, 1))
        assert sc.degenerate

    def test_pieces_inside_parent(self, tri3):
        sc = halfspace_split(tri3, (1, -1, 0))
        for piece in (sc.lower, sc.upper):
            for v in piece.vertices:
                assert tri3.contains(v)

    def test_quad_order(self, cube3):
        sc = halfspace_split(cube3, (0, 1, 1))
        K, L, U, I = sc.quad()
        assert U == cube3 and I == sc.section


class TestLinearMap:
    def test_det_and_inverse(self):
        A = LinearMap.from_columns([(2, 1), (1, 1)])
        assert A.det == 1
        assert A.is_sl
        B = A.inverse()
        assert (A @ B).rows == LinearMap.identity(2).rows

    def test_singular(self):
        A = LinearMap.from_columns([(1, 2), (2, 4)])
        with pytest.raises(SingularMapError):
            A.inverse()

    def test_map_volume_scaling(self, tri3):
        A = LinearMap.scaling(3, F(2))
        assert tri3.map(A).volume == 8 * tri3.volume

    def test_transpose_roundtrip(self):
        A = LinearMap.from_columns([(1, 2, 0), (0, 1, 5), (3, 0, 1)])
        assert A.transpose().transpose().rows == A.rows


class TestTrianglePair:
    def test_unimodular_exact(self):
        for kind in (1, 2):
            for lam in (F(1, 4), F(1, 2), F(2, 3)):
                A = transform_phi(kind, lam, 4)
                assert A.det == 1

    def test_shear_determinants(self):
        lam = F(1, 3)
        assert transform_phi(3, lam, 3, mode="shear").det == lam
        assert transform_phi(4, lam, 3, mode="shear").det == 1 - lam

    def test_float_mode(self):
        A = transform_phi(1, F(1, 2), 3, mode="float")
        assert A.det != 0


class TestSerialization:
    def test_round_trip(self, cube3):
        obj = polytope_to_json(cube3)
        Q = polytope_from_json(obj)
        assert Q == cube3

    def test_fraction_strings(self, tri3):
        obj = polytope_to_json(tri3.scale(F(1, 3)))
        assert any("/" in c for row in obj["vertices"] for c in row)
        Q = polytope_from_json(obj)
        assert Q.volume == tri3.volume / 27

    def test_float_mode_parse(self):
        obj = {"n": 2, "mode": "float",
               "vertices": [[0.0, 0.0], [0.5, 0.0], [0.0, 0.25]]}
        P = polytope_from_json(obj)
        assert P.support((2, 0)) == 1


class TestSmallHelpers:
    def test_cross_product_orthogonal(self):
        v = cross_product([(1, 2, 3), (0, 1, 1)])
        assert dot(v, (1, 2, 3)) == 0 and dot(v, (0, 1, 1)) == 0

    def test_primitive_int(self):
        assert primitive_int((F(2, 3), F(-4, 3))) == (1, -2)

    def test_triangulate_points_cells(self):
        cells = triangulate_points([(0, 0), (1, 0), (1, 1), (0, 1)])
        assert len(cells) == 2

    def test_hat_simplex_contains_origin(self):
        for d in (2, 3):
            H = hat_simplex(d, 3)
            assert H.contains(zero_vec(3))
            assert H.dim == d - 1

    def test_unit_vec(self):
        assert unit_vec(3, 1) == (0, 1, 0)

    def test_polytope_close(self, tri3):
        assert polytope_close(tri3, tri3.scale(1))
        assert not polytope_close(tri3, tri3.scale(2))
