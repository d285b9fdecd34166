"""Geometry kernel: affine hulls, facet and vertex enumeration, exactness."""

from fractions import Fraction
from itertools import combinations

import pytest
import sympy

from conicseq import (HRep, Hyperplane, Permutation, VRep, affine_hull,
                      bipyramid, bruhat_interval_polytope, cross_polytope,
                      cube, facet_enumerate, gelfand_zetlin_3, polygon,
                      simplex, vertex_enumerate)
from conicseq.errors import DegenerateInput, Empty, Unbounded
from conicseq.geometry import facet_hyperplanes

UNIT_SQUARE = VRep(2, ((0, 0), (1, 0), (0, 1), (1, 1)))


def sympy_facets(points):
    """Independent support-test oracle over sympy rationals.

    Works directly in ambient coordinates (full-dimensional input only):
    every d-subset spanning a hyperplane is tested for the supporting
    property and facets are collected as frozensets of incident indices.
    """
    dim = len(points[0])
    pts = [sympy.Matrix([sympy.Rational(c) for c in p]) for p in points]
    facets = set()
    for subset in combinations(range(len(pts)), dim):
        rows = [(pts[i] - pts[subset[0]]).T for i in subset[1:]]
        mat = sympy.Matrix.vstack(*rows) if rows else sympy.zeros(0, dim)
        kernel = mat.nullspace()
        if len(kernel) != 1:
            continue
        normal = kernel[0]
        values = [(normal.T * p)[0] - (normal.T * pts[subset[0]])[0]
                  for p in pts]
        if all(v <= 0 for v in values) or all(v >= 0 for v in values):
            facets.add(frozenset(i for i, v in enumerate(values) if v == 0))
    return facets


class TestAffineHull:
    def test_unit_square_is_full_dimensional(self):
        dim, basis, origin = affine_hull(UNIT_SQUARE.points)
        assert dim == 2
        assert len(basis) == 2

    def test_single_point(self):
        dim, basis, _ = affine_hull([(3, 4, 5)])
        assert dim == 0
        assert basis == []

    def test_bruhat_interval_in_4_space_is_3_dimensional(self):
        q = bruhat_interval_polytope(Permutation.parse("1324"),
                                     Permutation.parse("4231"), 4)
        dim, _, _ = affine_hull(q.points)
        assert dim == 3

    def test_every_point_lies_in_the_hull(self):
        pts = [(0, 0, 0), (2, 4, 6), (1, 2, 3), (5, 3, 1)]
        dim, basis, origin = affine_hull(pts)
        assert dim == 2
        # re-express each point and check exact membership
        from conicseq.linalg import rref
        reduced, pivots = rref(basis)
        for p in pts:
            d = [Fraction(c) - o for c, o in zip(p, origin)]
            coeff = [d[j] for j in pivots]
            rebuilt = [sum(ci * row[k] for ci, row in zip(coeff, basis))
                       for k in range(3)]
            assert rebuilt == d


class TestFacetEnumerate:
    def test_unit_square(self):
        inc = facet_enumerate(UNIT_SQUARE)
        assert inc.dim == 2
        assert inc.n_vertices == 4
        assert len(inc.facets) == 4
        assert all(len(f) == 2 for f in inc.facets)

    def test_cross_polytope_has_8_triangles(self):
        inc = facet_enumerate(cross_polytope(3))
        assert len(inc.facets) == 8
        assert all(len(f) == 3 for f in inc.facets)

    def test_bruhat_interval_has_14_facets(self):
        q = bruhat_interval_polytope(Permutation.parse("1324"),
                                     Permutation.parse("4231"), 4)
        inc = facet_enumerate(q)
        assert len(inc.facets) == 14
        assert inc.n_vertices == 16
        assert inc.dropped == ()

    def test_coincident_points_raise(self):
        with pytest.raises(ValueError):
            VRep(2, ((1, 1), (1, 1)))
        with pytest.raises(DegenerateInput):
            facet_enumerate(VRep(2, ((1, 1),)))

    def test_interior_point_is_dropped_from_every_facet(self):
        with_center = VRep(2, UNIT_SQUARE.points + ((Fraction(1, 2),
                                                     Fraction(1, 2)),))
        inc = facet_enumerate(with_center)
        assert inc.dropped == (4,)
        assert inc.n_vertices == 4
        assert inc.kept == (0, 1, 2, 3)

    def test_midedge_point_is_dropped(self):
        with_mid = VRep(2, UNIT_SQUARE.points + ((Fraction(1, 2), 0),))
        inc = facet_enumerate(with_mid)
        assert inc.dropped == (4,)
        assert len(inc.facets) == 4

    def test_agrees_with_sympy_oracle_on_small_instances(self):
        instances = [
            UNIT_SQUARE,
            polygon(5),
            polygon(7),
            cube(3),
            cross_polytope(3),
            bipyramid(polygon(3)),
            bipyramid(polygon(4)),
            vertex_enumerate(gelfand_zetlin_3()),
            VRep(3, ((0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1))),
        ]
        for v in instances:
            assert len(v.points) <= 12
            dim, _, _ = affine_hull(v.points)
            if dim != v.ambient_dim:
                continue  # the oracle is ambient-coordinate only
            got = {frozenset(inc_f) for inc_f in facet_enumerate(v).facets}
            assert got == sympy_facets(v.points), v.name

    def test_scaling_by_7_3_preserves_incidence(self):
        for v in (UNIT_SQUARE, cube(3), cross_polytope(3),
                  bipyramid(polygon(5))):
            plain = facet_enumerate(v)
            scaled = facet_enumerate(v.scaled(Fraction(7, 3)))
            assert plain == scaled


class TestVertexEnumerate:
    def test_gz3_has_7_vertices(self):
        v = vertex_enumerate(gelfand_zetlin_3())
        assert len(v.points) == 7

    def test_unit_cube_from_inequalities(self):
        ineqs = []
        for k in range(3):
            e = [0, 0, 0]
            e[k] = 1
            ineqs.append((tuple(e), 1))
            e = [0, 0, 0]
            e[k] = -1
            ineqs.append((tuple(e), 0))
        v = vertex_enumerate(HRep(3, tuple(ineqs)))
        assert len(v.points) == 8
        assert set(v.points) == {tuple(map(Fraction, p))
                                 for p in cube(3).points}

    def test_simplex_from_inequalities(self):
        ineqs = [((-1, 0, 0), 0), ((0, -1, 0), 0), ((0, 0, -1), 0),
                 ((1, 1, 1), 1)]
        v = vertex_enumerate(HRep(3, tuple(ineqs)))
        assert len(v.points) == 4

    def test_empty_region(self):
        with pytest.raises(Empty):
            vertex_enumerate(HRep(1, (((1,), 0), ((-1,), -1))))

    def test_unbounded_region(self):
        with pytest.raises(Unbounded):
            vertex_enumerate(HRep(2, (((-1, 0), 0), ((0, -1), 0))))

    def test_empty_wins_over_nontrivial_recession_cone(self):
        # x1 >= 1 and x1 <= 0 is empty although the homogeneous system
        # still has the ray (0, 1)
        h = HRep(2, (((-1, 0), -1), ((1, 0), 0), ((0, -1), 0)))
        with pytest.raises(Empty):
            vertex_enumerate(h)

    def test_equalities_are_honoured(self):
        h = HRep(2, (((1, 0), 1), ((-1, 0), 0)), equalities=(((1, 1), 1),))
        v = vertex_enumerate(h)
        assert set(v.points) == {(Fraction(0), Fraction(1)),
                                 (Fraction(1), Fraction(0))}

    def test_round_trip_is_idempotent_on_vertices(self):
        v = vertex_enumerate(gelfand_zetlin_3())
        inc = facet_enumerate(v)
        assert inc.dropped == ()
        assert inc.n_vertices == len(v.points)

    def test_full_round_trip_through_hyperplanes(self):
        v = vertex_enumerate(gelfand_zetlin_3())
        planes = facet_hyperplanes(v)
        h2 = HRep(3, tuple((p.normal, p.offset) for p in planes))
        v2 = vertex_enumerate(h2)
        assert set(v2.points) == set(v.points)


class TestHyperplane:
    def test_canonical_form_is_jointly_primitive(self):
        p = Hyperplane.through((Fraction(2, 3), Fraction(-4, 3)), Fraction(2))
        assert p.normal == (1, -2)
        assert p.offset == 3

    def test_leading_sign_is_positive(self):
        p = Hyperplane.through((-2, 4), -6)
        assert p.normal == (1, -2)
        assert p.offset == 3

    def test_half_integer_plane_keeps_integer_data(self):
        # x = 1/2 becomes 2x = 1; primitivity is joint across the offset
        p = Hyperplane.through((1,), Fraction(1, 2))
        assert p.normal == (2,)
        assert p.offset == 1
