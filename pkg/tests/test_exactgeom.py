"""Newton polyhedron geometry: facets, membership, intercepts, covolumes."""
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from lctlab.exactgeom import (
    InvalidInputError,
    MonomialIdeal,
    NotZeroDimensionalError,
    UnsupportedDimensionError,
    axis_intercepts,
    build_polyhedron,
    contains,
    covolume,
    diagonal_intercept,
    ideal_power,
    maximal_ideal,
    minimalize,
    minkowski_sum,
    polyhedron_of,
    scale_ideal,
    _facet_eval,
    _lp_member,
)


def shoelace_covolume(gens):
    """Independent 2-d oracle: area of the staircase polygon below the hull.

    Walks the lower-left boundary vertices (sorted by x, keeping the convex
    chain) from the y-axis to the x-axis and applies the shoelace formula
    against the origin.
    """
    pts = sorted(set(gens))
    chain = []
    for p in pts:
        while len(chain) >= 2:
            (x1, y1), (x2, y2) = chain[-2], chain[-1]
            if (x2 - x1) * (p[1] - y1) - (y2 - y1) * (p[0] - x1) <= 0:
                chain.pop()
            else:
                break
        chain.append(p)
    poly = [(0, chain[0][1])] if chain[0][0] != 0 else []
    poly += chain
    if chain[-1][1] != 0:
        poly.append((chain[-1][0], 0))
    area = Fraction(0)
    full = [(0, 0)] + poly
    for (x1, y1), (x2, y2) in zip(full, full[1:] + full[:1]):
        area += Fraction(x1 * y2 - x2 * y1, 2)
    return abs(area)


class TestBuildPolyhedron:
    def test_unit_simplex(self):
        P = build_polyhedron({(1, 0), (0, 1)}, 2)
        assert P.facets == (((1, 1), 1),)

    def test_staircase(self):
        P = build_polyhedron({(2, 0), (1, 1), (0, 3)}, 2)
        assert P.facets == (((1, 1), 2), ((2, 1), 3))

    def test_scaled_simplex_3d(self):
        P = build_polyhedron({(3, 0, 0), (0, 3, 0), (0, 0, 3)}, 3)
        assert P.facets == (((1, 1, 1), 3),)

    def test_dimension_cap(self):
        with pytest.raises(UnsupportedDimensionError):
            build_polyhedron({(1, 0, 0, 0, 0)}, 5)

    def test_empty_generators(self):
        with pytest.raises(InvalidInputError):
            build_polyhedron(set(), 2)

    def test_origin_gives_orthant(self):
        P = build_polyhedron({(0, 0)}, 2)
        assert P.is_orthant
        assert covolume(P) == 0

    def test_unbounded_facet(self):
        # no pure power on the y axis: facet x >= 1 with zero normal entry
        P = build_polyhedron({(2, 0), (1, 1)}, 2)
        assert ((1, 0), 1) in P.facets


class TestContains:
    def test_on_facet(self):
        P = build_polyhedron({(1, 0), (0, 1)}, 2)
        assert contains(P, (Fraction(1, 2), Fraction(1, 2)))

    def test_generator(self):
        P = build_polyhedron({(2, 0), (1, 1), (0, 3)}, 2)
        assert contains(P, (1, 1))

    def test_outside(self):
        P = build_polyhedron({(2, 0), (1, 1), (0, 3)}, 2)
        assert not contains(P, (0, 2))

    def test_negative_coordinate(self):
        P = build_polyhedron({(1, 0), (0, 1)}, 2)
        with pytest.raises(InvalidInputError):
            contains(P, (-1, 0))


class TestMinkowskiSum:
    def test_m_plus_m(self):
        m = polyhedron_of(maximal_ideal(2))
        S = minkowski_sum(m, m)
        assert S.facets == (((1, 1), 2),)
        assert set(S.generators) == {(2, 0), (1, 1), (0, 2)}

    def test_staircase_plus_m(self):
        P = build_polyhedron({(2, 0), (1, 1), (0, 3)}, 2)
        S = minkowski_sum(P, polyhedron_of(maximal_ideal(2)))
        for v in [(3, 0), (1, 2), (0, 4)]:
            assert contains(S, v)
            assert any(
                sum(w[i] * v[i] for i in range(2)) == c for w, c in S.facets)

    def test_identity_element(self):
        P = build_polyhedron({(2, 0), (1, 1), (0, 3)}, 2)
        Q = minkowski_sum(P, build_polyhedron({(0, 0)}, 2))
        assert Q.facets == P.facets

    def test_dimension_mismatch(self):
        with pytest.raises(InvalidInputError):
            minkowski_sum(polyhedron_of(maximal_ideal(2)),
                          polyhedron_of(maximal_ideal(3)))


class TestIntercepts:
    def test_diagonal_m(self):
        assert diagonal_intercept(polyhedron_of(maximal_ideal(2))) == Fraction(1, 2)

    @pytest.mark.parametrize("n,d", [(2, 3), (3, 2), (4, 5)])
    def test_diagonal_power(self, n, d):
        P = polyhedron_of(ideal_power(maximal_ideal(n), d))
        assert diagonal_intercept(P) == Fraction(d, n)

    def test_diagonal_staircase(self):
        P = build_polyhedron({(2, 0), (1, 1), (0, 3)}, 2)
        assert diagonal_intercept(P) == 1

    def test_axis_power(self):
        P = polyhedron_of(ideal_power(maximal_ideal(3), 4))
        assert axis_intercepts(P) == (4, 4, 4)

    def test_axis_staircase(self):
        P = build_polyhedron({(2, 0), (1, 1), (0, 3)}, 2)
        assert axis_intercepts(P) == (2, 3)

    def test_axis_absent(self):
        P = build_polyhedron({(1, 1)}, 2)
        assert axis_intercepts(P) == (None, None)


class TestCovolume:
    def test_corner_triangle(self):
        assert covolume(polyhedron_of(maximal_ideal(2))) == Fraction(1, 2)

    def test_staircase_shoelace(self):
        gens = [(2, 0), (1, 1), (0, 3)]
        assert covolume(build_polyhedron(gens, 2)) == Fraction(5, 2)
        assert shoelace_covolume(gens) == Fraction(5, 2)

    @pytest.mark.parametrize("d", [1, 2, 3])
    def test_corner_simplex_3d(self, d):
        P = polyhedron_of(ideal_power(maximal_ideal(3), d))
        assert covolume(P) == Fraction(d ** 3, 6)

    def test_4d(self):
        P = polyhedron_of(ideal_power(maximal_ideal(4), 2))
        assert covolume(P) == Fraction(2 ** 4, 24)

    def test_unbounded_complement(self):
        with pytest.raises(NotZeroDimensionalError):
            covolume(build_polyhedron({(1, 1)}, 2))


def _grid_points(P):
    gens = [tuple(Fraction(c) for c in g) for g in P.generators]
    pts = list(gens)
    for i in range(len(gens)):
        for j in range(i + 1, len(gens)):
            pts.append(tuple((a + b) / 2 for a, b in zip(gens[i], gens[j])))
    for i, t in enumerate(axis_intercepts(P)):
        if t is not None:
            pts.append(tuple(t if k == i else Fraction(0) for k in range(P.dim)))
    t0 = diagonal_intercept(P)
    pts.append(tuple(t0 for _ in range(P.dim)))
    eps = Fraction(1, 7)
    shifted = []
    for p in pts:
        shifted.append(tuple(c + eps for c in p))
        minus = tuple(c - eps for c in p)
        if all(c >= 0 for c in minus):
            shifted.append(minus)
    return pts + shifted


gens2 = st.lists(
    st.tuples(st.integers(0, 5), st.integers(0, 5)).filter(lambda v: sum(v) > 0),
    min_size=1, max_size=5)
gens3 = st.lists(
    st.tuples(st.integers(0, 4), st.integers(0, 4), st.integers(0, 4)).filter(
        lambda v: sum(v) > 0),
    min_size=1, max_size=4)


class TestProperties:
    @settings(max_examples=30, deadline=None)
    @given(gens2)
    def test_facets_agree_with_lp_on_grid(self, gens):
        P = build_polyhedron(gens, 2)
        for q in _grid_points(P):
            assert _facet_eval(P, q) == _lp_member(P, q)

    @settings(max_examples=20, deadline=None)
    @given(gens3)
    def test_facets_agree_with_lp_on_grid_3d(self, gens):
        P = build_polyhedron(gens, 3)
        for q in _grid_points(P)[:25]:
            assert _facet_eval(P, q) == _lp_member(P, q)

    @settings(max_examples=25, deadline=None)
    @given(gens2, st.sampled_from([1, 2, 3]))
    def test_scaling(self, gens, k):
        a = MonomialIdeal.make(gens, 2)
        P = polyhedron_of(a)
        Pk = polyhedron_of(scale_ideal(a, k))
        assert diagonal_intercept(Pk) == k * diagonal_intercept(P)
        for t, tk in zip(axis_intercepts(P), axis_intercepts(Pk)):
            assert (t is None) == (tk is None)
            if t is not None:
                assert tk == k * t
        if all(t is not None for t in axis_intercepts(P)):
            assert covolume(Pk) == k ** 2 * covolume(P)

    @settings(max_examples=25, deadline=None)
    @given(gens2, gens2)
    def test_monotonicity(self, ga, gb):
        Pa = build_polyhedron(ga, 2)
        Pb = build_polyhedron(gb, 2)
        if all(_facet_eval(Pb, g) for g in ga):
            # P(a) subset of P(b)
            assert diagonal_intercept(Pa) >= diagonal_intercept(Pb)
            ta, tb = axis_intercepts(Pa), axis_intercepts(Pb)
            if all(t is not None for t in ta) and all(t is not None for t in tb):
                assert covolume(Pa) >= covolume(Pb)

    @settings(max_examples=20, deadline=None)
    @given(gens2, gens2, gens2)
    def test_minkowski_commutative_associative(self, g1, g2, g3):
        P1, P2, P3 = (build_polyhedron(g, 2) for g in (g1, g2, g3))
        assert minkowski_sum(P1, P2).facets == minkowski_sum(P2, P1).facets
        left = minkowski_sum(minkowski_sum(P1, P2), P3)
        right = minkowski_sum(P1, minkowski_sum(P2, P3))
        assert left.facets == right.facets

    @settings(max_examples=40, deadline=None)
    @given(gens2)
    def test_covolume_matches_shoelace(self, gens):
        a = MonomialIdeal.make(gens, 2)
        if a.zero_dimensional:
            assert covolume(polyhedron_of(a)) == shoelace_covolume(a.generators)


class TestMonomialIdeal:
    def test_minimalize(self):
        assert minimalize([(2, 0), (2, 1), (0, 3), (1, 3)]) == ((0, 3), (2, 0))

    def test_zero_dimensional(self):
        assert MonomialIdeal.make({(2, 0), (0, 3)}, 2).zero_dimensional
        assert not MonomialIdeal.make({(1, 1)}, 2).zero_dimensional

    def test_unit(self):
        a = MonomialIdeal.make({(0, 0), (1, 2)}, 2)
        assert a.is_unit
        assert a.generators == ((0, 0),)

    def test_invalid(self):
        with pytest.raises(InvalidInputError):
            MonomialIdeal.make([], 2)
        with pytest.raises(InvalidInputError):
            MonomialIdeal.make([(1, -1)], 2)
