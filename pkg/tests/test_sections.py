"""Plane restrictions, line and numeric Lojasiewicz exponents, polar invariants."""
from fractions import Fraction

import pytest

from lctlab.exactgeom import MonomialIdeal
from lctlab.germs import IdealPresentation, jacobian_ideal, parse_polynomial, poly
from lctlab.invariants import loja_monomial
from lctlab.sections import (
    DegenerateRestrictionError,
    LojaParams,
    loja_line,
    loja_numeric,
    polar_invariant,
    restrict,
    sample_plane,
)
from lctlab.verify import random_ideal

FAST = LojaParams(starts=24, iters=150)


def monomial_presentation(gens, n):
    return IdealPresentation(n, tuple(poly(n, {v: 1}) for v in gens))


class TestSamplePlane:
    def test_line_in_plane(self):
        pl = sample_plane(2, 1, 7)
        assert len(pl.matrix) == 2 and len(pl.matrix[0]) == 1
        assert any(c != 0 for row in pl.matrix for c in row)

    def test_rank(self):
        pl = sample_plane(3, 1, 1)
        assert len(pl.matrix) == 3 and len(pl.matrix[0]) == 2

    def test_determinism(self):
        assert sample_plane(3, 2, 99) == sample_plane(3, 2, 99)

    def test_bad_codim(self):
        with pytest.raises(ValueError):
            sample_plane(2, 2, 0)


class TestRestrict:
    def test_line_substitution(self):
        I = IdealPresentation(2, (poly(2, {(2, 0): 3}), poly(2, {(0, 2): 3})))
        pl = sample_plane(2, 1, 0)
        # emulate the documented example with an explicit plane
        from lctlab.sections import PlaneRestriction
        line = PlaneRestriction(2, 1, ((Fraction(1),), (Fraction(2),)), 0)
        R = restrict(I, line)
        assert R.generators[0].terms == {(2,): 3}
        assert R.generators[1].terms == {(2,): 12}

    def test_maximal_order_one(self):
        R = restrict(monomial_presentation([(1, 0), (0, 1)], 2),
                     sample_plane(2, 1, 3))
        assert loja_line(R) == 1

    def test_diagonal_line(self):
        from lctlab.sections import PlaneRestriction
        line = PlaneRestriction(2, 1, ((Fraction(1),), (Fraction(1),)), 0)
        R = restrict(monomial_presentation([(2, 0), (1, 1), (0, 3)], 2), line)
        assert [g.terms for g in R.generators] == [{(2,): 1}, {(2,): 1}, {(3,): 1}]


class TestLojaLine:
    def test_orders(self):
        I = IdealPresentation(1, (poly(1, {(3,): 1}), poly(1, {(5,): 1})))
        assert loja_line(I) == 3

    def test_degenerate(self):
        I = IdealPresentation(1, (poly(1, {}), poly(1, {})))
        with pytest.raises(DegenerateRestrictionError):
            loja_line(I)

    def test_generic_stability_across_seeds(self):
        I = monomial_presentation([(2, 0), (1, 1), (0, 3)], 2)
        values = {loja_line(restrict(I, sample_plane(2, 1, s))) for s in range(5)}
        assert values == {2}  # min total degree, for every seed


class TestLojaNumeric:
    def test_squares(self):
        I = IdealPresentation(2, (poly(2, {(2, 0): 1}), poly(2, {(0, 2): 1})))
        est = loja_numeric(I, FAST)
        assert est.value == pytest.approx(2.0, abs=0.05)

    def test_staircase(self):
        est = loja_numeric(monomial_presentation([(2, 0), (1, 1), (0, 3)], 2), FAST)
        assert est.value == pytest.approx(3.0, abs=0.1)

    def test_maximal(self):
        est = loja_numeric(monomial_presentation([(1, 0), (0, 1)], 2), FAST)
        assert est.value == pytest.approx(1.0, abs=0.01)

    def test_determinism(self):
        I = monomial_presentation([(3, 0), (0, 2)], 2)
        assert loja_numeric(I, FAST) == loja_numeric(I, FAST)

    def test_agrees_with_exact_on_corpus(self):
        for i in range(5):
            a = random_ideal(2, 100 + i, 4)
            exact = loja_monomial(a)
            est = loja_numeric(monomial_presentation(a.generators, 2), FAST)
            assert abs(est.value - float(exact)) / float(exact) <= 0.05
            assert est.spread < 0.02 * float(exact)


class TestPolarInvariant:
    def test_fermat_theta0(self):
        est = polar_invariant(parse_polynomial("x^3 + y^3"), 0)
        assert est.rational == 2 and est.method == "exact-monomial"

    def test_fermat_theta1_line(self):
        est = polar_invariant(parse_polynomial("x^3 + y^3"), 1)
        assert est.rational == 2 and est.method == "exact-line"

    @pytest.mark.parametrize("d", [2, 3, 4])
    def test_fermat_3d_all_exact(self, d):
        f = parse_polynomial(f"x^{d} + y^{d} + z^{d}")
        for j in range(3):
            est = polar_invariant(f, j)
            assert est.rational == d - 1
            assert est.method.startswith("exact")

    def test_cusp(self):
        f = parse_polynomial("x^2 + y^3")
        assert polar_invariant(f, 0).rational == 2
        assert polar_invariant(f, 1).rational == 1

    def test_not_isolated_rejected(self):
        with pytest.raises(ValueError):
            polar_invariant(parse_polynomial("x^2", 2), 0)

    def test_seed_determinism(self):
        f = parse_polynomial("x^3 + y^3")
        assert polar_invariant(f, 1, seed=5) == polar_invariant(f, 1, seed=5)
