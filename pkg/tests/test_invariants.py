"""Exact invariants of zero-dimensional monomial ideals."""
import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from lctlab.exactgeom import (
    MonomialIdeal,
    NotZeroDimensionalError,
    ideal_power,
    ideal_product,
    maximal_ideal,
)
from lctlab.invariants import (
    UnitIdealError,
    colength,
    dh_lower_bound,
    lct_monomial,
    lelong_numbers,
    loja_monomial,
    mixed_multiplicity,
    multiplicity_oracle,
    samuel_multiplicity,
)
from lctlab.verify import random_ideal

A = MonomialIdeal.make({(2, 0), (1, 1), (0, 3)}, 2)


def brute_colength(a):
    """Independent staircase count by direct lattice enumeration."""
    box = [a.pure_power(i) for i in range(a.dim)]
    count = 0
    for pt in itertools.product(*(range(b) for b in box)):
        if not any(all(g[i] <= pt[i] for i in range(a.dim))
                   for g in a.generators):
            count += 1
    return count


class TestLct:
    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_maximal(self, n):
        assert lct_monomial(maximal_ideal(n)) == n

    @pytest.mark.parametrize("n,d", [(2, 3), (3, 4)])
    def test_power(self, n, d):
        assert lct_monomial(ideal_power(maximal_ideal(n), d)) == Fraction(n, d)

    def test_staircase(self):
        assert lct_monomial(A) == 1

    def test_unit_ideal_status(self):
        with pytest.raises(UnitIdealError):
            lct_monomial(MonomialIdeal.make({(0, 0)}, 2))


class TestLoja:
    def test_power(self):
        assert loja_monomial(ideal_power(maximal_ideal(2), 4)) == 4

    def test_staircase(self):
        assert loja_monomial(A) == 3

    def test_maximal(self):
        assert loja_monomial(maximal_ideal(3)) == 1

    def test_not_zero_dimensional(self):
        with pytest.raises(NotZeroDimensionalError):
            loja_monomial(MonomialIdeal.make({(1, 1)}, 2))


class TestColength:
    def test_maximal(self):
        assert colength(maximal_ideal(2)) == 1

    def test_staircase(self):
        assert colength(A) == 4  # {1, x, y, y^2}

    @pytest.mark.parametrize("d", [1, 2, 5])
    def test_power_triangle(self, d):
        assert colength(ideal_power(maximal_ideal(2), d)) == d * (d + 1) // 2

    @settings(max_examples=25, deadline=None)
    @given(st.integers(0, 10_000), st.sampled_from([2, 3]))
    def test_matches_brute_enumeration(self, seed, n):
        a = random_ideal(n, seed, 4)
        assert colength(a) == brute_colength(a)


class TestMultiplicities:
    def test_oracle_maximal(self):
        assert multiplicity_oracle(maximal_ideal(2)) == 1

    def test_oracle_staircase(self):
        assert multiplicity_oracle(A) == 5
        assert samuel_multiplicity(A) == 5  # 2 * covolume 5/2

    @pytest.mark.parametrize("d", [2, 3])
    def test_oracle_power_3d(self, d):
        assert multiplicity_oracle(ideal_power(maximal_ideal(3), d)) == d ** 3

    @pytest.mark.parametrize("n,d", [(2, 4), (3, 2)])
    def test_samuel_power(self, n, d):
        assert samuel_multiplicity(ideal_power(maximal_ideal(n), d)) == d ** n

    def test_samuel_equals_oracle_no_prestated_value(self):
        b = MonomialIdeal.make({(3, 0), (1, 1), (0, 3)}, 2)
        assert samuel_multiplicity(b) == multiplicity_oracle(b)

    @settings(max_examples=20, deadline=None)
    @given(st.integers(0, 10_000), st.sampled_from([2, 3]))
    def test_oracle_equivalence(self, seed, n):
        a = random_ideal(n, seed, 4)
        assert samuel_multiplicity(a) == multiplicity_oracle(a)


class TestMixedMultiplicity:
    def test_all_maximal(self):
        m = maximal_ideal(2)
        assert mixed_multiplicity([m, m]).value == 1
        m3 = maximal_ideal(3)
        assert mixed_multiplicity([m3, m3, m3]).value == 1

    def test_with_maximal(self):
        assert mixed_multiplicity([A, maximal_ideal(2)]).value == 2

    def test_diagonal_equals_samuel(self):
        assert mixed_multiplicity([A, A]).value == samuel_multiplicity(A)

    @settings(max_examples=15, deadline=None)
    @given(st.integers(0, 10_000))
    def test_symmetry(self, seed):
        a = random_ideal(3, seed, 3)
        b = random_ideal(3, seed + 1, 3)
        m = maximal_ideal(3)
        base = mixed_multiplicity([a, b, m]).value
        for perm in itertools.permutations([a, b, m]):
            assert mixed_multiplicity(list(perm)).value == base

    @settings(max_examples=15, deadline=None)
    @given(st.integers(0, 10_000))
    def test_multilinearity(self, seed):
        a = random_ideal(2, seed, 4)
        b = random_ideal(2, seed + 1, 4)
        m = maximal_ideal(2)
        ab = ideal_product(a, b)
        assert (mixed_multiplicity([ab, m]).value
                == mixed_multiplicity([a, m]).value
                + mixed_multiplicity([b, m]).value)


class TestLelong:
    @pytest.mark.parametrize("d", [2, 3])
    def test_power_3d(self, d):
        lv = lelong_numbers(ideal_power(maximal_ideal(3), d))
        assert lv.e == (d, d ** 2, d ** 3)

    def test_staircase(self):
        assert lelong_numbers(A).e == (2, 5)

    def test_maximal(self):
        assert lelong_numbers(maximal_ideal(4)).e == (1, 1, 1, 1)

    @settings(max_examples=20, deadline=None)
    @given(st.integers(0, 10_000), st.sampled_from([2, 3]))
    def test_positivity_and_endpoints(self, seed, n):
        a = random_ideal(n, seed, 4)
        lv = lelong_numbers(a)
        assert all(e > 0 for e in lv.e)
        assert lv.e[0] == a.min_degree
        assert lv.e[-1] == samuel_multiplicity(a)


class TestChainBound:
    @pytest.mark.parametrize("d", [1, 2, 5])
    def test_power_2d(self, d):
        assert dh_lower_bound(ideal_power(maximal_ideal(2), d)) == Fraction(2, d)

    def test_staircase(self):
        assert dh_lower_bound(A) == Fraction(9, 10)

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_maximal_equality(self, n):
        m = maximal_ideal(n)
        assert dh_lower_bound(m) == n == lct_monomial(m)

    @settings(max_examples=25, deadline=None)
    @given(st.integers(0, 10_000), st.sampled_from([2, 3]))
    def test_chain_inequality(self, seed, n):
        a = random_ideal(n, seed, 4)
        assert lct_monomial(a) >= dh_lower_bound(a)
        lv = lelong_numbers(a)
        assert lv.e[-2] / lv.e[-1] >= 1 / loja_monomial(a) if n > 1 else True

    @settings(max_examples=15, deadline=None)
    @given(st.integers(0, 10_000), st.sampled_from([2, 3]))
    def test_power_scaling(self, seed, k):
        a = random_ideal(2, seed, 4)
        ak = ideal_power(a, k)
        assert lct_monomial(ak) == lct_monomial(a) / k
        assert loja_monomial(ak) == k * loja_monomial(a)
        lv, lvk = lelong_numbers(a), lelong_numbers(ak)
        assert all(lvk[j] == k ** j * lv[j] for j in range(1, 3))
