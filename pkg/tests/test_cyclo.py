from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from pinwheel import CycloNum, YPoint, cyclotomic_polynomial, delta, hyperplane_eval, on_hyperplane
from pinwheel.faces import random_ypoints


def poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def poly_remainder(poly, mod):
    """Independent long-division oracle over the rationals."""
    work = [Fraction(c) for c in poly]
    deg = len(mod) - 1
    while len(work) > deg:
        c = work[-1]
        if c:
            for j, m in enumerate(mod):
                work[len(work) - 1 - deg + j] -= c * m
        work.pop()
    work += [Fraction(0)] * (deg - len(work))
    return work


def euler_phi(r):
    return sum(1 for k in range(1, r + 1) if gcd(k, r) == 1)


class TestCyclotomicPolynomial:
    def test_standard_identities(self):
        assert cyclotomic_polynomial(2) == (1, 1)
        assert cyclotomic_polynomial(3) == (1, 1, 1)
        assert cyclotomic_polynomial(4) == (1, 0, 1)

    @pytest.mark.parametrize("r", range(1, 31))
    def test_product_over_divisors_rebuilds_x_r_minus_1(self, r):
        prod = [1]
        for d in range(1, r + 1):
            if r % d == 0:
                prod = poly_mul(prod, list(cyclotomic_polynomial(d)))
        assert prod == [-1] + [0] * (r - 1) + [1]

    @pytest.mark.parametrize("r", range(2, 31))
    def test_degree_is_euler_phi(self, r):
        assert len(cyclotomic_polynomial(r)) - 1 == euler_phi(r)

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            cyclotomic_polynomial(0)


class TestCycloNum:
    def test_from_term_constant(self):
        assert CycloNum.from_term(1, 0, 3).coeffs == (1, 0)

    def test_from_term_reduces_by_minimal_polynomial(self):
        # zeta^2 = -1 - zeta in Q(zeta_3)
        assert CycloNum.from_term(1, 2, 3).coeffs == (-1, -1)
        # zeta^2 = -1 in Q(zeta_4)
        assert CycloNum.from_term(2, 2, 4).coeffs == (-2, 0)

    def test_sum_of_all_cube_roots_vanishes(self):
        total = CycloNum.zero(3)
        for e in range(3):
            total = total + CycloNum.from_term(1, e, 3)
        assert total.is_zero()

    def test_zeta4_squared_is_minus_one(self):
        value = CycloNum.from_term(1, 2, 4) + CycloNum.from_rational(1, 4)
        assert value.is_zero()

    def test_high_power_reduces_to_rational(self):
        # oracle: remainder of x^3 modulo the third cyclotomic polynomial
        rem = poly_remainder([0, 0, 0, 1], cyclotomic_polynomial(3))
        assert rem == [1, 0]
        value = CycloNum.from_term(1, 3, 3) + CycloNum.from_rational(2, 3)
        assert value.as_rational() == 3

    @pytest.mark.parametrize("r", range(2, 13))
    def test_all_roots_sum_to_zero(self, r):
        total = CycloNum.zero(r)
        for e in range(r):
            total = total + CycloNum.from_term(1, e, r)
        assert total.is_zero()

    @pytest.mark.parametrize("r", range(2, 13))
    def test_zeta_to_the_r_is_one(self, r):
        zeta = CycloNum.from_term(1, 1, r)
        power = CycloNum.from_rational(1, r)
        for _ in range(r):
            power = power * zeta
        assert power.as_rational() == 1

    def test_mismatched_fields_rejected(self):
        with pytest.raises(ValueError):
            CycloNum.zero(3) + CycloNum.zero(4)

    @given(
        st.integers(2, 9),
        st.lists(st.fractions(max_denominator=6), min_size=1, max_size=6),
        st.lists(st.fractions(max_denominator=6), min_size=1, max_size=6),
    )
    def test_equality_is_coefficient_equality(self, r, mags_a, mags_b):
        def build(mags):
            total = CycloNum.zero(r)
            for e, m in enumerate(mags):
                total = total + CycloNum.from_term(m, e, r)
            return total

        a, b = build(mags_a), build(mags_b)
        assert (a - b).is_zero() == (a.coeffs == b.coeffs)

    def test_json_roundtrip(self):
        value = CycloNum.from_term(Fraction(7, 3), 2, 5) + CycloNum.from_rational(Fraction(-1, 2), 5)
        data = value.to_json()
        assert data["coeffs"][0] == ["-1", "2"]
        assert CycloNum.from_json(data) == value


class TestDelta:
    def test_reference_values(self):
        assert delta(4, 1) == 4
        assert delta(4, 3) == 9
        assert delta(2, 2) == 3

    def test_zero_prefix(self):
        assert delta(5, 0) == 0

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            delta(3, 4)


class TestHyperplane:
    def test_worked_cube_root_case(self):
        x = YPoint(3, ((Fraction(1), 1), (Fraction(2), 0)))
        value = hyperplane_eval(x, (1, 2), {1: 2, 2: 0})
        assert value.as_rational() == 3
        assert on_hyperplane(x, (1, 2), {1: 2, 2: 0})

    def test_all_branches_zero(self):
        x = YPoint(2, ((Fraction(1), 0), (Fraction(2), 0)))
        assert on_hyperplane(x, (1, 2), {1: 0, 2: 0})

    def test_irrational_value_misses(self):
        x = YPoint(3, ((Fraction(2), 0), (Fraction(1), 0)))
        value = hyperplane_eval(x, (1,), {1: 1})
        assert value.as_rational() is None
        assert not on_hyperplane(x, (1,), {1: 1})

    def test_missing_decoration_rejected(self):
        x = YPoint(3, ((Fraction(1), 0), (Fraction(1), 0)))
        with pytest.raises(ValueError):
            hyperplane_eval(x, (1, 2), {1: 0})

    @pytest.mark.parametrize("r,n", [(2, 2), (3, 2), (3, 3), (4, 2)])
    def test_triangle_equality_characterization(self, r, n):
        # On a decorated subset the sum hits the bound exactly when every
        # positive coordinate sits on the opposite branch and the magnitudes
        # add up to the bound.
        import itertools

        for x in random_ypoints(r, n, 120, seed=1000 * r + n):
            for size in range(1, n + 1):
                for elems in itertools.combinations(range(1, n + 1), size):
                    for exps in itertools.product(range(r), repeat=size):
                        dec = dict(zip(elems, exps))
                        branches_ok = all(
                            x.branch(i) == (-dec[i]) % r
                            for i in elems
                            if x.magnitude(i)
                        )
                        magnitude_ok = sum(x.magnitude(i) for i in elems) == delta(n, size)
                        assert on_hyperplane(x, elems, dec) == (branches_ok and magnitude_ok)


class TestYPoint:
    def test_zero_magnitude_gets_branch_zero(self):
        x = YPoint(3, ((Fraction(0), 2), (Fraction(1), 5)))
        assert x.coords == ((Fraction(0), 0), (Fraction(1), 2))

    def test_negative_magnitude_rejected(self):
        with pytest.raises(ValueError):
            YPoint(3, ((Fraction(-1), 0),))

    def test_json_roundtrip(self):
        x = YPoint(3, ((Fraction(1, 2), 2), (Fraction(0), 0)))
        assert YPoint.from_json(x.to_json(), 3) == x
        assert x.to_json()["coords"][0] == {"mag": ["1", "2"], "branch": 2}
