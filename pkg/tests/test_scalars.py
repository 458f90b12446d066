"""Scalar tower: cyclotomic numbers, rational functions, q-combinatorics."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hopfact.scalars import (
    CycNum,
    FunctionField,
    cyc_reduce,
    cyclotomic_poly,
    euler_phi,
    gauss_sum,
    gaussian_binomial_poly,
    q_binom_sym,
    q_int,
    ratfunc_is_nth_power,
    zeta_log,
)


def brute_reduce_mod_cyclotomic(power: int, m: int) -> list[Fraction]:
    # independent oracle: long division of t^power by Phi_m over Q
    phim = [Fraction(c) for c in cyclotomic_poly(m)]
    num = [Fraction(0)] * power + [Fraction(1)]
    dn = len(phim) - 1
    for k in range(len(num) - dn - 1, -1, -1):
        c = num[k + dn] / phim[-1]
        if c:
            for i, d in enumerate(phim):
                num[k + i] -= c * d
    num = num[:dn]
    return num + [Fraction(0)] * (dn - len(num))


class TestCycReduce:
    def test_zeta4_squared(self):
        assert cyc_reduce([0, 0, 1], 4) == CycNum.rational(-1)

    def test_zeta3_squared(self):
        z = CycNum.zeta(3)
        assert cyc_reduce([0, 0, 1], 3) == -1 - z

    def test_zeta6_cubed_matches_long_division(self):
        expected = CycNum(6, brute_reduce_mod_cyclotomic(3, 6))
        assert cyc_reduce([0, 0, 0, 1], 6) == expected
        assert cyc_reduce([0, 0, 0, 1], 6) == CycNum.rational(-1)

    @pytest.mark.parametrize("m", [1, 2, 3, 4, 5, 6, 8, 9, 12, 15])
    @pytest.mark.parametrize("power", [0, 1, 2, 5, 7, 11])
    def test_powers_match_long_division(self, m, power):
        raw = [0] * power + [1]
        assert cyc_reduce(raw, m) == CycNum(m, brute_reduce_mod_cyclotomic(power, m))

    def test_rejects_bad_order(self):
        with pytest.raises(ValueError):
            cyc_reduce([1], 0)

    def test_zeta_m_th_power_is_one(self):
        for m in range(1, 16):
            assert CycNum.zeta(m) ** m == CycNum.rational(1)

    def test_phi_m_annihilates_zeta(self):
        for m in range(1, 16):
            z = CycNum.zeta(m)
            acc = CycNum.rational(0, m)
            for k, c in enumerate(cyclotomic_poly(m)):
                acc = acc + z ** k * c
            assert not acc


small_rationals = st.fractions(min_value=-4, max_value=4, max_denominator=6)


def cycnums(order):
    phi = euler_phi(order)
    return st.lists(small_rationals, min_size=phi, max_size=phi).map(
        lambda cs: CycNum(order, cs)
    )


class TestFieldAxioms:
    @settings(max_examples=60, deadline=None)
    @given(st.sampled_from([3, 4, 5, 6, 12]).flatmap(
        lambda m: st.tuples(cycnums(m), cycnums(m), cycnums(m))))
    def test_ring_axioms(self, triple):
        a, b, c = triple
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + b == b + a
        assert a * b == b * a

    @settings(max_examples=40, deadline=None)
    @given(st.sampled_from([3, 4, 5, 8]).flatmap(cycnums))
    def test_inverses(self, a):
        if a:
            assert a * a.inverse() == CycNum.rational(1)

    def test_mixed_order_arithmetic(self):
        i = CycNum.zeta(4)
        w = CycNum.zeta(3)
        x = i * w
        assert x.order == 12
        assert x == CycNum.zeta(12, 7)  # zeta12^3 = i, zeta12^4 = w

    def test_is_rational(self):
        assert (CycNum.zeta(5) ** 5).is_rational()
        assert not CycNum.zeta(5).is_rational()

    def test_zeta_log(self):
        z = CycNum.zeta(7, 3)
        assert zeta_log(z, 7) == 3
        assert zeta_log(CycNum.rational(2), 7) is None


class TestQCombinatorics:
    def test_q_int_one(self):
        q = CycNum.zeta(5)
        assert q_int(1, q) == CycNum.rational(1)

    @pytest.mark.parametrize("m", [3, 4, 5, 7])
    def test_q_int_vanishes_at_order(self, m):
        q = CycNum.zeta(m)
        assert not q_int(m, q)

    def test_q_binom_2_1(self):
        q = CycNum.zeta(7)
        assert q_binom_sym(2, 1, q) == q + q.inverse()

    def test_rejects_pm_one(self):
        with pytest.raises(ValueError):
            q_int(2, CycNum.rational(1))
        with pytest.raises(ValueError):
            q_int(2, CycNum.rational(-1))
        with pytest.raises(ValueError):
            q_binom_sym(2, 1, CycNum.rational(-1, 4))

    def test_q_binom_from_factorials_where_defined(self):
        # away from vanishing q-factorials both routes agree
        q = CycNum.zeta(23)
        for n in range(0, 7):
            for i in range(0, n + 1):
                num = CycNum.rational(1)
                for k in range(1, n + 1):
                    num = num * q_int(k, q)
                den = CycNum.rational(1)
                for k in range(1, i + 1):
                    den = den * q_int(k, q)
                for k in range(1, n - i + 1):
                    den = den * q_int(k, q)
                assert q_binom_sym(n, i, q) == num / den

    def test_gaussian_poly_against_product_expansion(self):
        # prod_{k<n} (1 + v^k t) = sum_i v^(i(i-1)/2) C_v(n,i) t^i over Z[v][t]
        for n in range(0, 9):
            poly_t = [[1]]  # list over t-degree of dense v-polys
            for k in range(n):
                new = [[0] for _ in range(len(poly_t) + 1)]
                for i, pv in enumerate(poly_t):
                    new[i] = [a + b for a, b in
                              zip(new[i] + [0] * len(pv), pv + [0] * len(new[i]))]
                    shifted = [0] * k + pv
                    new[i + 1] = [a + b for a, b in
                                  zip(new[i + 1] + [0] * len(shifted),
                                      shifted + [0] * len(new[i + 1]))]
                poly_t = [([c for c in p]) for p in new]
            for i in range(n + 1):
                coeff = poly_t[i]
                while len(coeff) > 1 and coeff[-1] == 0:
                    coeff.pop()
                shift = i * (i - 1) // 2
                expected = [0] * shift + list(gaussian_binomial_poly(n, i))
                while len(expected) > 1 and expected[-1] == 0:
                    expected.pop()
                assert coeff == expected, (n, i)


class TestGaussSum:
    def test_full_sum_vanishes(self):
        assert not gauss_sum(3, CycNum.zeta(3))

    def test_empty_sum(self):
        assert not gauss_sum(0, CycNum.zeta(5))

    def test_one_plus_i(self):
        assert gauss_sum(2, CycNum.zeta(4)) == CycNum.zeta(4) + 1

    @pytest.mark.parametrize("m", list(range(2, 31)))
    def test_vanishing_iff_divisible(self, m):
        z = CycNum.zeta(m)
        for d in range(0, 2 * m + 1):
            if d % m == 0:
                assert not gauss_sum(d, z), (m, d)
            else:
                assert gauss_sum(d, z), (m, d)

    def test_trivial_root(self):
        # ord(zeta) = 1 degenerates: the sum counts the terms
        assert gauss_sum(4, CycNum.rational(1)) == CycNum.rational(4)


class TestRatFunc:
    def field(self, order=3, variables=("v",)):
        return FunctionField(order, variables)

    def test_variable_not_square(self):
        F = self.field()
        assert not ratfunc_is_nth_power(F.var("v"), 2)

    def test_square_detected(self):
        F = self.field()
        v = F.var("v")
        assert ratfunc_is_nth_power(v * v, 2)

    def test_ratio_of_squares(self):
        F = self.field()
        v = F.var("v")
        f = (v ** 2) / ((v + 1) ** 2)
        h = v / (v + 1)
        assert h * h == f  # brute confirmation of the witness
        assert ratfunc_is_nth_power(f, 2)

    def test_constant_times_power(self):
        F = self.field()
        v = F.var("v")
        # constants count as n-th powers: k is modelled algebraically closed
        assert ratfunc_is_nth_power(F.const(7) * v ** 3, 3)
        assert not ratfunc_is_nth_power(F.const(7) * v ** 3, 2)

    def test_mixed_power(self):
        F = FunctionField(3, ("v", "w"))
        v, w = F.var("v"), F.var("w")
        assert ratfunc_is_nth_power((v * w) ** 2 / (v + w) ** 4, 2)
        assert not ratfunc_is_nth_power(v ** 2 * w, 2)

    def test_zero_rejected(self):
        F = self.field()
        with pytest.raises(ValueError):
            ratfunc_is_nth_power(F.zero(), 2)

    @settings(max_examples=40, deadline=None)
    @given(st.lists(st.integers(-3, 3), min_size=6, max_size=6),
           st.lists(st.integers(-3, 3), min_size=6, max_size=6),
           st.lists(st.integers(-3, 3), min_size=6, max_size=6))
    def test_field_axioms(self, ca, cb, cc):
        F = FunctionField(4, ("v", "w"))
        v, w = F.var("v"), F.var("w")

        def build(cs):
            return (F.const(cs[0]) + v * cs[1] + w * cs[2]
                    + v * v * cs[3] + v * w * cs[4] + F.zeta() * cs[5])

        a, b, c = build(ca), build(cb), build(cc)
        assert (a + b) * c == a * c + b * c
        assert (a * b) * c == a * (b * c)
        if b:
            assert (a / b) * b == a

    def test_canonical_equality(self):
        F = self.field()
        v = F.var("v")
        a = (v * v - 1) / (v - 1)
        assert a == v + 1  # gcd cancellation happened
        assert (v + 1) / (v + 1) == F.one()

    def test_den_monic_normalization(self):
        F = self.field()
        v = F.var("v")
        a = F.one() / (v * 2 + 2)
        lead = max(a.den, key=lambda e: (sum(e), e))
        assert a.den[lead] == CycNum.rational(1)
