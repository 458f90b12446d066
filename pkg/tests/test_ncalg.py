"""Rewriting engine and quotient-dimension oracle."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hopfact.ncalg import (
    FreeAlgebra,
    GenSymbol,
    NCPoly,
    TensorPoly,
    orient_relations,
    truncated_quotient_dim,
)
from hopfact.scalars import CycNum


def taft_system(n):
    one = CycNum.rational(1, n)
    z = CycNum.zeta(n)
    A = FreeAlgebra([GenSymbol("g", 0), GenSymbol("x", 1)], one)
    g, x = A.gen("g"), A.gen("x")
    relations = [g ** n - A.one(), x ** n, x * g - g * x * z.inverse()]
    return A, orient_relations(A, relations), relations


class TestNormalForm:
    def test_xg_straightens(self):
        A, rs, _ = taft_system(3)
        z = CycNum.zeta(3)
        g, x = A.gen("g"), A.gen("x")
        assert rs.normal_form(x * g) == g * x * z.inverse()

    def test_x_cubed_dies(self):
        A, rs, _ = taft_system(3)
        x = A.gen("x")
        assert not rs.normal_form(x ** 3)

    def test_g_cubed_is_one(self):
        A, rs, _ = taft_system(3)
        g = A.gen("g")
        assert rs.normal_form(g ** 3) == A.one()

    def test_idempotent(self):
        A, rs, _ = taft_system(4)
        g, x = A.gen("g"), A.gen("x")
        p = (x + g) ** 5 - g * x * g * x
        nf = rs.normal_form(p)
        assert rs.normal_form(nf) == nf

    def test_multiplicative_up_to_ideal(self):
        A, rs, _ = taft_system(3)
        g, x = A.gen("g"), A.gen("x")
        a = x * g + g
        b = g * x * g + x
        lhs = rs.normal_form(a * b)
        rhs = rs.normal_form(rs.normal_form(a) * rs.normal_form(b))
        assert lhs == rhs

    @settings(max_examples=25, deadline=None)
    @given(st.lists(st.sampled_from(["g", "x"]), max_size=8),
           st.lists(st.sampled_from(["g", "x"]), max_size=8))
    def test_random_words_multiplicative(self, w1, w2):
        A, rs, _ = taft_system(3)
        p1 = A.from_word(A.word(*w1))
        p2 = A.from_word(A.word(*w2))
        assert rs.normal_form(p1 * p2) == rs.normal_form(rs.normal_form(p1) * rs.normal_form(p2))


class TestTensor:
    def test_legwise_rewrite(self):
        A, rs, _ = taft_system(3)
        z = CycNum.zeta(3)
        g, x = A.gen("g"), A.gen("x")
        one = A.one()
        t = TensorPoly.of([x, one]) * TensorPoly.of([g, x])
        expected = TensorPoly.of([g * x, x]).scale(z.inverse())
        assert t.normal_form(rs) == expected

    def test_unit_acts_trivially(self):
        A, rs, _ = taft_system(3)
        g, x = A.gen("g"), A.gen("x")
        t = TensorPoly.of([g, x])
        assert (TensorPoly.unit(A, 2) * t).normal_form(rs) == t.normal_form(rs)

    def test_group_inverse_in_both_legs(self):
        n = 4
        A, rs, _ = taft_system(n)
        g = A.gen("g")
        t = TensorPoly.of([g, g]) * TensorPoly.of([g ** (n - 1), g ** (n - 1)])
        assert t.normal_form(rs) == TensorPoly.unit(A, 2)


class TestQuotientDim:
    @pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
    def test_taft_dimension(self, n):
        A, rs, rels = taft_system(n)
        res = truncated_quotient_dim(rs, rels, cap=2 * n)
        assert res.stabilized and res.dim == n * n

    def test_taft_normal_word_count_matches(self, n=4):
        A, rs, rels = taft_system(n)
        levels = rs.normal_words(2 * n)
        assert sum(len(l) for l in levels) == n * n

    def test_free_algebra_does_not_stabilize(self):
        one = CycNum.rational(1, 1)
        A = FreeAlgebra([GenSymbol("a"), GenSymbol("b")], one)
        rs = orient_relations(A, [])
        res = truncated_quotient_dim(rs, [], cap=4)
        assert not res.stabilized
        assert res.dim is None and "stabiliz" in res.reason

    def test_order_violation_rejected(self):
        from hopfact.ncalg import RewriteSystem
        one = CycNum.rational(1, 1)
        A = FreeAlgebra([GenSymbol("a"), GenSymbol("b")], one)
        a, b = A.gen("a"), A.gen("b")
        # a*b -> b*a*b increases the word order and must be refused
        with pytest.raises(ValueError):
            RewriteSystem(A, [(A.word("a", "b"), b * a * b)])
