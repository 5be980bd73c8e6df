"""The k = -1 limit: complete symmetric functions, the determinant
formula for Schur-Laurent functions, and the limit of the eigenfunctions."""

import pytest

from jacklaurent.rational import K, RAT_ONE, rat
from jacklaurent.laurent import LaurentSymFunc
from jacklaurent.jack import construct
from jacklaurent.schur import (
    ResidualP0, complete_h, jacobi_trudy_S, schur_limit,
)

g = LaurentSymFunc.gen


class TestCompleteFunctions:
    def test_newton_recursion(self):
        assert complete_h(0) == LaurentSymFunc.one()
        assert complete_h(1) == g(1)
        assert complete_h(2) == (g(1) * g(1) + g(2)) * rat(1, 2)
        assert complete_h(3) == \
            (g(1) * g(1) * g(1) + g(1) * g(2) * 3 + g(3) * 2) * rat(1, 6)

    def test_negative_index_is_zero(self):
        assert complete_h(-1).is_zero()


class TestDeterminant:
    def test_small_cases(self):
        assert jacobi_trudy_S((), ()) == LaurentSymFunc.one()
        assert jacobi_trudy_S((2,), ()) == complete_h(2)
        assert jacobi_trudy_S((), (2,)) == complete_h(2).star()

    def test_mixed_cases(self):
        assert jacobi_trudy_S((1,), (1,)) == \
            g(1) * g(-1) - LaurentSymFunc.one()
        assert jacobi_trudy_S((1, 1), (1,)) == \
            (g(1) * g(1) - g(2)) * rat(1, 2) * g(-1) - g(1)


class TestLimit:
    @pytest.mark.parametrize("lam,mu", [
        ((1,), (1,)), ((1, 1), (1,)), ((2,), (1,)), ((1,), (1, 1)),
        ((2,), (2,)), ((2, 1), (1,)), ((3,), ()), ((1, 1, 1), ()),
    ])
    def test_eigenfunction_limit_is_determinant(self, lam, mu):
        p = construct((lam, mu))
        assert schur_limit(p.f) == jacobi_trudy_S(lam, mu)

    def test_residual_parameter_rejected(self):
        # a k-free coefficient still involving p0 cannot be a limit value
        from jacklaurent.rational import P0
        f = g(1) * (P0 + K)
        with pytest.raises(ResidualP0):
            schur_limit(f)

    def test_limit_is_plain_substitution_when_regular(self):
        f = g(1) * (RAT_ONE / (RAT_ONE - K))
        assert schur_limit(f) == g(1) * rat(1, 2)
