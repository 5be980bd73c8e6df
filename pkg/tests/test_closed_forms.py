"""Closed-form data attached to a bipartition label: eigenvalues,
shifted power sums, Bernoulli-type sums, Pieri coefficients,
Stanley-type products, evaluations, norms, and duality constants."""

import pytest
from hypothesis import given, settings, strategies as st

from jacklaurent.rational import K, P0, RAT_ONE, RAT_ZERO, rat
from jacklaurent.partitions import chi_N, partitions_up_to
from jacklaurent.closed_forms import (
    bernoulli_b, bernoulli_b_lambda, bernoulli_b_sequence, bernoulli_poly_at,
    c_alpha, duality_constant, eigenvalue_e, eigenvalue_eN, evaluation_value,
    hc_value, norm_value, phi_infinity, phi_pair, pieri_U, pieri_U_diagram,
    pieri_V, pieri_V_diagram, separation_check, shifted_power_sum,
    stable_eigenvalue, stanley_phi,
)

partitions3 = st.sampled_from(tuple(partitions_up_to(3)))


class TestEigenvalues:
    def test_frozen(self):
        assert eigenvalue_e(((1,), (1,))) == rat(2) + K * 2 - K * P0 * 2
        assert eigenvalue_e(((), ())) == RAT_ZERO
        assert eigenvalue_eN((1, 0, -1), 3) == rat(2) - K * 4
        assert eigenvalue_eN((0, 0), 2) == RAT_ZERO
        assert stable_eigenvalue((2, 1)) == rat(5) + K * 5

    def test_finite_matches_specialized(self):
        for alpha, N in [(((1,), (1,)), 3), (((2,), (1,)), 2),
                         (((2, 1), ()), 4)]:
            chi = chi_N(alpha, N)
            assert eigenvalue_eN(chi, N) == \
                eigenvalue_e(alpha).substitute_p0(N), (alpha, N)

    @settings(max_examples=25, deadline=None)
    @given(partitions3, partitions3)
    def test_w_flip(self, lam, mu):
        # e2 is symmetric under swapping the two halves of the label
        assert eigenvalue_e((lam, mu)) == eigenvalue_e((mu, lam))


class TestShiftedSumsAndHC:
    def test_shifted_power_sum(self):
        assert shifted_power_sum(1, 0, (2, 1)) == rat(3)
        assert shifted_power_sum(2, 0, ()) == RAT_ZERO

    def test_hc_values(self):
        assert hc_value(1, ((1,), (1,))) == RAT_ZERO
        assert hc_value(1, ((2, 1), (1,))) == rat(2)
        assert hc_value(2, ((1,), (1,))) == rat(2) + K * 2 - K * P0 * 2

    def test_hc_order_two_vs_eigenvalue(self):
        # the two second-order generators differ by a multiple of the
        # first one: e2 = hc2 + k(1 - p0)(|lam| - |mu|)
        for alpha in [((1,), ()), ((2,), (1,)), ((2, 1), (1, 1)),
                      ((3, 1), (2,)), ((), (3,))]:
            lam, mu = alpha
            shift = (K - K * P0) * (sum(lam) - sum(mu))
            assert hc_value(2, alpha) + shift == eigenvalue_e(alpha), alpha


class TestBernoulli:
    def test_frozen(self):
        assert bernoulli_b(1, ((2, 1), (1,))) == rat(2)
        assert bernoulli_b(3, ((), ())) == RAT_ZERO
        assert bernoulli_b(2, ((1,), ())) == RAT_ZERO

    def test_dual_route(self):
        # content-power sum vs Bernoulli-polynomial telescoping
        for l in (1, 2, 3, 4):
            for lam in ((1,), (2,), (2, 1), (3, 1)):
                for a in (RAT_ZERO, RAT_ONE + K - K * P0, K * 3 - rat(1, 2)):
                    assert bernoulli_b_lambda(l, lam, a) == \
                        bernoulli_b_sequence(l, lam, a), (l, lam)

    def test_difference_equation(self):
        # B_l(x+1) - B_l(x) = l x^{l-1}
        x = K * 2 + P0 * rat(1, 3) + rat(5, 7)
        for l in (1, 2, 3, 5):
            assert bernoulli_poly_at(l, x + RAT_ONE) - \
                bernoulli_poly_at(l, x) == (x ** (l - 1)) * l


class TestSeparation:
    def test_separated_pairs(self):
        assert separation_check(((1,), ()), ((), (1,)), 8)
        assert separation_check(((2,), ()), ((1, 1), ()), 8)

    def test_equal_labels_rejected(self):
        with pytest.raises(ValueError):
            separation_check(((1,), (1,)), ((1,), (1,)), 8)


class TestPieriCoefficients:
    def test_V_frozen(self):
        assert pieri_V((1, 2), ((1,), (1,))) == RAT_ONE
        assert pieri_V((3, 1), ((1,), ())) == RAT_ZERO
        assert pieri_V((2, 1), ((1,), ())) == rat(2) / (RAT_ONE - K)

    def test_U_frozen(self):
        assert pieri_U((1, 1), ((), (1,))) == P0 / (RAT_ONE + K - K * P0)
        u = pieri_U((1, 1), ((1,), (1,)))
        want = ((RAT_ONE - K * P0) * (rat(2) + K * 2 - K * P0)
                * (P0 - RAT_ONE)) / (
            (RAT_ONE + K - K * P0) * (rat(2) + K - K * P0)
            * (RAT_ONE + K * 2 - K * P0))
        assert u == want
        # at p0 = 2 this must agree with the two-variable picture
        assert u.substitute_p0(2) == \
            (rat(2) * (RAT_ONE - K * 2)) / ((RAT_ONE - K) * (rat(2) - K))
        assert pieri_U((2, 1), ((), (1,))) == RAT_ZERO

    def test_diagram_route_V(self):
        for box, alpha in [((2, 1), ((1,), ())), ((2, 2), ((3, 1), (1,))),
                           ((3, 1), ((2, 2), (1,)))]:
            assert pieri_V_diagram(box, alpha) == pieri_V(box, alpha), \
                (box, alpha)

    def test_diagram_route_U_and_rectangle_invariance(self):
        cases = [
            ((1, 1), ((), (1,))),
            ((1, 1), ((1,), (1,))),
            ((1, 2), ((1,), (2,))),
            ((2, 1), ((2,), (2, 1))),
            ((1, 1), ((2, 1), (1, 1))),
            ((2, 1), ((1,), (1, 1))),
        ]
        for box, alpha in cases:
            lam, mu = alpha
            d = pieri_U(box, alpha)
            assert pieri_U_diagram(box, alpha) == d, (box, alpha)
            # the bounding rectangle is a free choice
            assert pieri_U_diagram(box, alpha,
                                   L=len(lam) + 2, M=len(mu)) == d
            assert pieri_U_diagram(box, alpha,
                                   L=len(lam), M=len(mu) + 3) == d
            assert pieri_U_diagram(box, alpha,
                                   L=len(lam) + 1, M=len(mu) + 2) == d


class TestStanleyProducts:
    def test_base_values(self):
        assert stanley_phi((), P0, RAT_ZERO) == RAT_ONE
        assert stanley_phi((1,), P0, RAT_ZERO) == P0

    def test_two_presentations_agree(self):
        for lam in ((1,), (2, 1), (3, 1, 1)):
            for xv in (RAT_ZERO, RAT_ONE + K):
                assert stanley_phi(lam, P0, xv, variant=1) == \
                    stanley_phi(lam, P0, xv, variant=2), lam

    def test_complementary_pair(self):
        # complementary diagrams inside a rectangle give equal products
        xsym = K * 5 + P0 + rat(3)
        assert stanley_phi((2, 1), 2, xsym) == stanley_phi((1,), 2, xsym)
        assert stanley_phi((3, 1), 2, xsym) == stanley_phi((2,), 2, xsym)

    def test_joined_diagram_factorization(self):
        xsym = K * 5 + P0 + rat(3)
        lhs = stanley_phi((2,), 2, xsym)
        rhs = stanley_phi((1,), 2, xsym) ** 2 * phi_pair((1,), (1,), 2, xsym)
        assert lhs == rhs
        lhs = stanley_phi((3, 1), 3, xsym)
        rhs = stanley_phi((2,), 3, xsym) * stanley_phi((1,), 3, xsym) \
            * phi_pair((2,), (1,), 3, xsym)
        assert lhs == rhs


class TestEvaluationNormDuality:
    def test_frozen(self):
        assert evaluation_value(((1,), ())) == P0
        assert evaluation_value(((1,), (1,))) == \
            P0 * (P0 - RAT_ONE) * (RAT_ONE - K * P0) / (RAT_ONE + K - K * P0)
        assert norm_value(((), (1,))) == P0 / (RAT_ONE + K - K * P0)
        assert duality_constant(((1,), ())) == RAT_ONE / K
        assert phi_infinity((1,)) == -RAT_ONE / K
        assert phi_infinity(()) == RAT_ONE

    def test_w_symmetry(self):
        for alpha in [((1,), (1,)), ((2,), (1,)), ((2, 1), (1, 1))]:
            lam, mu = alpha
            assert evaluation_value(alpha) == evaluation_value((mu, lam))
            assert norm_value(alpha) == norm_value((mu, lam))

    def test_linear_factors(self):
        # c_alpha(alpha, j, i, a) = lam_i + j + k (mu'_j + i) + a
        assert c_alpha(((1,), (1,)), 1, 1, RAT_ONE) == rat(3) + K * 2
        assert c_alpha(((), ()), 1, 1, RAT_ZERO) == RAT_ONE + K
