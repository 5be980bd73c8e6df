"""Scalar closed forms: eigenvalues, shifted power sums, Bernoulli sums,
Pieri coefficients, Stanley-type products, evaluations, norms and the
duality constant — all as exact elements of Q(k, p0).

Conventions.  Partitions are weakly decreasing tuples; a bipartition is a
pair (lam, mu).  Boxes are (row, column), 1-indexed.  A box which cannot
be added (for V) or removed (for U) contributes a Pieri coefficient of 0.
"""

from fractions import Fraction
from math import comb

from .rational import ParamRat, RAT_ZERO, RAT_ONE, K, P0, rat
from .partitions import part, size, conjugate, boxes, add_box_candidates, \
    remove_box_candidates, content_box


class SingularProduct(ArithmeticError):
    """A denominator factor of a closed-form product vanishes identically."""


def _as_rat(v):
    if isinstance(v, ParamRat):
        return v
    if isinstance(v, int):
        return ParamRat.from_int(v)
    if isinstance(v, Fraction):
        return ParamRat.from_fraction(v)
    raise TypeError("expected ParamRat, int or Fraction, got %r" % (v,))


# -- eigenvalues ---------------------------------------------------------------

def eigenvalue_e(alpha):
    """The second CMS integral's eigenvalue on the function labelled alpha:

        sum lam_i^2 + sum mu_j^2 + k*sum (2i-1) lam_i + k*sum (2j-1) mu_j
          - k*p0*(|lam| + |mu|).
    """
    lam, mu = alpha
    n = 0
    lin = 0
    for i, x in enumerate(lam, start=1):
        n += x * x
        lin += (2 * i - 1) * x
    for j, y in enumerate(mu, start=1):
        n += y * y
        lin += (2 * j - 1) * y
    return rat(n) + K * lin - K * P0 * (size(lam) + size(mu))


def eigenvalue_eN(chi, N):
    """Finite-dimensional eigenvalue sum chi_i^2 - k*sum (N-2i+1) chi_i."""
    if len(chi) != N:
        raise ValueError("sequence length %d != N=%d" % (len(chi), N))
    n = sum(x * x for x in chi)
    lin = sum((N - 2 * i + 1) * x for i, x in enumerate(chi, start=1))
    return rat(n) - K * lin


def stable_eigenvalue(lam):
    """Eigenvalue of the second stable integral on the positive-part Jack
    function: sum lam_i^2 + k*sum (2i-1) lam_i.  Free of p0."""
    n = 0
    lin = 0
    for i, x in enumerate(lam, start=1):
        n += x * x
        lin += (2 * i - 1) * x
    return rat(n) + K * lin


# -- shifted power sums and Harish-Chandra values ------------------------------

def shifted_power_sum(r, a, seq):
    """p_{r,a}(seq) = sum_i [(seq_i + k(i-1) + a)^r - (k(i-1) + a)^r].

    Works both for partitions and for integer sequences (zero entries
    contribute nothing).  `a` may be an int, Fraction or ParamRat.
    """
    if r < 1:
        raise ValueError("power sum order must be >= 1")
    a = _as_rat(a)
    total = RAT_ZERO
    for i, x in enumerate(seq, start=1):
        if x == 0:
            continue
        base = K * (i - 1) + a
        total = total + (base + rat(x)) ** r - base ** r
    return total


def hc_value(r, alpha):
    """The value of the r-th shifted power sum on a bipartition:

        p_{r,0}(lam) + (-1)^r p_{r, k - k*p0}(mu),

    the twist on the mu-side coming from w(p_{r,a}) = (-1)^r p_{r,k-kp0-a}.
    """
    lam, mu = alpha
    v = shifted_power_sum(r, RAT_ZERO, lam)
    w = shifted_power_sum(r, K - K * P0, mu)
    return v + w if r % 2 == 0 else v - w


# -- Bernoulli sums and spectrum separation ------------------------------------

def _bernoulli_numbers(n):
    """B_0..B_n with B_1 = -1/2 (the generating-function convention)."""
    out = [Fraction(1)]
    for m in range(1, n + 1):
        s = Fraction(0)
        for j in range(m):
            s += comb(m + 1, j) * out[j]
        out.append(-s / (m + 1))
    return out


def bernoulli_poly_at(l, z):
    """The Bernoulli polynomial B_l evaluated at a ParamRat argument."""
    z = _as_rat(z)
    bnums = _bernoulli_numbers(l)
    total = RAT_ZERO
    for s in range(l + 1):
        c = comb(l, s) * bnums[l - s]
        if c:
            total = total + (z ** s) * ParamRat.from_fraction(c)
    return total


def bernoulli_b_lambda(l, lam, a):
    """Single-diagram content sum l * sum_{(i,j) in lam} c((i,j), a)^(l-1)."""
    if l < 1:
        raise ValueError("order must be >= 1")
    a = _as_rat(a)
    total = RAT_ZERO
    for box in boxes(lam):
        total = total + content_box(box, a) ** (l - 1)
    return total * l


def bernoulli_b(l, alpha):
    """Bernoulli sum on a bipartition:

        b_l(alpha) = l*sum_{box in lam} c(box,0)^(l-1)
                     + (-1)^l * l*sum_{box in mu} c(box, 1+k-k*p0)^(l-1).
    """
    lam, mu = alpha
    v = bernoulli_b_lambda(l, lam, RAT_ZERO)
    w = bernoulli_b_lambda(l, mu, RAT_ONE + K - K * P0)
    return v + w if l % 2 == 0 else v - w


def bernoulli_b_sequence(l, chi, a=RAT_ZERO):
    """Bernoulli-polynomial form sum_i [B_l(chi_i + k(i-1) + a) - B_l(k(i-1)+a)].

    Independent route to the same quantity on finite sequences; used to
    cross-check bernoulli_b at p0 = N.
    """
    a = _as_rat(a)
    total = RAT_ZERO
    for i, x in enumerate(chi, start=1):
        if x == 0:
            continue
        base = K * (i - 1) + a
        total = total + bernoulli_poly_at(l, base + rat(x)) \
            - bernoulli_poly_at(l, base)
    return total


def separation_check(alpha, beta, l_max=8):
    """True when some Bernoulli sum b_l, l <= l_max, separates the labels."""
    if alpha == beta:
        raise ValueError("labels must differ")
    for l in range(1, l_max + 1):
        if bernoulli_b(l, alpha) != bernoulli_b(l, beta):
            return True
    return False


# -- Pieri coefficients --------------------------------------------------------

def c_lambda(lam, j, i, a):
    """lam_i - j - k*(lam'_j - i) + a."""
    return rat(part(lam, i) - j) - K * (part(conjugate(lam), j) - i) + _as_rat(a)


def c_alpha(alpha, j, i, a):
    """lam_i + j + k*(mu'_j + i) + a."""
    lam, mu = alpha
    return rat(part(lam, i) + j) + K * (part(conjugate(mu), j) + i) + _as_rat(a)


def pieri_V(box, alpha):
    """Coefficient of P_{lam+box, mu} in p_1 * P_{lam,mu}:

        prod_{r=1}^{i-1} c_lam(jr,1) c_lam(jr,-2k) / [c_lam(jr,-k) c_lam(jr,1-k)]

    for box = (i,j); 0 when the box is not addable to lam.
    """
    lam, mu = alpha
    i, j = box
    if box not in add_box_candidates(lam):
        return RAT_ZERO
    v = RAT_ONE
    for r in range(1, i):
        num = c_lambda(lam, j, r, 1) * c_lambda(lam, j, r, K * (-2))
        den = c_lambda(lam, j, r, -K) * c_lambda(lam, j, r, RAT_ONE - K)
        if den.is_zero():
            raise SingularProduct("vanishing Pieri V factor at r=%d" % r)
        v = v * num / den
    return v


def pieri_U(box, alpha):
    """Coefficient of P_{lam, mu-box} in p_1 * P_{lam,mu}; 0 when the box
    is not removable from mu.  All ingredients use mu before removal.
    """
    lam, mu = alpha
    i, j = box
    if box not in remove_box_candidates(mu):
        return RAT_ZERO
    u = RAT_ONE
    for r in range(i + 1, len(mu) + 1):
        num = c_lambda(mu, j, r, RAT_ONE + K) * c_lambda(mu, j, r, -K)
        den = c_lambda(mu, j, r, 1) * c_lambda(mu, j, r, 0)
        if den.is_zero():
            raise SingularProduct("vanishing Pieri U factor (mu part)")
        u = u * num / den
    for r in range(1, len(lam) + 1):
        num = c_alpha(alpha, j, r, -RAT_ONE - K * (P0 + rat(2))) \
            * c_alpha(alpha, j, r, -K * P0)
        den = c_alpha(alpha, j, r, -RAT_ONE - K * (P0 + RAT_ONE)) \
            * c_alpha(alpha, j, r, -K * (P0 + RAT_ONE))
        if den.is_zero():
            raise SingularProduct("vanishing Pieri U factor (cross part)")
        u = u * num / den
    mu_pj = part(conjugate(mu), j)
    ll, lm = len(lam), len(mu)
    num = (rat(j - 1) + K * (ll + mu_pj - 1) - K * P0) \
        * (rat(j) + K * (mu_pj - lm))
    den = (rat(j) + K * (ll + mu_pj) - K * P0) \
        * (rat(j - 1) + K * (mu_pj - lm - 1))
    if den.is_zero():
        raise SingularProduct("vanishing Pieri U factor (boundary part)")
    return u * num / den


# -- diagrammatic Pieri coefficients -------------------------------------------

def _y_row(alpha, i):
    lam, mu = alpha
    if i >= 1:
        return part(lam, i)
    if i <= -1:
        return -part(mu, -i)
    raise ValueError("row index 0")


def _y_col(alpha, j):
    lam, mu = alpha
    if j >= 1:
        return part(conjugate(lam), j)
    if j <= -1:
        return -part(conjugate(mu), -j)
    raise ValueError("column index 0")


def c_Y(alpha, box_ji, a):
    """y_i - j - k*(y'_j - i) + a on the two-diagram figure; box is (j, i)."""
    j, i = box_ji
    return rat(_y_row(alpha, i) - j) - K * (_y_col(alpha, j) - i) + _as_rat(a)


def pieri_V_diagram(box, alpha):
    """The added-box coefficient as a product over the column below the box
    in the two-diagram figure; box = (i,j) in the lam diagram."""
    lam, mu = alpha
    i, j = box
    if box not in add_box_candidates(lam):
        return RAT_ZERO
    v = RAT_ONE
    for r in range(1, i):
        num = c_Y(alpha, (j, r), K * (-2)) * c_Y(alpha, (j, r), 1)
        den = c_Y(alpha, (j, r), -K) * c_Y(alpha, (j, r), RAT_ONE - K)
        if den.is_zero():
            raise SingularProduct("vanishing diagrammatic V factor")
        v = v * num / den
    return v


def pieri_U_diagram(box, alpha, L=None, M=None):
    """The removed-box coefficient as products over the figure column of the
    box; box = (i,j) in the mu diagram, sitting at (-j,-i) in the figure.

    L and M bound the surrounding rectangle; any L >= l(lam), M >= l(mu)
    gives the same value (enlargement invariance).
    """
    lam, mu = alpha
    i, j = box
    if box not in remove_box_candidates(mu):
        return RAT_ZERO
    if L is None:
        L = len(lam)
    if M is None:
        M = len(mu)
    if L < len(lam) or M < len(mu):
        raise ValueError("rectangle must contain both diagrams")
    jj = -j
    mu_pj = part(conjugate(mu), j)
    u = RAT_ONE
    for r in range(-M, -mu_pj):
        num = c_Y(alpha, (jj, r), -RAT_ONE - K) * c_Y(alpha, (jj, r), K)
        den = c_Y(alpha, (jj, r), -1) * c_Y(alpha, (jj, r), 0)
        if den.is_zero():
            raise SingularProduct("vanishing diagrammatic U factor (pi2)")
        u = u * num / den
    for r in range(1, L + 1):
        num = c_Y(alpha, (jj, r), -RAT_ONE - K * (P0 + rat(2))) \
            * c_Y(alpha, (jj, r), -K * P0)
        den = c_Y(alpha, (jj, r), -RAT_ONE - K * (P0 + RAT_ONE)) \
            * c_Y(alpha, (jj, r), -K * (P0 + RAT_ONE))
        if den.is_zero():
            raise SingularProduct("vanishing diagrammatic U factor (pi3)")
        u = u * num / den
    ycol = -mu_pj
    num = (rat(jj + 1) + K * (ycol - L) + K * (P0 + RAT_ONE)) \
        * (rat(jj) + K * (ycol + M))
    den = (rat(jj) + K * (ycol - L) + K * P0) \
        * (rat(jj + 1) + K * (ycol + M + 1))
    if den.is_zero():
        raise SingularProduct("vanishing diagrammatic U factor (boundary)")
    return u * num / den


# -- Stanley products, evaluation, norms, duality ------------------------------

def stanley_phi(lam, p, x, variant=1):
    """The box product phi_p(lam, x); two displayed numerator forms:

        variant 1:  j - 1 + k(i-1-p) + x
        variant 2:  lam_i - j + k(i-1-p) + x

    over the common denominator lam_i - j + k(i-1-lam'_j) + x.
    """
    p = _as_rat(p)
    x = _as_rat(x)
    lamc = conjugate(lam)
    v = RAT_ONE
    for (i, j) in boxes(lam):
        if variant == 1:
            num = rat(j - 1) + K * (rat(i - 1) - p) + x
        elif variant == 2:
            num = rat(part(lam, i) - j) + K * (rat(i - 1) - p) + x
        else:
            raise ValueError("variant must be 1 or 2")
        den = rat(part(lam, i) - j) + K * (i - 1 - part(lamc, j)) + x
        if den.is_zero():
            raise SingularProduct(
                "phi denominator vanishes at box (%d,%d)" % (i, j))
        v = v * num / den
    return v


def phi_pair(lam, mu, p, x):
    """The mixed product phi_p(lam, mu, x) over i <= l(lam), j <= l(mu'):

        [lam_i+j-1+k(i-1-p)+x] [j-1+k(i-1+mu'_j-p)+x]
        -----------------------------------------------
        [j-1+k(i-1-p)+x] [lam_i+j-1+k(i-1+mu'_j-p)+x].
    """
    p = _as_rat(p)
    x = _as_rat(x)
    muc = conjugate(mu)
    v = RAT_ONE
    for i in range(1, len(lam) + 1):
        li = part(lam, i)
        for j in range(1, len(muc) + 1):
            shift = K * (rat(i - 1) - p) + x
            tshift = shift + K * part(muc, j)
            num = (rat(li + j - 1) + shift) * (rat(j - 1) + tshift)
            den = (rat(j - 1) + shift) * (rat(li + j - 1) + tshift)
            if den.is_zero():
                raise SingularProduct(
                    "phi_pair denominator vanishes at (%d,%d)" % (i, j))
            v = v * num / den
    return v


def evaluation_value(alpha):
    """epsilon(P_alpha) = phi_p0(lam,0) phi_p0(mu,0) phi_p0(lam,mu,0)."""
    lam, mu = alpha
    return stanley_phi(lam, P0, RAT_ZERO) * stanley_phi(mu, P0, RAT_ZERO) \
        * phi_pair(lam, mu, P0, RAT_ZERO)


def norm_value(alpha):
    """Square norm of P_alpha for the p0-deformed bilinear form:
    the same triple product evaluated at 0 divided by its value at 1+k."""
    lam, mu = alpha
    x1 = RAT_ONE + K
    num = stanley_phi(lam, P0, RAT_ZERO) * stanley_phi(mu, P0, RAT_ZERO) \
        * phi_pair(lam, mu, P0, RAT_ZERO)
    den = stanley_phi(lam, P0, x1) * stanley_phi(mu, P0, x1) \
        * phi_pair(lam, mu, P0, x1)
    if den.is_zero():
        raise SingularProduct("norm denominator vanishes identically")
    return num / den


def duality_constant(alpha):
    """d_alpha = epsilon(P_alpha) / [epsilon(P_alpha') at k -> 1/k, p0 -> k*p0]
    with alpha' the pair of conjugate diagrams."""
    lam, mu = alpha
    num = evaluation_value(alpha)
    den = evaluation_value((conjugate(lam), conjugate(mu))).param_swap()
    if den.is_zero():
        raise SingularProduct("duality denominator vanishes identically")
    return num / den


def phi_infinity(lam):
    """Limit norm factor: prod over boxes of
    [lam_i - j + 1 + k(i - lam'_j)] / [lam_i - j + k(i - 1 - lam'_j)]."""
    lamc = conjugate(lam)
    v = RAT_ONE
    for (i, j) in boxes(lam):
        arm = part(lam, i) - j
        leg = part(lamc, j)
        num = rat(arm + 1) + K * (i - leg)
        den = rat(arm) + K * (i - 1 - leg)
        if den.is_zero():
            raise SingularProduct("phi_infinity denominator vanishes")
        v = v * num / den
    return v
