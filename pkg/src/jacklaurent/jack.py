"""Two-parameter eigenfunctions P_{lam,mu} of the CMS integrals on the
Laurent symmetric-function algebra, built by spectral projection.

The construction grows the first diagram box by box.  One step takes the
function at alpha = (lam, mu), multiplies by p_1, and isolates the
P_{lam+box, mu} component by applying, for every other label gamma that
can appear in the product, the factor (L2 - e(gamma))/(s - e(gamma)),
where s is the eigenvalue of the target; finally it divides by the Pieri
coefficient of the added box.  The base case P_{0,mu} is the image under
p_i -> p_{-i} of the classical one-parameter eigenfunction P_mu of the
positive part, which is built the same way from the p0-free stable
integral and therefore never acquires a p0 dependence.

Everything is exact over Q(k, p0).  A parallel numeric mode runs the same
recursion at a fixed rational (k, p0), guarding against eigenvalue
collisions and vanishing transition coefficients.
"""

from fractions import Fraction

from .rational import ParamRat, RAT_ZERO, rat, SingularParameter, \
    PoleAtSpecialization, NotEigenvector
from .laurent import LaurentSymFunc, mono_str
from .partitions import size, conjugate, add_box_candidates, \
    remove_box_candidates, add_box, remove_box
from .operators import cms_L, cms_L2_direct, stable_H2_direct
from .closed_forms import eigenvalue_e, stable_eigenvalue, pieri_V, \
    pieri_U, duality_constant


class JackLaurentFunction:
    """A constructed eigenfunction together with its label and trace.

    fields: alpha (the bipartition), f (the element of the algebra),
    eigenvalue2 (the second integral's eigenvalue), provenance (the
    sequence of boxes added to the first diagram, in order).
    Instances are immutable; the memo table shares them freely.
    """

    __slots__ = ("alpha", "f", "eigenvalue2", "provenance")

    def __init__(self, alpha, f, eigenvalue2, provenance):
        self.alpha = alpha
        self.f = f
        self.eigenvalue2 = eigenvalue2
        self.provenance = provenance

    def __str__(self):
        lam, mu = self.alpha
        return "P[%s; %s] = %s" % (",".join(map(str, lam)) or "0",
                                   ",".join(map(str, mu)) or "0", self.f)

    def __repr__(self):
        return "JackLaurentFunction(alpha=%r)" % (self.alpha,)


def _partition(seq):
    t = tuple(int(x) for x in seq)
    if any(t[i] < t[i + 1] for i in range(len(t) - 1)) or (t and t[-1] <= 0):
        raise ValueError("not a partition: %r" % (seq,))
    return t


def _normalize_alpha(alpha):
    lam, mu = alpha
    return _partition(lam), _partition(mu)


def _deepest_removable(lam):
    return max(remove_box_candidates(lam))


def _canonical_order(lam):
    """Box-addition order used by construct: peel deepest removable boxes
    off `lam`, then reverse."""
    peeled = []
    while lam:
        box = _deepest_removable(lam)
        peeled.append(box)
        lam = remove_box(lam, box)
    peeled.reverse()
    return peeled


def _neighbors(alpha):
    """All labels that can appear in p_1 * P_alpha: a box added to the
    first diagram or removed from the second."""
    lam, mu = alpha
    out = [(add_box(lam, x), mu) for x in add_box_candidates(lam)]
    out.extend((lam, remove_box(mu, y)) for y in remove_box_candidates(mu))
    return out


# -- positive part -------------------------------------------------------------

_POSITIVE_CACHE = {}


def jack_positive(lam):
    """The classical monic eigenfunction P_lam of the positive part,
    free of p0, built with the stable second integral."""
    lam = _partition(lam)
    got = _POSITIVE_CACHE.get(lam)
    if got is not None:
        return got
    if not lam:
        out = LaurentSymFunc.one()
    else:
        box = _deepest_removable(lam)
        nu = remove_box(lam, box)
        out = LaurentSymFunc.gen(1) * jack_positive(nu)
        s = stable_eigenvalue(lam)
        for x in add_box_candidates(nu):
            gamma = add_box(nu, x)
            if gamma == lam:
                continue
            e = stable_eigenvalue(gamma)
            d = s - e
            if d.is_zero():
                raise SingularParameter(
                    "stable eigenvalue collision: %s vs %s" % (lam, gamma))
            out = (stable_H2_direct(out) - out * e) * d.inverse()
        v = pieri_V(box, (nu, ()))
        if v.is_zero():
            raise SingularParameter(
                "vanishing transition coefficient at box %s" % (box,))
        out = out * v.inverse()
    _POSITIVE_CACHE[lam] = out
    return out


# -- full construction ---------------------------------------------------------

_CACHE = {}


def _grow(prev, box):
    """One projector step: add `box` to the first diagram of prev.alpha."""
    lam0, mu = prev.alpha
    lam1 = add_box(lam0, box)
    beta = (lam1, mu)
    s = eigenvalue_e(beta)
    out = LaurentSymFunc.gen(1) * prev.f
    for gamma in _neighbors(prev.alpha):
        if gamma == beta:
            continue
        e = eigenvalue_e(gamma)
        d = s - e
        if d.is_zero():
            raise SingularParameter(
                "eigenvalue collision: %s vs %s" % (beta, gamma))
        out = (cms_L2_direct(out) - out * e) * d.inverse()
    v = pieri_V(box, prev.alpha)
    if v.is_zero():
        raise SingularParameter(
            "vanishing transition coefficient at box %s" % (box,))
    out = out * v.inverse()
    return JackLaurentFunction(beta, out, s, prev.provenance + (box,))


def construct(alpha):
    """The function P_{lam,mu}, memoized; parameters stay symbolic."""
    key = _normalize_alpha(alpha)
    got = _CACHE.get(key)
    if got is not None:
        return got
    lam, mu = key
    if not lam:
        jf = JackLaurentFunction(key, jack_positive(mu).star(),
                                 eigenvalue_e(key), ())
    else:
        box = _deepest_removable(lam)
        jf = _grow(construct((remove_box(lam, box), mu)), box)
    _CACHE[key] = jf
    return jf


def construct_via_order(alpha, order):
    """Build P_alpha adding the first diagram's boxes in the given order
    (every prefix must be a partition).  Bypasses the memo table; used to
    confirm the result does not depend on the order."""
    lam, mu = _normalize_alpha(alpha)
    cur = JackLaurentFunction(((), mu), jack_positive(mu).star(),
                              eigenvalue_e(((), mu)), ())
    for box in order:
        cur = _grow(cur, tuple(box))
    if cur.alpha != (lam, mu):
        raise ValueError("order %r does not build %r" % (order, lam))
    return cur


def clear_cache():
    _CACHE.clear()
    _POSITIVE_CACHE.clear()


# -- identity checks -----------------------------------------------------------

def pieri_identity_check(alpha):
    """p_1 * P_{lam,mu} = sum_x V(x) P_{lam+x,mu} + sum_y U(y) P_{lam,mu-y},
    compared exactly."""
    lam, mu = _normalize_alpha(alpha)
    lhs = LaurentSymFunc.gen(1) * construct((lam, mu)).f
    rhs = LaurentSymFunc.zero()
    for x in add_box_candidates(lam):
        v = pieri_V(x, (lam, mu))
        if not v.is_zero():
            rhs = rhs + construct((add_box(lam, x), mu)).f * v
    for y in remove_box_candidates(mu):
        u = pieri_U(y, (lam, mu))
        if not u.is_zero():
            rhs = rhs + construct((lam, remove_box(mu, y))).f * u
    return lhs == rhs


def star_symmetry_check(alpha):
    """star(P_{lam,mu}) = P_{mu,lam}, compared exactly."""
    lam, mu = _normalize_alpha(alpha)
    return construct((lam, mu)).f.star() == construct((mu, lam)).f


def theta_duality_check(alpha):
    """theta^{-1}(P_alpha) = d_alpha * P_{alpha'} with k -> 1/k, p0 -> k*p0
    substituted in the conjugate-label function; d_alpha from the
    evaluation formula."""
    lam, mu = _normalize_alpha(alpha)
    lhs = construct((lam, mu)).f.theta(inverse=True)
    dual = construct((conjugate(lam), conjugate(mu))).f.param_swap()
    return lhs == dual * duality_constant((lam, mu))


def eigen_check_all(alpha, r_max=3):
    """Assert P_alpha is an exact eigenfunction of the first r_max
    integrals and return the list of (r, eigenvalue).  The first
    eigenvalue must be |lam| - |mu| and the second must match the
    closed form."""
    jf = construct(alpha)
    lam, mu = jf.alpha
    out = []
    for r in range(1, r_max + 1):
        res = cms_L(r, jf.f)
        if res.is_zero():
            scalar = RAT_ZERO
        else:
            m, c = jf.f.sorted_terms()[0]
            scalar = res.coeff(m) / c
        if res != jf.f * scalar:
            raise NotEigenvector(
                "order-%d integral is not scalar on %s" % (r, (lam, mu)))
        out.append((r, scalar))
    if r_max >= 1 and out[0][1] != rat(size(lam) - size(mu)):
        raise NotEigenvector("first eigenvalue of %s is not |lam|-|mu|"
                             % ((lam, mu),))
    if r_max >= 2 and out[1][1] != jf.eigenvalue2:
        raise NotEigenvector("second eigenvalue of %s is off the closed form"
                             % ((lam, mu),))
    return out


# -- numeric parameter modes ---------------------------------------------------

def specialize_function(jf, k0, p00):
    """P_alpha with coefficients evaluated at a rational point (k0, p00)."""
    k0 = Fraction(k0)
    p00 = Fraction(p00)
    t = {}
    for m, c in jf.f.terms.items():
        try:
            v = c.specialize(k0, p00)
        except PoleAtSpecialization:
            raise PoleAtSpecialization(
                "coefficient of %s has a pole at k=%s, p0=%s: %s"
                % (mono_str(m), k0, p00, c))
        if v:
            t[m] = ParamRat.from_fraction(v)
    out = LaurentSymFunc.__new__(LaurentSymFunc)
    out.terms = t
    return out


def _spec_scalar(value, k0, p00, what):
    try:
        return value.specialize(k0, p00)
    except PoleAtSpecialization:
        raise SingularParameter(
            "%s has a pole at k=%s, p0=%s" % (what, k0, p00))


def _jack_positive_at(lam, k0):
    """Numeric-coupling version of jack_positive."""
    kc = ParamRat.from_fraction(k0)
    out = LaurentSymFunc.one()
    shape = ()
    for box in _canonical_order(lam):
        g = LaurentSymFunc.gen(1) * out
        target = add_box(shape, box)
        s = stable_eigenvalue(target).specialize(k0, 0)
        evs = [(add_box(shape, x),
                stable_eigenvalue(add_box(shape, x)).specialize(k0, 0))
               for x in add_box_candidates(shape)]
        for a in range(len(evs)):
            for b in range(a + 1, len(evs)):
                if evs[a][1] == evs[b][1]:
                    raise SingularParameter(
                        "stable eigenvalue collision at k=%s: %s vs %s"
                        % (k0, evs[a][0], evs[b][0]))
        for gamma, e in evs:
            if gamma == target:
                continue
            ec = ParamRat.from_fraction(e)
            dc = ParamRat.from_fraction(1 / (s - e))
            g = (stable_H2_direct(g, k=kc) - g * ec) * dc
        v = _spec_scalar(pieri_V(box, (shape, ())), k0, 0,
                        "transition coefficient at box %s" % (box,))
        if v == 0:
            raise SingularParameter(
                "vanishing transition coefficient at box %s, k=%s"
                % (box, k0))
        out = g * ParamRat.from_fraction(1 / v)
        shape = target
    return out


def rational_mode_construct(alpha, k0, p00):
    """Run the construction with both parameters fixed to rationals.
    Agrees with specialize_function(construct(alpha), k0, p00) whenever
    the latter is defined; raises SingularParameter when the chosen point
    hits an eigenvalue collision or kills a transition coefficient."""
    k0 = Fraction(k0)
    p00 = Fraction(p00)
    lam, mu = _normalize_alpha(alpha)
    kc = ParamRat.from_fraction(k0)
    pc = ParamRat.from_fraction(p00)
    f = _jack_positive_at(mu, k0).star()
    shape = ()
    for box in _canonical_order(lam):
        prev = (shape, mu)
        target = (add_box(shape, box), mu)
        evs = [(gamma, eigenvalue_e(gamma).specialize(k0, p00))
               for gamma in _neighbors(prev)]
        for a in range(len(evs)):
            for b in range(a + 1, len(evs)):
                if evs[a][1] == evs[b][1]:
                    raise SingularParameter(
                        "eigenvalue collision at k=%s, p0=%s: %s vs %s"
                        % (k0, p00, evs[a][0], evs[b][0]))
        s = eigenvalue_e(target).specialize(k0, p00)
        g = LaurentSymFunc.gen(1) * f
        for gamma, e in evs:
            if gamma == target:
                continue
            ec = ParamRat.from_fraction(e)
            dc = ParamRat.from_fraction(1 / (s - e))
            g = (cms_L2_direct(g, k=kc, p0=pc) - g * ec) * dc
        v = _spec_scalar(pieri_V(box, prev), k0, p00,
                        "transition coefficient at box %s" % (box,))
        if v == 0:
            raise SingularParameter(
                "vanishing transition coefficient at box %s, k=%s, p0=%s"
                % (box, k0, p00))
        f = g * ParamRat.from_fraction(1 / v)
        shape = target[0]
    return f
