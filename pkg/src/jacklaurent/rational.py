"""Exact arithmetic in the field Q(k, p0) of rational functions in two parameters.

Everything downstream (Laurent symmetric functions, operators, closed
formulas) has coefficients in this field.  A ParamPoly is a sparse
polynomial in the two symbols k and p0 over exact rationals; a ParamRat
is a quotient of two ParamPolys kept in a canonical reduced form, so
that equality of rational functions is plain structural equality.

No floating point is used anywhere, and no external computer-algebra
system: the bivariate gcd needed for reduction is done by
content/primitive-part recursion on the k variable with a subresultant
polynomial remainder sequence.
"""

from fractions import Fraction
from math import gcd as int_gcd


class DivisionByZero(ZeroDivisionError):
    pass


class PoleAtSpecialization(ArithmeticError):
    """Raised when a denominator vanishes at a requested (k, p0) point."""


class IdenticallySingular(ArithmeticError):
    """Raised when a denominator vanishes identically on a requested slice."""


class SingularParameter(ArithmeticError):
    """Raised when a chosen numeric (k, p0) lies on the singular locus of a
    construction (a spectral gap or a transition coefficient vanishes)."""


class NotEigenvector(ArithmeticError):
    """An operator expected to act as a scalar on a function did not."""


# ---------------------------------------------------------------------------
# univariate helpers: polynomials in p0 over Fraction, as tuples (low degree
# first, no trailing zeros; the zero polynomial is the empty tuple)
# ---------------------------------------------------------------------------

def _u_trim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _u_add(a, b):
    n = max(len(a), len(b))
    return _u_trim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)
                    for i in range(n)])


def _u_neg(a):
    return tuple(-x for x in a)


def _u_mul(a, b):
    if not a or not b:
        return ()
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return _u_trim(out)


def _u_scale(a, s):
    if s == 0:
        return ()
    return tuple(x * s for x in a)


def _u_divmod(a, b):
    """Division with remainder over the rationals; b must be nonzero."""
    if not b:
        raise DivisionByZero("univariate division by zero")
    a = list(a)
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    inv = 1 / Fraction(b[-1])
    while len(a) >= len(b) and a:
        if a[-1] == 0:
            a.pop()
            continue
        c = a[-1] * inv
        d = len(a) - len(b)
        q[d] = c
        for i in range(len(b)):
            a[d + i] -= c * b[i]
        a.pop()
    return _u_trim(q), _u_trim(a)


def _u_divexact(a, b):
    q, r = _u_divmod(a, b)
    if r:
        raise ArithmeticError("inexact univariate division")
    return q


def _u_content_primitive(a):
    """Split a into (rational content > 0, integer-primitive part).

    The primitive part has integer coefficients with gcd 1 and the same
    leading-coefficient sign as a.  Content of the zero polynomial is 0.
    """
    if not a:
        return Fraction(0), ()
    num_gcd = 0
    den_lcm = 1
    for x in a:
        num_gcd = int_gcd(num_gcd, x.numerator)
        den_lcm = den_lcm * x.denominator // int_gcd(den_lcm, x.denominator)
    content = Fraction(num_gcd, den_lcm)
    prim = tuple(x / content for x in a)
    return content, prim


def _u_gcd(a, b):
    """gcd over Q[p0], normalized integer-primitive with positive leading coeff."""
    while b:
        _, r = _u_divmod(a, b)
        a, b = b, r
    if not a:
        return ()
    _, prim = _u_content_primitive(a)
    if prim[-1] < 0:
        prim = _u_neg(prim)
    return prim


# ---------------------------------------------------------------------------
# bivariate helpers: recursive view, polynomials in k over Q[p0]
# list indexed by deg_k of univariate tuples; no trailing zero entries
# ---------------------------------------------------------------------------

def _r_trim(c):
    while c and not c[-1]:
        c.pop()
    return c


def _dict_to_rec(terms):
    if not terms:
        return []
    dk_max = max(dk for dk, _ in terms)
    rows = [{} for _ in range(dk_max + 1)]
    for (dk, dp), c in terms.items():
        rows[dk][dp] = c
    out = []
    for row in rows:
        if row:
            n = max(row) + 1
            out.append(_u_trim([row.get(i, Fraction(0)) for i in range(n)]))
        else:
            out.append(())
    return _r_trim(out)


def _rec_to_dict(rec):
    terms = {}
    for dk, u in enumerate(rec):
        for dp, c in enumerate(u):
            if c != 0:
                terms[(dk, dp)] = c
    return terms


def _r_content_primitive(rec):
    """Content (univariate gcd in p0 of all k-coefficients) and primitive part."""
    cont = ()
    for u in rec:
        if u:
            cont = _u_gcd(cont, u) if cont else _u_gcd(u, ())
    if not cont:
        return (), []
    prim = [(_u_divexact(u, cont) if u else ()) for u in rec]
    return cont, _r_trim(prim)


def _r_scale_div(rec, u):
    """Divide every k-coefficient exactly by the univariate u."""
    return _r_trim([(_u_divexact(c, u) if c else ()) for c in rec])


def _r_mul_u(rec, u):
    return _r_trim([_u_mul(c, u) for c in rec])


def _r_sub(a, b):
    n = max(len(a), len(b))
    out = []
    for i in range(n):
        x = a[i] if i < len(a) else ()
        y = b[i] if i < len(b) else ()
        out.append(_u_add(x, _u_neg(y)))
    return _r_trim(out)


def _r_pseudo_rem(a, b):
    """Pseudo-remainder lb^(da-db+1) * a mod b in the k variable,
    coefficients in Q[p0].  The full power of lb is essential: the
    subresultant divisors assume it, so any reduction step skipped by a
    leading-term cancellation must still contribute its lb factor."""
    da, db = len(a) - 1, len(b) - 1
    lb = b[-1]
    e = da - db + 1
    r = [u for u in a]
    while r and len(r) - 1 >= db:
        dr = len(r) - 1
        lead = r[-1]
        # r := lb*r - lead*k^(dr-db)*b
        r = [_u_mul(u, lb) for u in r]
        shift = dr - db
        for i, u in enumerate(b):
            r[shift + i] = _u_add(r[shift + i], _u_neg(_u_mul(lead, u)))
        r = _r_trim(r)
        e -= 1
        if len(r) - 1 == dr:  # cancellation failed -> bug
            raise ArithmeticError("pseudo-remainder did not reduce degree")
    if e > 0 and r:
        le = _u_pow(lb, e)
        r = [_u_mul(u, le) for u in r]
    return r


def _u_pow(u, n):
    out = (Fraction(1),)
    for _ in range(n):
        out = _u_mul(out, u)
    return out


def _r_gcd(a, b):
    """gcd in Q[p0][k] via subresultant PRS on primitive parts."""
    if not a:
        return b
    if not b:
        return a
    ca, pa = _r_content_primitive(a)
    cb, pb = _r_content_primitive(b)
    cg = _u_gcd(ca, cb)
    if len(pa) < len(pb):
        pa, pb = pb, pa
    # subresultant remainder sequence
    g = (Fraction(1),)
    h = (Fraction(1),)
    while True:
        delta = len(pa) - len(pb)
        r = _r_pseudo_rem(pa, pb)
        if not r:
            break
        divisor = _u_mul(g, _u_pow(h, delta))
        pa, pb = pb, _r_scale_div(r, divisor)
        g = pa[-1]
        if delta >= 1:
            h = _u_divexact(_u_pow(g, delta), _u_pow(h, delta - 1))
    _, prim = _r_content_primitive(pb)
    return _r_trim(_r_mul_u(prim, cg))


def _r_divexact(a, b):
    """Exact division in Q[p0][k]; raises if not exact."""
    if not b:
        raise DivisionByZero("bivariate division by zero")
    if not a:
        return []
    q = [() for _ in range(len(a) - len(b) + 1)]
    r = [u for u in a]
    while r and len(r) >= len(b):
        c = _u_divexact(r[-1], b[-1])
        d = len(r) - len(b)
        q[d] = c
        for i, u in enumerate(b):
            r[d + i] = _u_add(r[d + i], _u_neg(_u_mul(c, u)))
        r = _r_trim(r)
    if r:
        raise ArithmeticError("inexact bivariate division")
    return _r_trim(q)


# ---------------------------------------------------------------------------
# ParamPoly
# ---------------------------------------------------------------------------

def _grlex_key(mono):
    dk, dp = mono
    return (dk + dp, dk)


class ParamPoly:
    """Sparse polynomial in k and p0 with Fraction coefficients.

    self.terms maps (deg_k, deg_p0) -> Fraction; zero coefficients are
    never stored, so the zero polynomial is the empty dict.
    """

    __slots__ = ("terms", "_hash")

    def __init__(self, terms=None):
        t = {}
        if terms:
            for mono, c in terms.items():
                if not isinstance(c, Fraction):
                    c = Fraction(c)
                if c != 0:
                    t[mono] = c
        self.terms = t
        self._hash = None

    @staticmethod
    def const(c):
        c = Fraction(c)
        return ParamPoly({(0, 0): c} if c else {})

    @staticmethod
    def var_k():
        return ParamPoly({(1, 0): Fraction(1)})

    @staticmethod
    def var_p0():
        return ParamPoly({(0, 1): Fraction(1)})

    def is_zero(self):
        return not self.terms

    def is_const(self):
        return not self.terms or (len(self.terms) == 1 and (0, 0) in self.terms)

    def const_value(self):
        return self.terms.get((0, 0), Fraction(0))

    def __eq__(self, other):
        return isinstance(other, ParamPoly) and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __add__(self, other):
        t = dict(self.terms)
        for mono, c in other.terms.items():
            s = t.get(mono, 0) + c
            if s:
                t[mono] = s
            else:
                t.pop(mono, None)
        out = ParamPoly.__new__(ParamPoly)
        out.terms = t
        out._hash = None
        return out

    def __neg__(self):
        out = ParamPoly.__new__(ParamPoly)
        out.terms = {m: -c for m, c in self.terms.items()}
        out._hash = None
        return out

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not self.terms or not other.terms:
            return _P_ZERO
        t = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                mono = (a1 + a2, b1 + b2)
                s = t.get(mono, 0) + c1 * c2
                if s:
                    t[mono] = s
                else:
                    t.pop(mono, None)
        out = ParamPoly.__new__(ParamPoly)
        out.terms = t
        out._hash = None
        return out

    def scale(self, c):
        c = Fraction(c)
        if c == 0 or not self.terms:
            return _P_ZERO
        out = ParamPoly.__new__(ParamPoly)
        out.terms = {m: x * c for m, x in self.terms.items()}
        out._hash = None
        return out

    def __pow__(self, n):
        out = _P_ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def leading_mono(self):
        return max(self.terms, key=_grlex_key)

    def front_mono(self):
        """The graded-lex smallest monomial — the one printed first."""
        return min(self.terms, key=_grlex_key)

    def evaluate(self, k0, p00):
        total = Fraction(0)
        for (dk, dp), c in self.terms.items():
            total += c * (Fraction(k0) ** dk) * (Fraction(p00) ** dp)
        return total

    def subs_k(self, k0):
        """Substitute a rational for k; returns a ParamPoly in p0 alone."""
        t = {}
        k0 = Fraction(k0)
        for (dk, dp), c in self.terms.items():
            s = t.get((0, dp), 0) + c * k0 ** dk
            if s:
                t[(0, dp)] = s
            else:
                t.pop((0, dp), None)
        return ParamPoly(t)

    def subs_p0(self, p00):
        t = {}
        p00 = Fraction(p00)
        for (dk, dp), c in self.terms.items():
            s = t.get((dk, 0), 0) + c * p00 ** dp
            if s:
                t[(dk, 0)] = s
            else:
                t.pop((dk, 0), None)
        return ParamPoly(t)

    def degree_p0(self):
        return max((dp for _, dp in self.terms), default=-1)

    def coeff_of_p0_power(self, d):
        """The coefficient of p0^d, as a ParamPoly in k alone."""
        return ParamPoly({(dk, 0): c for (dk, dp), c in self.terms.items()
                          if dp == d})

    def content_primitive(self):
        """Rational content (> 0) and integer-primitive part."""
        if not self.terms:
            return Fraction(0), _P_ZERO
        num_gcd = 0
        den_lcm = 1
        for c in self.terms.values():
            num_gcd = int_gcd(num_gcd, c.numerator)
            den_lcm = den_lcm * c.denominator // int_gcd(den_lcm, c.denominator)
        content = Fraction(num_gcd, den_lcm)
        prim = ParamPoly.__new__(ParamPoly)
        prim.terms = {m: c / content for m, c in self.terms.items()}
        prim._hash = None
        return content, prim

    def __str__(self):
        return _format_poly(self)

    def __repr__(self):
        return "ParamPoly(%s)" % _format_poly(self)


_P_ZERO = ParamPoly()
_P_ONE = ParamPoly({(0, 0): Fraction(1)})


def poly_gcd(a, b):
    """gcd of two ParamPolys, integer-primitive, positive graded-lex leading coeff."""
    if a.is_zero():
        g_rec = _dict_to_rec(b.terms)
    elif b.is_zero():
        g_rec = _dict_to_rec(a.terms)
    else:
        g_rec = _r_gcd(_dict_to_rec(a.terms), _dict_to_rec(b.terms))
    g = ParamPoly(_rec_to_dict(g_rec))
    if g.is_zero():
        return g
    _, g = g.content_primitive()
    if g.terms[g.leading_mono()] < 0:
        g = -g
    return g


def poly_divexact(a, b):
    """Exact division of ParamPolys; raises ArithmeticError if not exact."""
    return ParamPoly(_rec_to_dict(_r_divexact(_dict_to_rec(a.terms),
                                              _dict_to_rec(b.terms))))


# ---------------------------------------------------------------------------
# ParamRat
# ---------------------------------------------------------------------------

class ParamRat:
    """Element of Q(k, p0) in canonical reduced form.

    Invariants: num and den are integer-coefficient ParamPolys with no
    common polynomial factor; the integer contents of num and den are
    coprime; den's leading coefficient under graded-lex (total degree,
    then deg_k) is positive; zero is 0/1.  Equality and hashing are
    structural.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num, den=None, _canonical=False):
        if den is None:
            den = _P_ONE
        if _canonical:
            self.num, self.den = num, den
            self._hash = None
            return
        if den.is_zero():
            raise DivisionByZero("zero denominator in ParamRat")
        if num.is_zero():
            self.num, self.den = _P_ZERO, _P_ONE
            self._hash = None
            return
        if not den.is_const():
            g = poly_gcd(num, den)
            if not (g.is_const() and g.const_value() == 1):
                num = poly_divexact(num, g)
                den = poly_divexact(den, g)
        cn, pn = num.content_primitive()
        cd, pd = den.content_primitive()
        scalar = cn / cd  # > 0 iff contents same sign; contents are > 0
        a, b = scalar.numerator, scalar.denominator
        num = pn.scale(a)
        den = pd.scale(b)
        if den.terms[den.front_mono()] < 0:
            num, den = -num, -den
        self.num, self.den = num, den
        self._hash = None

    # -- constructors -------------------------------------------------------

    @staticmethod
    def from_int(n):
        return ParamRat(ParamPoly.const(n))

    @staticmethod
    def from_fraction(q):
        q = Fraction(q)
        return ParamRat(ParamPoly.const(q.numerator),
                        ParamPoly.const(q.denominator))

    @staticmethod
    def k():
        return ParamRat(ParamPoly.var_k())

    @staticmethod
    def p0():
        return ParamRat(ParamPoly.var_p0())

    # -- predicates ----------------------------------------------------------

    def is_zero(self):
        return self.num.is_zero()

    def is_one(self):
        return (self.num.is_const() and self.den.is_const()
                and self.num.const_value() == self.den.const_value())

    def is_const(self):
        return self.num.is_const() and self.den.is_const()

    def const_value(self):
        if not self.is_const():
            raise ValueError("not a constant: %s" % self)
        if self.num.is_zero():
            return Fraction(0)
        return self.num.const_value() / self.den.const_value()

    def __eq__(self, other):
        if isinstance(other, int):
            other = ParamRat.from_int(other)
        return (isinstance(other, ParamRat)
                and self.num == other.num and self.den == other.den)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __bool__(self):
        return not self.num.is_zero()

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, int):
            other = ParamRat.from_int(other)
        if self.num.is_zero():
            return other
        if other.num.is_zero():
            return self
        if self.den == other.den:
            if self.den.is_const():
                num = self.num + other.num
                out = ParamRat.__new__(ParamRat)
                if num.is_zero():
                    out.num, out.den = _P_ZERO, _P_ONE
                else:
                    out.num, out.den = num, self.den
                out._hash = None
                return _renorm_content(out)
            return ParamRat(self.num + other.num, self.den)
        g = poly_gcd(self.den, other.den)
        if g.is_const():
            num = self.num * other.den + other.num * self.den
            den = self.den * other.den
            if num.is_zero():
                return RAT_ZERO
            out = ParamRat.__new__(ParamRat)
            out.num, out.den = num, den
            out._hash = None
            return _renorm_content(out)
        return ParamRat(self.num * other.den + other.num * self.den,
                        self.den * other.den)

    def __radd__(self, other):
        return self.__add__(other)

    def __neg__(self):
        out = ParamRat.__new__(ParamRat)
        out.num, out.den = -self.num, self.den
        out._hash = None
        return out

    def __sub__(self, other):
        if isinstance(other, int):
            other = ParamRat.from_int(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            other = ParamRat.from_int(other)
        if self.num.is_zero() or other.num.is_zero():
            return RAT_ZERO
        if self.den.is_const() and other.den.is_const():
            out = ParamRat.__new__(ParamRat)
            out.num = self.num * other.num
            out.den = self.den * other.den
            out._hash = None
            return _renorm_content(out)
        # cross-reduce so only scalar renormalization remains
        n1, d1, n2, d2 = self.num, self.den, other.num, other.den
        g1 = poly_gcd(n1, d2)
        if not g1.is_const():
            n1 = poly_divexact(n1, g1)
            d2 = poly_divexact(d2, g1)
        g2 = poly_gcd(n2, d1)
        if not g2.is_const():
            n2 = poly_divexact(n2, g2)
            d1 = poly_divexact(d1, g2)
        out = ParamRat.__new__(ParamRat)
        out.num = n1 * n2
        out.den = d1 * d2
        out._hash = None
        return _renorm_content(out)

    def __rmul__(self, other):
        return self.__mul__(other)

    def inverse(self):
        if self.num.is_zero():
            raise DivisionByZero("inverse of zero")
        num, den = self.den, self.num
        if den.terms[den.front_mono()] < 0:
            num, den = -num, -den
        out = ParamRat.__new__(ParamRat)
        out.num, out.den = num, den
        out._hash = None
        return out

    def __truediv__(self, other):
        if isinstance(other, int):
            other = ParamRat.from_int(other)
        if other.num.is_zero():
            raise DivisionByZero("division by zero ParamRat")
        return self * other.inverse()

    def __rtruediv__(self, other):
        if isinstance(other, int):
            other = ParamRat.from_int(other)
        return other * self.inverse()

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        out = RAT_ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- specialization ------------------------------------------------------

    def specialize(self, k0, p00):
        """Evaluate at exact rationals (k0, p00); result is a Fraction."""
        d = self.den.evaluate(k0, p00)
        if d == 0:
            raise PoleAtSpecialization(
                "denominator %s vanishes at k=%s, p0=%s" % (self.den, k0, p00))
        return self.num.evaluate(k0, p00) / d

    def substitute_k(self, k0):
        """Substitute k = k0; result is a ParamRat in p0 alone."""
        den = self.den.subs_k(k0)
        if den.is_zero():
            raise IdenticallySingular(
                "denominator %s vanishes identically at k=%s" % (self.den, k0))
        return ParamRat(self.num.subs_k(k0), den)

    def substitute_p0(self, p00):
        """Substitute p0 = p00; result is a ParamRat in k alone."""
        den = self.den.subs_p0(p00)
        if den.is_zero():
            raise IdenticallySingular(
                "denominator %s vanishes identically at p0=%s" % (self.den, p00))
        return ParamRat(self.num.subs_p0(p00), den)

    def param_swap(self):
        """The substitution k -> 1/k, p0 -> k*p0 (an involution of Q(k,p0)).

        A monomial k^a p0^b goes to k^(b-a) p0^b; the common power of k
        is cleared from numerator and denominator afterwards.
        """
        def swapped(poly):
            return {(dp - dk, dp): c for (dk, dp), c in poly.terms.items()}
        tn, td = swapped(self.num), swapped(self.den)
        if not tn:
            return RAT_ZERO
        shift = -min(min((dk for dk, _ in tn), default=0),
                     min((dk for dk, _ in td), default=0))
        num = ParamPoly({(dk + shift, dp): c for (dk, dp), c in tn.items()})
        den = ParamPoly({(dk + shift, dp): c for (dk, dp), c in td.items()})
        return ParamRat(num, den)

    def is_p0_free(self):
        return (all(dp == 0 for _, dp in self.num.terms)
                and all(dp == 0 for _, dp in self.den.terms))

    def is_polynomial(self):
        """True if the canonical denominator is a constant."""
        return self.den.is_const()

    def has_unit_denominator(self):
        """True if the canonical denominator is exactly 1."""
        return self.den.is_const() and self.den.const_value() == 1

    # -- display -------------------------------------------------------------

    def __str__(self):
        if self.den.is_const() and self.den.const_value() == 1:
            return _format_poly(self.num)
        return "(%s)/(%s)" % (_format_poly(self.num), _format_poly(self.den))

    def __repr__(self):
        return "ParamRat(%s)" % self.__str__()


def _renorm_content(r):
    """Scalar-only canonicalization: contents coprime, den leading coeff > 0.

    Used on results whose num/den are already polynomially coprime.
    """
    cn, pn = r.num.content_primitive()
    cd, pd = r.den.content_primitive()
    scalar = cn / cd
    num = pn.scale(scalar.numerator)
    den = pd.scale(scalar.denominator)
    if den.terms[den.front_mono()] < 0:
        num, den = -num, -den
    out = ParamRat.__new__(ParamRat)
    out.num, out.den = num, den
    out._hash = None
    return out


RAT_ZERO = ParamRat(_P_ZERO, _P_ONE, _canonical=True)
RAT_ONE = ParamRat(_P_ONE, _P_ONE, _canonical=True)
K = ParamRat.k()
P0 = ParamRat.p0()


def rat(n, d=1):
    """Small convenience: the constant n/d as a ParamRat."""
    return ParamRat.from_fraction(Fraction(n, d))


# ---------------------------------------------------------------------------
# text form: printing and parsing, round-trips bit-exactly
# ---------------------------------------------------------------------------

def _format_mono(dk, dp):
    parts = []
    if dk == 1:
        parts.append("k")
    elif dk > 1:
        parts.append("k^%d" % dk)
    if dp == 1:
        parts.append("p0")
    elif dp > 1:
        parts.append("p0^%d" % dp)
    return "*".join(parts)


def _format_poly(poly):
    """Canonical string: terms ascending in graded-lex (total degree, deg_k).

    Unit coefficients are hidden except on a leading negative term,
    which prints its coefficient explicitly (e.g. `-1*p0`).
    """
    if not poly.terms:
        return "0"
    monos = sorted(poly.terms, key=_grlex_key)
    pieces = []
    for idx, mono in enumerate(monos):
        c = poly.terms[mono]
        mstr = _format_mono(*mono)
        mag = abs(c)
        if not mstr:
            body = str(mag)
        elif mag == 1 and not (idx == 0 and c < 0):
            body = mstr
        else:
            body = "%s*%s" % (mag if idx > 0 else c, mstr)
        if idx == 0:
            if c < 0 and mstr and mag == 1:
                pieces.append(body)      # already carries the -1* prefix
            elif c < 0 and not mstr:
                pieces.append("-" + str(mag))
            elif c < 0:
                pieces.append(body)
            else:
                pieces.append(body)
        else:
            pieces.append((" - " if c < 0 else " + ") + body)
    return "".join(pieces)


class _Parser:
    """Recursive-descent parser for rational expressions in k and p0.

    Grammar: expr = ['+'|'-'] term (('+'|'-') term)*;
    term = factor (('*'|'/') factor)*; factor = atom ('^' int)?;
    atom = int | 'k' | 'p0' | '(' expr ')'.  Everything is built over
    ParamRat, so `/` works at any depth.
    """

    def __init__(self, text):
        self.text = text
        self.pos = 0

    def error(self, msg):
        raise ValueError("parse error at %d in %r: %s" % (self.pos, self.text, msg))

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def eat(self, ch):
        if self.peek() != ch:
            self.error("expected %r" % ch)
        self.pos += 1

    def parse_int(self):
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.error("expected integer")
        return int(self.text[start:self.pos])

    def parse_atom(self):
        ch = self.peek()
        if ch == "(":
            self.eat("(")
            e = self.parse_expr()
            self.eat(")")
            return e
        if ch.isdigit():
            return ParamRat.from_int(self.parse_int())
        if self.text.startswith("p0", self.pos):
            self.pos += 2
            return P0
        if ch == "k":
            self.pos += 1
            return K
        self.error("expected atom")

    def parse_factor(self):
        a = self.parse_atom()
        if self.peek() == "^":
            self.eat("^")
            return a ** self.parse_int()
        return a

    def parse_term(self):
        out = self.parse_factor()
        while self.peek() in ("*", "/"):
            op = self.peek()
            self.pos += 1
            f = self.parse_factor()
            out = out * f if op == "*" else out / f
        return out

    def parse_expr(self):
        negate = False
        if self.peek() == "-":
            self.eat("-")
            negate = True
        elif self.peek() == "+":
            self.eat("+")
        out = self.parse_term()
        if negate:
            out = -out
        while self.peek() in ("+", "-"):
            op = self.peek()
            self.pos += 1
            t = self.parse_term()
            out = out - t if op == "-" else out + t
        return out


def parse_rat(text):
    """Parse the textual form of a ParamRat, e.g. `(-1*p0)/(1 + k - k*p0)`."""
    p = _Parser(text)
    out = p.parse_expr()
    p.skip()
    if p.pos != len(text):
        p.error("trailing input")
    return out
