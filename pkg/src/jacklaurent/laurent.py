"""The algebra of Laurent symmetric functions.

Elements are sparse polynomials in free commuting generators p_i,
i a nonzero integer, with coefficients in Q(k, p0).  A monomial is a
tuple of (index, exponent) pairs sorted by index; the unit monomial is
the empty tuple.  The parameter p0 plays the role of the dimension and
only ever enters through coefficients, never as a generator.
"""

from fractions import Fraction

from .rational import (ParamRat, RAT_ONE, RAT_ZERO, K, P0, parse_rat,
                       _Parser)

UNIT_MONO = ()


def mono_from_dict(d):
    """Canonical monomial from an index -> exponent mapping."""
    items = []
    for i, e in d.items():
        i = int(i)
        e = int(e)
        if i == 0:
            raise ValueError("generator index 0 does not exist")
        if e < 0:
            raise ValueError("negative exponent in monomial")
        if e:
            items.append((i, e))
    return tuple(sorted(items))


def mono_mul(m1, m2):
    d = dict(m1)
    for i, e in m2:
        d[i] = d.get(i, 0) + e
    return tuple(sorted(d.items()))


def mono_bidegree(m):
    """(sum of positive-index degrees, minus sum of negative-index degrees)."""
    pos = sum(i * e for i, e in m if i > 0)
    neg = -sum(i * e for i, e in m if i < 0)
    return (pos, neg)


def mono_str(m):
    if not m:
        return "1"
    return "*".join("p%d" % i + ("^%d" % e if e > 1 else "") for i, e in m)


def _term_order(m):
    pos, neg = mono_bidegree(m)
    return (pos + neg, pos, m)


class LaurentSymFunc:
    """Sparse element of the Laurent symmetric function algebra.

    self.terms maps monomial tuples to nonzero ParamRat coefficients.
    Instances are treated as immutable; all operations return new ones.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        t = {}
        if terms:
            for m, c in terms.items():
                if not c.is_zero():
                    t[m] = c
        self.terms = t

    @staticmethod
    def zero():
        return LaurentSymFunc()

    @staticmethod
    def one():
        return LaurentSymFunc({UNIT_MONO: RAT_ONE})

    @staticmethod
    def const(c):
        if isinstance(c, int):
            c = ParamRat.from_int(c)
        return LaurentSymFunc({UNIT_MONO: c})

    @staticmethod
    def gen(i, power=1):
        """The generator p_i (or a pure power of it)."""
        if i == 0:
            raise ValueError("generator index 0 does not exist")
        return LaurentSymFunc({((i, power),): RAT_ONE})

    @staticmethod
    def from_partition(lam, sign=1):
        """The power-sum monomial p_lam (sign=-1 gives negative indices)."""
        d = {}
        for x in lam:
            d[sign * x] = d.get(sign * x, 0) + 1
        return LaurentSymFunc({mono_from_dict(d): RAT_ONE})

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return isinstance(other, LaurentSymFunc) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        t = dict(self.terms)
        for m, c in other.terms.items():
            s = t.get(m)
            s = c if s is None else s + c
            if s.is_zero():
                t.pop(m, None)
            else:
                t[m] = s
        out = LaurentSymFunc.__new__(LaurentSymFunc)
        out.terms = t
        return out

    def __neg__(self):
        out = LaurentSymFunc.__new__(LaurentSymFunc)
        out.terms = {m: -c for m, c in self.terms.items()}
        return out

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (ParamRat, int)):
            return self.scale(other)
        t = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                c = c1 * c2
                s = t.get(m)
                s = c if s is None else s + c
                if s.is_zero():
                    t.pop(m, None)
                else:
                    t[m] = s
        out = LaurentSymFunc.__new__(LaurentSymFunc)
        out.terms = t
        return out

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c):
        if isinstance(c, int):
            c = ParamRat.from_int(c)
        if c.is_zero() or not self.terms:
            return LaurentSymFunc()
        out = LaurentSymFunc.__new__(LaurentSymFunc)
        out.terms = {m: x * c for m, x in self.terms.items()}
        return out

    def coeff(self, m):
        return self.terms.get(m, RAT_ZERO)

    # -- algebra maps --------------------------------------------------------

    def star(self):
        """The involution p_i -> p_{-i}; coefficients unchanged."""
        out = LaurentSymFunc.__new__(LaurentSymFunc)
        out.terms = {tuple(sorted((-i, e) for i, e in m)): c
                     for m, c in self.terms.items()}
        return out

    def theta(self, inverse=False):
        """The homomorphism p_a -> k*p_a (inverse: p_a -> p_a/k)."""
        t = {}
        for m, c in self.terms.items():
            e_total = sum(e for _, e in m)
            factor = K ** (-e_total if inverse else e_total)
            t[m] = c * factor
        out = LaurentSymFunc.__new__(LaurentSymFunc)
        out.terms = t
        return out

    def partial(self, a):
        """The scaled derivation a * d/dp_a."""
        if a == 0:
            raise ValueError("no generator p_0")
        t = {}
        for m, c in self.terms.items():
            d = dict(m)
            e = d.get(a)
            if not e:
                continue
            if e == 1:
                del d[a]
            else:
                d[a] = e - 1
            key = tuple(sorted(d.items()))
            add = c * (a * e)
            s = t.get(key)
            s = add if s is None else s + add
            if s.is_zero():
                t.pop(key, None)
            else:
                t[key] = s
        out = LaurentSymFunc.__new__(LaurentSymFunc)
        out.terms = t
        return out

    def evaluate_eps(self):
        """Substitute every generator by the parameter symbol p0."""
        total = RAT_ZERO
        for m, c in self.terms.items():
            e_total = sum(e for _, e in m)
            total = total + c * P0 ** e_total
        return total

    def bidegree_components(self):
        """Split into homogeneous components keyed by (m, n) bidegree."""
        comps = {}
        for m, c in self.terms.items():
            bd = mono_bidegree(m)
            comps.setdefault(bd, {})[m] = c
        return {bd: LaurentSymFunc(t) for bd, t in comps.items()}

    def is_positive_part(self):
        """True if no negative-index generator occurs."""
        return all(i > 0 for m in self.terms for i, _ in m)

    # -- coefficient maps ----------------------------------------------------

    def map_coeffs(self, fn):
        t = {}
        for m, c in self.terms.items():
            v = fn(c)
            if not v.is_zero():
                t[m] = v
        out = LaurentSymFunc.__new__(LaurentSymFunc)
        out.terms = t
        return out

    def substitute_k(self, k0):
        return self.map_coeffs(lambda c: c.substitute_k(k0))

    def substitute_p0(self, p00):
        return self.map_coeffs(lambda c: c.substitute_p0(p00))

    def param_swap(self):
        """Apply k -> 1/k, p0 -> k*p0 to every coefficient."""
        return self.map_coeffs(lambda c: c.param_swap())

    def specialize(self, k0, p00):
        """Fully numeric coefficients; raises PoleAtSpecialization on a pole."""
        t = {}
        for m, c in self.terms.items():
            v = c.specialize(k0, p00)
            if v:
                t[m] = ParamRat.from_fraction(v)
        out = LaurentSymFunc.__new__(LaurentSymFunc)
        out.terms = t
        return out

    # -- display -------------------------------------------------------------

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: _term_order(kv[0]),
                      reverse=True)

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for idx, (m, c) in enumerate(self.sorted_terms()):
            neg = c.num.terms[c.num.front_mono()] < 0
            mag = -c if neg else c
            body = _coeff_mono_str(mag, m)
            if idx == 0:
                pieces.append(("-" if neg else "") + body)
            else:
                pieces.append((" - " if neg else " + ") + body)
        return "".join(pieces)

    def __repr__(self):
        return "LaurentSymFunc(%s)" % self.__str__()

    def to_json_terms(self):
        """JSON form: list of {exponents, coeff} with string coefficients."""
        out = []
        for m, c in self.sorted_terms():
            out.append({"exponents": {str(i): e for i, e in m},
                        "coeff": str(c)})
        return out


def _coeff_mono_str(c, m):
    ms = mono_str(m)
    if not m:
        # a bare multi-term polynomial needs parens to survive a sign prefix
        if c.has_unit_denominator() and len(c.num.terms) > 1:
            return "(%s)" % c
        return str(c)
    if c.is_one():
        return ms
    if c.is_const():
        v = c.const_value()
        if v.denominator == 1:
            return "%d*%s" % (v.numerator, ms)
        return "(%d/%d)*%s" % (v.numerator, v.denominator, ms)
    return "(%s)*%s" % (c, ms)


def from_json_terms(data):
    t = {}
    for entry in data:
        m = mono_from_dict(entry["exponents"])
        c = parse_rat(entry["coeff"])
        if not c.is_zero():
            t[m] = (t.get(m, RAT_ZERO) + c)
    return LaurentSymFunc(t)


# ---------------------------------------------------------------------------
# element text parsing: e.g.  p1*p-1 - (p0)/(1 + k - k*p0)
# ---------------------------------------------------------------------------

class _ElemParser(_Parser):
    """Extends the coefficient grammar with generator factors p<i>, i != 0.

    `p0` stays the parameter symbol; `p-3` and `p3^2` are generators.
    Every additive term is a product of rational-coefficient factors and
    generator powers.
    """

    def parse_gen_factor(self):
        # called when text at pos starts with 'p' followed by an index
        self.pos += 1
        sign = 1
        if self.peek() == "-":
            self.eat("-")
            sign = -1
        idx = sign * self.parse_int()
        if idx == 0:
            self.error("generator index 0 does not exist")
        power = 1
        if self.peek() == "^":
            self.eat("^")
            power = self.parse_int()
        return LaurentSymFunc.gen(idx, power)

    def _is_generator_ahead(self):
        if self.peek() != "p":
            return False
        rest = self.text[self.pos + 1:]
        if rest.startswith("0") and not rest[1:2].isdigit():
            return False  # the parameter p0
        return rest[:1].isdigit() or rest[:1] == "-"

    def parse_elem_term(self):
        coeff = RAT_ONE
        elem = LaurentSymFunc.one()
        if self._is_generator_ahead():
            elem = elem * self.parse_gen_factor()
        else:
            coeff = coeff * self.parse_factor()
        while self.peek() in ("*", "/"):
            op = self.peek()
            self.pos += 1
            if self._is_generator_ahead():
                if op == "/":
                    self.error("cannot divide by a generator")
                elem = elem * self.parse_gen_factor()
            else:
                f = self.parse_factor()
                coeff = coeff * f if op == "*" else coeff / f
        return elem.scale(coeff)

    def parse_element(self):
        negate = False
        if self.peek() == "-":
            self.eat("-")
            negate = True
        elif self.peek() == "+":
            self.eat("+")
        out = self.parse_elem_term()
        if negate:
            out = -out
        while self.peek() in ("+", "-"):
            op = self.peek()
            self.pos += 1
            t = self.parse_elem_term()
            out = out - t if op == "-" else out + t
        self.skip()
        if self.pos != len(self.text):
            self.error("trailing input")
        return out


def parse_element(text):
    """Parse the textual form of a LaurentSymFunc."""
    return _ElemParser(text).parse_element()
