"""Exact scalar arithmetic: rationals, Gaussian rationals, and the surd ring.

Every symbolic computation in this package happens over ``CoeffElem``, a
commutative ring obtained from the Gaussian rationals by adjoining three
real square roots:

    c0  with  c0**2 = 32/257
    y0  with  y0**2 = 12775/2304
    s2  with  s2**2 = 2

Elements are kept in reduced normal form: a sparse combination of the eight
monomials {1, c0, y0, s2, c0*y0, c0*s2, y0*s2, c0*y0*s2} with Gaussian
rational coefficients.  Monomials are encoded as bitmasks (bit 0 = c0,
bit 1 = y0, bit 2 = s2), so multiplication is XOR of masks with a rational
factor for every squared surd.  Reduction is therefore confluent by
construction.

No floating point lives here; ``to_complex`` is the only escape hatch and
is used solely by the numeric spectrum lane.
"""

from __future__ import annotations

import math
from typing import Union

from gmpy2 import mpq

RationalLike = Union[int, str, mpq]

# squared values of the adjoined surds, keyed by monomial bit
_SURD_SQ = {
    1: mpq(32, 257),     # c0
    2: mpq(12775, 2304), # y0
    4: mpq(2),           # s2
}

_MONO_NAME = {0: "", 1: "c0", 2: "y0", 3: "c0·y0",
              4: "s2", 5: "c0·s2", 6: "y0·s2", 7: "c0·y0·s2"}

_SURD_FLOAT = {1: math.sqrt(32 / 257), 2: math.sqrt(12775 / 2304), 4: math.sqrt(2)}


def as_mpq(v: RationalLike) -> mpq:
    """Coerce ints, 'p/q' strings and mpq values to mpq."""
    if isinstance(v, mpq):
        return v
    return mpq(v)


def fmt_q(q: mpq) -> str:
    """Render a rational as 'p' or 'p/q'."""
    if q.denominator == 1:
        return str(q.numerator)
    return "%s/%s" % (q.numerator, q.denominator)


class GaussQ:
    """A Gaussian rational re + im*i with exact mpq parts."""

    __slots__ = ("re", "im")

    def __init__(self, re: RationalLike = 0, im: RationalLike = 0):
        self.re = as_mpq(re)
        self.im = as_mpq(im)

    # -- ring operations ---------------------------------------------------
    # results of arithmetic are built through _gq to skip re-coercion

    def __add__(self, other: "GaussQ") -> "GaussQ":
        return _gq(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "GaussQ") -> "GaussQ":
        return _gq(self.re - other.re, self.im - other.im)

    def __neg__(self) -> "GaussQ":
        return _gq(-self.re, -self.im)

    def __mul__(self, other) -> "GaussQ":
        if isinstance(other, GaussQ):
            return _gq(self.re * other.re - self.im * other.im,
                       self.re * other.im + self.im * other.re)
        return _gq(self.re * other, self.im * other)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "GaussQ":
        if not isinstance(other, GaussQ):
            other = GaussQ(other)
        n = other.re * other.re + other.im * other.im
        if n == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return _gq((self.re * other.re + self.im * other.im) / n,
                   (self.im * other.re - self.re * other.im) / n)

    def conj(self) -> "GaussQ":
        return _gq(self.re, -self.im)

    # -- queries -----------------------------------------------------------

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def __eq__(self, other) -> bool:
        if not isinstance(other, GaussQ):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def to_complex(self) -> complex:
        return complex(self.re, self.im)

    # -- rendering ----------------------------------------------------------

    def __str__(self) -> str:
        if self.im == 0:
            return fmt_q(self.re)
        if self.re == 0:
            if self.im == 1:
                return "i"
            if self.im == -1:
                return "-i"
            return fmt_q(self.im) + "i"
        im = self.im
        sign = "+" if im > 0 else "-"
        ims = "i" if abs(im) == 1 else fmt_q(abs(im)) + "i"
        return "(%s%s%s)" % (fmt_q(self.re), sign, ims)

    def __repr__(self) -> str:
        return "GaussQ(%s, %s)" % (self.re, self.im)


def _gq(re: mpq, im: mpq) -> GaussQ:
    g = GaussQ.__new__(GaussQ)
    g.re = re
    g.im = im
    return g


GQ_ZERO = GaussQ(0)
GQ_ONE = GaussQ(1)
GQ_I = GaussQ(0, 1)


def gq_arith(x: GaussQ, y: GaussQ, op: str) -> GaussQ:
    """Dispatch Gaussian-rational arithmetic by operation name.

    ``op`` is one of add, sub, mul, div, conj (conj ignores ``y``).
    """
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "div":
        return x / y
    if op == "conj":
        return x.conj()
    raise ValueError("unknown operation %r" % (op,))


class CoeffElem:
    """Element of the surd ring in reduced normal form.

    Stored sparsely as {monomial mask: GaussQ}; zero coefficients are never
    kept.  All constructors normalise, so two equal elements always compare
    equal structurally.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        if terms:
            self.terms = {m: g for m, g in terms.items() if not g.is_zero()}
        else:
            self.terms = {}

    # -- constructors --------------------------------------------------------

    @classmethod
    def from_rational(cls, v: RationalLike) -> "CoeffElem":
        return cls({0: GaussQ(as_mpq(v))})

    @classmethod
    def from_gauss(cls, g: GaussQ) -> "CoeffElem":
        return cls({0: g})

    @classmethod
    def surd(cls, mask: int) -> "CoeffElem":
        return cls({mask: GQ_ONE})

    # -- ring operations ------------------------------------------------------

    def __add__(self, other: "CoeffElem") -> "CoeffElem":
        if not isinstance(other, CoeffElem):
            return NotImplemented
        if not self.terms:
            return other
        if not other.terms:
            return self
        out = dict(self.terms)
        for m, g in other.terms.items():
            s = out.get(m)
            if s is None:
                out[m] = g
            else:
                s = s + g
                if s.re or s.im:
                    out[m] = s
                else:
                    del out[m]
        return _ce(out)

    def __sub__(self, other: "CoeffElem") -> "CoeffElem":
        return self + (-other)

    def __neg__(self) -> "CoeffElem":
        return _ce({m: -g for m, g in self.terms.items()})

    def __mul__(self, other) -> "CoeffElem":
        if isinstance(other, CoeffElem):
            a, b = self.terms, other.terms
            if not a or not b:
                return ZERO
            if len(a) == 1 and len(b) == 1:
                (m1, g1), = a.items()
                (m2, g2), = b.items()
                g = g1 * g2
                common = m1 & m2
                if common:
                    for bit in (1, 2, 4):
                        if common & bit:
                            g = g * _SURD_SQ[bit]
                if g.re or g.im:
                    return _ce({m1 ^ m2: g})
                return ZERO
            out: dict = {}
            for m1, g1 in a.items():
                for m2, g2 in b.items():
                    common = m1 & m2
                    g = g1 * g2
                    if common:
                        for bit in (1, 2, 4):
                            if common & bit:
                                g = g * _SURD_SQ[bit]
                    m = m1 ^ m2
                    s = out.get(m)
                    out[m] = g if s is None else s + g
            return CoeffElem(out)
        if isinstance(other, GaussQ):
            if other.is_zero():
                return ZERO
            return _ce({m: g * other for m, g in self.terms.items()})
        # int / mpq scalar
        q = as_mpq(other)
        if q == 0:
            return ZERO
        return _ce({m: g * q for m, g in self.terms.items()})

    __rmul__ = __mul__

    def __truediv__(self, other) -> "CoeffElem":
        """Division by a rational or Gaussian-rational scalar only."""
        if isinstance(other, GaussQ):
            n = other.re * other.re + other.im * other.im
            if n == 0:
                raise ZeroDivisionError("division by zero scalar")
            return self * (other.conj() * (1 / n))
        q = as_mpq(other)
        if q == 0:
            raise ZeroDivisionError("division by zero scalar")
        return self * (1 / q)

    def times_i(self) -> "CoeffElem":
        return _ce({m: _gq(-g.im, g.re) for m, g in self.terms.items()})

    def conj(self) -> "CoeffElem":
        """Complex conjugation; the surds are real and stay fixed."""
        return _ce({m: _gq(g.re, -g.im) for m, g in self.terms.items()})

    # -- queries ---------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        if not isinstance(other, CoeffElem):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def as_gauss(self):
        """Return the GaussQ value if the element is surd-free, else None."""
        if not self.terms:
            return GQ_ZERO
        if set(self.terms) == {0}:
            return self.terms[0]
        return None

    def as_rational(self):
        """Return the mpq value if the element is a plain rational, else None."""
        g = self.as_gauss()
        if g is not None and g.im == 0:
            return g.re
        return None

    def to_complex(self) -> complex:
        z = 0j
        for m, g in self.terms.items():
            w = 1.0
            for bit in (1, 2, 4):
                if m & bit:
                    w *= _SURD_FLOAT[bit]
            z += g.to_complex() * w
        return z

    # -- rendering ---------------------------------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms):
            g = self.terms[m]
            name = _MONO_NAME[m]
            if not name:
                parts.append(str(g))
            elif g == GQ_ONE:
                parts.append(name)
            elif g == -GQ_ONE:
                parts.append("-" + name)
            else:
                parts.append("%s·%s" % (g, name))
        out = parts[0]
        for p in parts[1:]:
            if p.startswith("-"):
                out += " - " + p[1:]
            else:
                out += " + " + p
        return out

    def __repr__(self) -> str:
        return "CoeffElem<%s>" % self

def _ce(terms: dict) -> CoeffElem:
    # raw constructor: caller guarantees no zero-valued entries
    c = CoeffElem.__new__(CoeffElem)
    c.terms = terms
    return c


ZERO = CoeffElem()
ONE = CoeffElem.from_rational(1)
I_UNIT = CoeffElem.from_gauss(GQ_I)
C0 = CoeffElem.surd(1)
Y0 = CoeffElem.surd(2)
S2 = CoeffElem.surd(4)

#: exact squares of the generators, for reuse in checks
C0_SQ = _SURD_SQ[1]
Y0_SQ = _SURD_SQ[2]
S2_SQ = _SURD_SQ[4]

_SYMBOLS = {"c0": C0, "y0": Y0, "s2": S2}


def coeff_arith(x: CoeffElem, y: CoeffElem, op: str) -> CoeffElem:
    """Dispatch surd-ring arithmetic by operation name (conj/neg ignore y)."""
    if op == "add":
        return x + y
    if op == "mul":
        return x * y
    if op == "conj":
        return x.conj()
    if op == "neg":
        return -x
    raise ValueError("unknown operation %r" % (op,))


def coeff_embed(v) -> CoeffElem:
    """Embed a rational, GaussQ or surd symbol name into the ring.

    Raises ValueError for identifiers that are not ring generators.
    """
    if isinstance(v, CoeffElem):
        return v
    if isinstance(v, GaussQ):
        return CoeffElem.from_gauss(v)
    if isinstance(v, str) and not v.lstrip("-").replace("/", "").isdigit():
        try:
            return _SYMBOLS[v]
        except KeyError:
            raise ValueError("unknown ring generator %r" % (v,)) from None
    return CoeffElem.from_rational(as_mpq(v))
