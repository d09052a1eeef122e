"""Split-octonion algebra in two cross-checked representations.

``OctCoord`` is the coordinate picture: eight coordinates over the e0..e7
generator basis, multiplied through the generator table (e0 is the unit,
every other generator squares to -1, distinct imaginary generators
anticommute, and the signed triple products are fixed by the table below).

``Zorn`` is the abstract 2-block matrix picture (lam, A; B, xi) with the
bespoke star product

    (lam,A;B,xi) * (lam',A';B',xi') =
        (lam lam' + tr(AB')/2,   lam A' + xi' A + i[B,B']/2;
         lam' B + xi B' - i[A,A']/2,   xi xi' + tr(BA')/2)

which realises octonion multiplication even though the blocks themselves
are ordinary associative matrices.  Blocks are deliberately NOT restricted
to traceless: the abstract matrix space is larger than the octonion span,
and e.g. the vacuum configuration uses a non-traceless block.  Operations
that only make sense on the octonion span gate on ``octonionic()``.

The two pictures are linked by e^k -> -i*Sigma^k (e0 -> Sigma^0); the
package verifies rather than assumes that this map reconciles the two
multiplication tables.

Everything is generic over the scalar ring: exact surd-ring entries for
symbolic work, fermion polynomials for the current traces, and python
complex for the numeric spectrum lane.
"""

from __future__ import annotations

from typing import Callable, Dict, List, Sequence, Tuple

from gmpy2 import mpq

from .scalar_ring import CoeffElem, GaussQ, ONE, ZERO


class NonOctonionicError(ValueError):
    """Raised when an operation needs a traceless-block (octonionic) matrix."""


# ---------------------------------------------------------------------------
# scalar helpers shared by every ring the matrices run over
# ---------------------------------------------------------------------------

def _conj(x):
    if isinstance(x, complex):
        return x.conjugate()
    return x.conj()


def _times_i(x):
    if isinstance(x, complex):
        return 1j * x
    return x.times_i()


def _is_zero(x) -> bool:
    if isinstance(x, complex):
        return x == 0
    return x.is_zero()


def _i_half(x):
    return _times_i(x) / 2


class Mat2:
    """A 2x2 matrix over any commutative scalar ring."""

    __slots__ = ("e",)

    def __init__(self, e00, e01, e10, e11):
        self.e = (e00, e01, e10, e11)

    def __add__(self, o: "Mat2") -> "Mat2":
        a, b = self.e, o.e
        return Mat2(a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3])

    def __sub__(self, o: "Mat2") -> "Mat2":
        a, b = self.e, o.e
        return Mat2(a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3])

    def __neg__(self) -> "Mat2":
        a = self.e
        return Mat2(-a[0], -a[1], -a[2], -a[3])

    def __matmul__(self, o: "Mat2") -> "Mat2":
        a, b = self.e, o.e
        return Mat2(a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
                    a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3])

    def trace_prod(self, o: "Mat2"):
        """tr(self @ o) without forming the off-diagonal entries."""
        a, b = self.e, o.e
        return a[0] * b[0] + a[1] * b[2] + a[2] * b[1] + a[3] * b[3]

    def scale(self, s) -> "Mat2":
        a = self.e
        return Mat2(s * a[0], s * a[1], s * a[2], s * a[3])

    def trace(self):
        return self.e[0] + self.e[3]

    def dagger(self) -> "Mat2":
        a = self.e
        return Mat2(_conj(a[0]), _conj(a[2]), _conj(a[1]), _conj(a[3]))

    def commutator(self, o: "Mat2") -> "Mat2":
        return (self @ o) - (o @ self)

    def map(self, fn: Callable) -> "Mat2":
        a = self.e
        return Mat2(fn(a[0]), fn(a[1]), fn(a[2]), fn(a[3]))

    def is_zero(self) -> bool:
        return all(_is_zero(x) for x in self.e)

    def __eq__(self, o) -> bool:
        if not isinstance(o, Mat2):
            return NotImplemented
        return self.e == o.e

    def __hash__(self):
        return hash(self.e)

    def __str__(self) -> str:
        a = self.e
        return "[[%s, %s], [%s, %s]]" % (a[0], a[1], a[2], a[3])

    __repr__ = __str__


class Zorn:
    """Abstract 2-block matrix (lam, A; B, xi) with the star product.

    ``__mul__`` IS the star product; the underlying 4x4 matrix product is
    never used.  Supports any scalar ring whose elements provide +, *, -,
    /int, conj() and times_i() (python complex gets shims).
    """

    __slots__ = ("lam", "a", "b", "xi")

    def __init__(self, lam, a: Mat2, b: Mat2, xi):
        self.lam = lam
        self.a = a
        self.b = b
        self.xi = xi

    def __add__(self, o: "Zorn") -> "Zorn":
        return Zorn(self.lam + o.lam, self.a + o.a, self.b + o.b, self.xi + o.xi)

    def __sub__(self, o: "Zorn") -> "Zorn":
        return Zorn(self.lam - o.lam, self.a - o.a, self.b - o.b, self.xi - o.xi)

    def __neg__(self) -> "Zorn":
        return Zorn(-self.lam, -self.a, -self.b, -self.xi)

    def __mul__(self, o: "Zorn") -> "Zorn":
        lam = self.lam * o.lam + self.a.trace_prod(o.b) / 2
        xi = self.xi * o.xi + self.b.trace_prod(o.a) / 2
        a = o.a.scale(self.lam) + self.a.scale(o.xi) + self.b.commutator(o.b).map(_i_half)
        b = self.b.scale(o.lam) + o.b.scale(self.xi) - self.a.commutator(o.a).map(_i_half)
        return Zorn(lam, a, b, xi)

    def star_trace(self, o: "Zorn"):
        """trace(self * o) without forming the product's blocks."""
        return (2 * (self.lam * o.lam) + 2 * (self.xi * o.xi)
                + self.a.trace_prod(o.b) + self.b.trace_prod(o.a))

    def scale(self, s) -> "Zorn":
        return Zorn(s * self.lam, self.a.scale(s), self.b.scale(s), s * self.xi)

    def __truediv__(self, k) -> "Zorn":
        return Zorn(self.lam / k, self.a.map(lambda x: x / k),
                    self.b.map(lambda x: x / k), self.xi / k)

    def conj(self) -> "Zorn":
        """Hermitian conjugation: (lam, A; B, xi) -> (lam*, B+; A+, xi*)."""
        return Zorn(_conj(self.lam), self.b.dagger(), self.a.dagger(), _conj(self.xi))

    def trace(self):
        """Block trace 2*lam + 2*xi (each diagonal block is scalar * I)."""
        return 2 * self.lam + 2 * self.xi

    def octonionic(self) -> bool:
        """True when both off-diagonal blocks are traceless."""
        return _is_zero(self.a.trace()) and _is_zero(self.b.trace())

    def is_zero(self) -> bool:
        return (_is_zero(self.lam) and _is_zero(self.xi)
                and self.a.is_zero() and self.b.is_zero())

    def __eq__(self, o) -> bool:
        if not isinstance(o, Zorn):
            return NotImplemented
        return (self.lam == o.lam and self.xi == o.xi
                and self.a == o.a and self.b == o.b)

    def __hash__(self):
        return hash((self.lam, self.a, self.b, self.xi))

    def __str__(self) -> str:
        return "(lam=%s, A=%s, B=%s, xi=%s)" % (self.lam, self.a, self.b, self.xi)

    __repr__ = __str__


def zorn_mul(u: Zorn, v: Zorn) -> Zorn:
    return u * v


def zorn_conj(u: Zorn) -> Zorn:
    return u.conj()


def zorn_trace(u: Zorn):
    return u.trace()


def norm_sq(u: Zorn):
    """Squared norm: block trace of u+ * u.

    For entries in the surd ring the result is an exact real ring element;
    for complex entries it is a float-precision complex with ~zero
    imaginary part (callers take .real).
    """
    return u.conj().star_trace(u)


# ---------------------------------------------------------------------------
# the Sigma basis over the exact ring
# ---------------------------------------------------------------------------

def _ce(re=0, im=0) -> CoeffElem:
    return CoeffElem.from_gauss(GaussQ(re, im))


def _mat(rows) -> Mat2:
    (a, b), (c, d) = rows
    return Mat2(a, b, c, d)


PAULI = (
    _mat([[_ce(0), _ce(1)], [_ce(1), _ce(0)]]),    # sigma^1
    _mat([[_ce(0), _ce(0, -1)], [_ce(0, 1), _ce(0)]]),  # sigma^2
    _mat([[_ce(1), _ce(0)], [_ce(0), _ce(-1)]]),   # sigma^3
)

MAT_ZERO = _mat([[_ce(0), _ce(0)], [_ce(0), _ce(0)]])
MAT_ID = _mat([[_ce(1), _ce(0)], [_ce(0), _ce(1)]])


def _build_sigma() -> Tuple[Zorn, ...]:
    zero, one = _ce(0), _ce(1)
    out = [Zorn(one, MAT_ZERO, MAT_ZERO, one)]                     # Sigma^0
    for i in range(3):                                             # Sigma^1..3
        out.append(Zorn(zero, PAULI[i].scale(_ce(0, -1)),
                        PAULI[i].scale(_ce(0, 1)), zero))
    out.append(Zorn(-one, MAT_ZERO, MAT_ZERO, one))                # Sigma^4
    for i in range(3):                                             # Sigma^5..7
        out.append(Zorn(zero, -PAULI[i], -PAULI[i], zero))
    return tuple(out)


SIGMA: Tuple[Zorn, ...] = _build_sigma()


def sigma_basis(k: int) -> Zorn:
    """The eight Hermitian basis matrices of the abstract algebra."""
    if not 0 <= k <= 7:
        raise IndexError("sigma index %r out of range 0..7" % (k,))
    return SIGMA[k]


ZORN_ZERO = Zorn(_ce(0), MAT_ZERO, MAT_ZERO, _ce(0))


# ---------------------------------------------------------------------------
# coordinate octonions and the generator table
# ---------------------------------------------------------------------------

def _levi_civita3(i: int, j: int, k: int) -> int:
    if {i, j, k} != {1, 2, 3}:
        return 0
    if (i, j, k) in ((1, 2, 3), (2, 3, 1), (3, 1, 2)):
        return 1
    return -1


def _build_generator_table() -> List[List[Tuple[int, int]]]:
    """The 8x8 table e^a e^b = sign * e^k as (k, sign) entries.

    Built literally from the defining rules: e0 unit, squares -1, the
    low-triple products, the hatted products (hat e^i = e^{i+4}), the
    mixed products, and e^i e^4 / e^4 hat-e^i.  Products the rules do not
    display directly are completed by antisymmetry of distinct imaginary
    generators; the test suite and the verification report check the
    completed table against the Sigma-side structure constants.
    """
    tab: List[List[Tuple[int, int]]] = [[None] * 8 for _ in range(8)]  # type: ignore

    def put(a, b, k, s):
        if tab[a][b] is None:
            tab[a][b] = (k, s)

    for a in range(8):
        put(0, a, a, 1)
        put(a, 0, a, 1)
    put(0, 0, 0, 1)
    for a in range(1, 8):
        put(a, a, 0, -1)

    for i in range(1, 4):
        for j in range(1, 4):
            if i != j:
                k = 6 - i - j
                put(i, j, k, _levi_civita3(i, j, k))                 # e^i e^j
                put(i + 4, j + 4, k, -_levi_civita3(i, j, k))        # hat hat
        put(i, 4, i + 4, 1)                                          # e^i e^4
        put(4, i + 4, i, 1)                                          # e^4 hat-e^i
        for j in range(1, 4):
            if i == j:
                put(i, j + 4, 4, -1)                                 # e^i hat-e^i
            else:
                k = 6 - i - j
                put(i, j + 4, k + 4, -_levi_civita3(i, j, k))        # e^i hat-e^j

    # remaining products by antisymmetry e^a e^b = -e^b e^a (a != b, both >= 1)
    for a in range(1, 8):
        for b in range(1, 8):
            if tab[a][b] is None:
                k, s = tab[b][a]
                tab[a][b] = (k, -s)
    return tab


GEN_TABLE = _build_generator_table()


class OctCoord:
    """Octonion as eight exact coordinates over the e0..e7 basis."""

    __slots__ = ("alpha",)

    def __init__(self, alpha: Sequence[CoeffElem]):
        if len(alpha) != 8:
            raise ValueError("need 8 coordinates")
        self.alpha = tuple(alpha)

    @classmethod
    def generator(cls, k: int) -> "OctCoord":
        if not 0 <= k <= 7:
            raise IndexError("generator index %r out of range 0..7" % (k,))
        return cls([ONE if i == k else ZERO for i in range(8)])

    @classmethod
    def zero(cls) -> "OctCoord":
        return cls([ZERO] * 8)

    def __add__(self, o: "OctCoord") -> "OctCoord":
        return OctCoord([x + y for x, y in zip(self.alpha, o.alpha)])

    def __sub__(self, o: "OctCoord") -> "OctCoord":
        return OctCoord([x - y for x, y in zip(self.alpha, o.alpha)])

    def __neg__(self) -> "OctCoord":
        return OctCoord([-x for x in self.alpha])

    def scale(self, s) -> "OctCoord":
        return OctCoord([s * x for x in self.alpha])

    def __truediv__(self, k) -> "OctCoord":
        return OctCoord([x / k for x in self.alpha])

    def __mul__(self, o: "OctCoord") -> "OctCoord":
        out = [ZERO] * 8
        for a, xa in enumerate(self.alpha):
            if xa.is_zero():
                continue
            for b, yb in enumerate(o.alpha):
                if yb.is_zero():
                    continue
                k, s = GEN_TABLE[a][b]
                t = xa * yb
                out[k] = out[k] + (t if s > 0 else -t)
        return OctCoord(out)

    def conj(self) -> "OctCoord":
        """Octonion conjugation: negate the imaginary coordinates."""
        return OctCoord([self.alpha[0].conj()] +
                        [-x.conj() for x in self.alpha[1:]])

    def is_zero(self) -> bool:
        return all(x.is_zero() for x in self.alpha)

    def __eq__(self, o) -> bool:
        if not isinstance(o, OctCoord):
            return NotImplemented
        return self.alpha == o.alpha

    def __hash__(self):
        return hash(self.alpha)

    def __str__(self) -> str:
        parts = []
        for k, x in enumerate(self.alpha):
            if x.is_zero():
                continue
            s = str(x)
            if s == "1":
                parts.append("e%d" % k)
            elif s == "-1":
                parts.append("-e%d" % k)
            elif ("+" in s[1:] or "-" in s[1:]) and not s.startswith("("):
                parts.append("(%s)·e%d" % (s, k))
            else:
                parts.append("%s·e%d" % (s, k))
        if not parts:
            return "0"
        out = parts[0]
        for p in parts[1:]:
            if p.startswith("-"):
                out += " - " + p[1:]
            else:
                out += " + " + p
        return out

    __repr__ = __str__


def oct_mul(a: OctCoord, b: OctCoord) -> OctCoord:
    return a * b


# ---------------------------------------------------------------------------
# conversion between the two pictures: e^k <-> -i * Sigma^k
# ---------------------------------------------------------------------------

_MINUS_I_SIGMA = tuple(SIGMA[k].scale(_ce(0, -1)) for k in range(8))


def coord_to_zorn(a: OctCoord) -> Zorn:
    out = ZORN_ZERO
    if not a.alpha[0].is_zero():
        out = out + SIGMA[0].scale(a.alpha[0])
    for k in range(1, 8):
        x = a.alpha[k]
        if not x.is_zero():
            out = out + _MINUS_I_SIGMA[k].scale(x)
    return out


def zorn_to_coord(u: Zorn) -> OctCoord:
    """Inverse of coord_to_zorn on the octonionic subspace.

    Requires traceless blocks; reports which block breaks the requirement.
    """
    if not _is_zero(u.a.trace()):
        raise NonOctonionicError("top-right block has nonzero trace")
    if not _is_zero(u.b.trace()):
        raise NonOctonionicError("bottom-left block has nonzero trace")
    x = _sigma_coordinates(u)
    alpha = [x[0]] + [_times_i(xk) for xk in x[1:]]
    return OctCoord(alpha)


def _sigma_coordinates(u: Zorn) -> List[CoeffElem]:
    """Coordinates of a traceless-block matrix over Sigma^0..Sigma^7."""
    a00, a01, a10, a11 = u.a.e
    b00, b01, b10, b11 = u.b.e
    # sigma-decomposition of each block: M = m1 s1 + m2 s2 + m3 s3 (+ mI I)
    a1 = (a01 + a10) / 2
    a2 = _times_i(a01 - a10) / 2
    a3 = (a00 - a11) / 2
    b1 = (b01 + b10) / 2
    b2 = _times_i(b01 - b10) / 2
    b3 = (b00 - b11) / 2
    x = [None] * 8
    x[0] = (u.lam + u.xi) / 2
    x[4] = (u.xi - u.lam) / 2
    for j, (aj, bj) in enumerate(((a1, b1), (a2, b2), (a3, b3)), start=1):
        # Sigma^j carries A -> -i sigma^j, B -> +i sigma^j;
        # Sigma^{4+j} carries A = B = -sigma^j
        x[j] = _times_i(aj - bj) / 2
        x[4 + j] = -(aj + bj) / 2
    return x  # type: ignore


def sigma_coordinates(u: Zorn) -> List[CoeffElem]:
    """Public Sigma-basis decomposition; requires an octonionic matrix."""
    if not u.octonionic():
        raise NonOctonionicError("matrix has non-traceless blocks")
    return _sigma_coordinates(u)


# ---------------------------------------------------------------------------
# associators, the antisymmetric tables, the four-element trace
# ---------------------------------------------------------------------------

def associator(a, b, c):
    """{a, b, c} = (ab)c - a(bc) for any type with the algebra's product."""
    return (a * b) * c - a * (b * c)


def split3(a, b, c):
    """Split (ab)c into its associative and non-associative halves.

    Returns (assoc, nonassoc) with assoc = ((ab)c + a(bc))/2 and
    nonassoc = ((ab)c - a(bc))/2, so assoc + nonassoc = (ab)c and
    nonassoc is half the associator.
    """
    left = (a * b) * c
    right = a * (b * c)
    return (left + right) / 2, (left - right) / 2


def perm_sign(seq: Sequence[int]) -> int:
    """Sign of the permutation sorting seq; 0 when an index repeats."""
    s = list(seq)
    if len(set(s)) != len(s):
        return 0
    sign = 1
    for i in range(len(s)):
        for j in range(i + 1, len(s)):
            if s[i] > s[j]:
                s[i], s[j] = s[j], s[i]
                sign = -sign
    return sign


class EpsTable:
    """Totally antisymmetric sign table stored by canonical sorted entries."""

    def __init__(self, base: Dict[Tuple[int, ...], int]):
        self.base = dict(base)

    def sign(self, *indices: int) -> int:
        key = tuple(sorted(indices))
        s = self.base.get(key, 0)
        if s == 0:
            return 0
        return s * perm_sign(indices)

    def canonical(self) -> List[Tuple[Tuple[int, ...], int]]:
        return sorted(self.base.items())

    def __eq__(self, o) -> bool:
        if not isinstance(o, EpsTable):
            return NotImplemented
        return self.base == o.base


#: triple structure constants (canonicalised): the product table's signed triples
EPS3 = EpsTable({
    (1, 2, 3): 1,
    (1, 4, 5): 1,
    (1, 6, 7): -1,   # listed as 176
    (2, 4, 6): 1,
    (2, 5, 7): 1,
    (3, 4, 7): 1,
    (3, 5, 6): -1,   # listed as 365
})


def eps4_table() -> EpsTable:
    """Quadruple table computed from coordinate-generator associators.

    For every ordered-sorted triple i<j<k of imaginary generators the
    associator {e^i, e^j, e^k} is either zero or 2*sign*e^l; collecting
    the nonzero cases yields the canonical signed quadruples.
    """
    base: Dict[Tuple[int, ...], int] = {}
    gens = [OctCoord.generator(k) for k in range(8)]
    two = CoeffElem.from_rational(2)
    for i in range(1, 8):
        for j in range(i + 1, 8):
            for k in range(j + 1, 8):
                w = associator(gens[i], gens[j], gens[k])
                if w.is_zero():
                    continue
                hits = [(l, x) for l, x in enumerate(w.alpha) if not x.is_zero()]
                if len(hits) != 1:
                    raise AssertionError("associator of generators not a single generator")
                l, x = hits[0]
                if x == two:
                    s = 1
                elif x == -two:
                    s = -1
                else:
                    raise AssertionError("associator coefficient is not ±2")
                key = tuple(sorted((i, j, k, l)))
                sign = s * perm_sign((i, j, k, l))
                prev = base.get(key)
                if prev is not None and prev != sign:
                    raise AssertionError("inconsistent quadruple sign for %r" % (key,))
                base[key] = sign
    return EpsTable(base)


_EPS4_CACHE: EpsTable = None  # type: ignore


def eps4() -> EpsTable:
    global _EPS4_CACHE
    if _EPS4_CACHE is None:
        _EPS4_CACHE = eps4_table()
    return _EPS4_CACHE


_SIGMA_ASSOC_CACHE: Dict[Tuple[int, int, int], Zorn] = {}


def _sigma_associator(b: int, c: int, d: int) -> Zorn:
    key = (b, c, d)
    w = _SIGMA_ASSOC_CACHE.get(key)
    if w is None:
        w = associator(SIGMA[b], SIGMA[c], SIGMA[d])
        _SIGMA_ASSOC_CACHE[key] = w
    return w


def quad_trace(a: int, b: int, c: int, d: int) -> mpq:
    """Four-element trace tr(S^a {S^b,S^c,S^d} - {S^a,S^b,S^c} S^d) / 2.

    The abstract (2x2 block-scalar) trace is used, i.e. half the 4x4 block
    trace; with that normalisation the value is 8 * eps4 on the generator
    quadruples.  Exact rational output.
    """
    for k in (a, b, c, d):
        if not 0 <= k <= 7:
            raise IndexError("index %r out of range 0..7" % (k,))
    t = (SIGMA[a].star_trace(_sigma_associator(b, c, d))
         - _sigma_associator(a, b, c).star_trace(SIGMA[d])) / 2
    r = t.as_rational()
    if r is None:
        raise AssertionError("four-element trace is not rational")
    return r


# ---------------------------------------------------------------------------
# table rendering (text + JSON records)
# ---------------------------------------------------------------------------

def generator_table_records() -> List[dict]:
    """The coordinate product table as {indices, sign, result} records."""
    out = []
    for a in range(8):
        for b in range(8):
            k, s = GEN_TABLE[a][b]
            out.append({"indices": [a, b], "sign": s, "result": k})
    return out


def sigma_table_records() -> List[dict]:
    """The Sigma star table as {indices, coeff, result} records.

    coeff is one of "1", "-1", "i", "-i" and result the basis index of the
    single Sigma the product lands on.
    """
    out = []
    for a in range(8):
        for b in range(8):
            coords = sigma_coordinates(SIGMA[a] * SIGMA[b])
            hits = [(k, x) for k, x in enumerate(coords) if not x.is_zero()]
            if len(hits) != 1:
                raise AssertionError("sigma product is not a single basis element")
            k, x = hits[0]
            g = x.as_gauss()
            names = {(1, 0): "1", (-1, 0): "-1", (0, 1): "i", (0, -1): "-i"}
            out.append({"indices": [a, b], "coeff": names[(int(g.re), int(g.im))],
                        "result": k})
    return out


def eps3_records() -> List[dict]:
    return [{"indices": list(k), "sign": s} for k, s in EPS3.canonical()]


def eps4_records() -> List[dict]:
    return [{"indices": list(k), "sign": s} for k, s in eps4().canonical()]


def render_table_text(what: str) -> str:
    """Aligned text rendering for the table CLI."""
    if what == "bao":
        head = "coordinate generator products  e^a · e^b"
        cells = [["" for _ in range(8)] for _ in range(8)]
        for r in generator_table_records():
            a, b = r["indices"]
            cells[a][b] = ("" if r["sign"] > 0 else "-") + "e%d" % r["result"]
    elif what == "sigma" or what == "nonasalg":
        if what == "nonasalg":
            lines = ["triple structure constants (canonical, sign under permutation parity)"]
            for r in eps3_records():
                lines.append("  eps(%s) = %+d" % (",".join(map(str, r["indices"])), r["sign"]))
            return "\n".join(lines) + "\n"
        head = "star products  S^a * S^b"
        cells = [["" for _ in range(8)] for _ in range(8)]
        for r in sigma_table_records():
            a, b = r["indices"]
            c = r["coeff"]
            pre = {"1": "", "-1": "-", "i": "i·", "-i": "-i·"}[c]
            cells[a][b] = pre + "S%d" % r["result"]
    elif what == "eps4":
        lines = ["associator quadruples (canonical, sign under permutation parity)"]
        for r in eps4_records():
            lines.append("  eps(%s) = %+d" % (",".join(map(str, r["indices"])), r["sign"]))
        return "\n".join(lines) + "\n"
    else:
        raise ValueError("unknown table %r" % (what,))
    width = max(max(len(c) for c in row) for row in cells) + 2
    lines = [head, "     " + "".join(("[%d]" % b).ljust(width) for b in range(8))]
    for a in range(8):
        lines.append(("[%d]  " % a) + "".join(cells[a][b].ljust(width) for b in range(8)))
    return "\n".join(lines) + "\n"


def table_records(what: str) -> List[dict]:
    if what == "bao":
        return generator_table_records()
    if what == "sigma":
        return sigma_table_records()
    if what == "nonasalg":
        return eps3_records()
    if what == "eps4":
        return eps4_records()
    raise ValueError("unknown table %r" % (what,))
