"""Scalar sector, gauge-boson masses and the structural Lagrangian table.

The scalar potential is V = -m^2 N + (f/4) N^2 in the squared norm N of
the state matrix; its minimum sits at N = 2 m^2/f with depth -m^4/f.  The
vacuum direction is the fixed matrix (0, i sigma^3; 0, I) whose squared
norm is 4, scaled by m/sqrt(2f).

The boson mass matrix comes from the vacuum-sandwiched quadratic form

    M[a][a'] = 1/4 q^a q^a' Re trsym(a, a'),
    trsym = ((Psi0+ * S^a) * (S^a' * Psi0) + (a <-> a')) traced and halved,

with the pairing fixed as shown; the product is non-associative, so the
alternative association orders are computed as diagnostics rather than
silently chosen.  Everything up to the eigensolve is exact rational; the
spectrum uses a deterministic cyclic Jacobi iteration.

Lorentz structure never becomes numeric anywhere in this module: mu/nu
patterns are formal tags on Lagrangian terms.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from gmpy2 import mpq

from .scalar_ring import C0_SQ, CoeffElem, GaussQ, as_mpq, fmt_q
from .octonion_core import MAT_ZERO, PAULI, SIGMA, Zorn, norm_sq


def _ce(re=0, im=0) -> CoeffElem:
    return CoeffElem.from_gauss(GaussQ(re, im))


#: the unscaled vacuum direction (0, i sigma^3; 0, I); squared norm 4
U0_DIRECTION = Zorn(_ce(0), PAULI[2].scale(_ce(0, 1)), MAT_ZERO, _ce(1))


@dataclass(frozen=True)
class FieldParams:
    """Mass parameter and quartic coupling; both must be positive."""

    m: mpq
    f: mpq

    def __post_init__(self):
        object.__setattr__(self, "m", as_mpq(self.m))
        object.__setattr__(self, "f", as_mpq(self.f))
        if self.m <= 0 or self.f <= 0:
            raise ValueError("m and f must be positive for a stable minimum")

    @property
    def vacuum_norm_sq(self) -> mpq:
        return 2 * self.m * self.m / self.f

    @property
    def vacuum_potential(self) -> mpq:
        return -(self.m ** 4) / self.f


@dataclass(frozen=True)
class ChargeSet:
    """Eight charges plus the couplings they were matched from."""

    q: Tuple[mpq, ...]
    g: mpq
    g1: mpq
    g4: mpq
    g5: mpq
    g6: mpq
    g7: mpq
    h: mpq
    htilde: CoeffElem

    def __post_init__(self):
        if len(self.q) != 8:
            raise ValueError("need 8 charges")

    @property
    def ga(self) -> float:
        """Combined D-boson coupling sqrt(g5^2 + g6^2)."""
        return math.sqrt(float(self.g5) ** 2 + float(self.g6) ** 2)

    @property
    def theta(self) -> float:
        """Mixing angle, tan(theta) = g1/g (0 when both vanish)."""
        return math.atan2(float(self.g1), float(self.g))


# ---------------------------------------------------------------------------
# numeric lane helpers
# ---------------------------------------------------------------------------

def to_numeric(u: Zorn) -> Zorn:
    """Surd-ring matrix -> complex-entry matrix."""
    return Zorn(u.lam.to_complex(), u.a.map(lambda x: x.to_complex()),
                u.b.map(lambda x: x.to_complex()), u.xi.to_complex())


def _require_numeric(u: Zorn):
    if not isinstance(u.lam, complex):
        raise TypeError("expected a numeric (complex-entry) state matrix")


_U0_NUMERIC = to_numeric(U0_DIRECTION)


# ---------------------------------------------------------------------------
# potential, vacuum, Higgs parametrisation
# ---------------------------------------------------------------------------

def potential_value(psi: Zorn, p: FieldParams) -> float:
    """V(psi) = -m^2 N + (f/4) N^2 with N the squared norm."""
    _require_numeric(psi)
    n = norm_sq(psi).real
    m2 = float(p.m) ** 2
    return -m2 * n + float(p.f) / 4.0 * n * n


def vacuum_state(p: FieldParams) -> Zorn:
    """Numeric vacuum configuration m/sqrt(2f) * (0, i sigma^3; 0, I)."""
    scale = float(p.m) / math.sqrt(2.0 * float(p.f))
    return _U0_NUMERIC.scale(complex(scale))


def vacuum_state_exact(p: FieldParams) -> Tuple[mpq, Zorn]:
    """The vacuum as (squared prefactor, fixed direction matrix).

    The prefactor m/sqrt(2f) is irrational in general, so the exact lane
    carries its square m^2/(2f); quadratic quantities (norms, vacuum
    sandwiches) stay exact rationals.
    """
    return p.m * p.m / (2 * p.f), U0_DIRECTION


def vacuum_norm_sq_exact(p: FieldParams) -> mpq:
    scale2, u0 = vacuum_state_exact(p)
    n = norm_sq(u0).as_rational()
    return scale2 * n


def higgs_param(sigma: float, thetas: Sequence[float], p: FieldParams) -> Zorn:
    """State near the minimum: (1/(2 sqrt 2)) (2m/sqrt f + sigma
    + theta^k i S^k) * (0, i sigma^3; 0, I), all numeric."""
    if len(thetas) != 7:
        raise ValueError("need 7 angular components")
    factor = to_numeric(SIGMA[0]).scale(complex(2.0 * float(p.m) / math.sqrt(float(p.f)) + sigma))
    for k in range(1, 8):
        t = thetas[k - 1]
        if t:
            factor = factor + to_numeric(SIGMA[k]).scale(complex(0.0, t))
    return (factor * _U0_NUMERIC).scale(complex(1.0 / (2.0 * math.sqrt(2.0))))


def radial_minimize(p: FieldParams, tol: float) -> float:
    """Locate the potential minimum along the vacuum ray; returns r*^2.

    Golden-section brackets the minimiser of V(r * psi_hat) for the
    unit-norm direction psi_hat; a final three-point parabolic solve in
    u = r^2 (V is exactly quadratic in u along a ray) removes the
    float-comparison plateau and puts r*^2 within tol of 2 m^2/f.
    """
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    psi_hat = _U0_NUMERIC.scale(complex(0.5))  # norm_sq == 1

    def v_of_r(r: float) -> float:
        return potential_value(psi_hat.scale(complex(r)), p)

    def v_of_u(u: float) -> float:
        return v_of_r(math.sqrt(u))

    lo, hi = 0.0, 2.0 * math.sqrt(2.0 * float(p.m) ** 2 / float(p.f)) + 1.0
    inv_phi = (math.sqrt(5.0) - 1.0) / 2.0
    c = hi - inv_phi * (hi - lo)
    d = lo + inv_phi * (hi - lo)
    fc, fd = v_of_r(c), v_of_r(d)
    while hi - lo > 1e-6:
        if fc < fd:
            hi, d, fd = d, c, fc
            c = hi - inv_phi * (hi - lo)
            fc = v_of_r(c)
        else:
            lo, c, fc = c, d, fd
            d = lo + inv_phi * (hi - lo)
            fd = v_of_r(d)
    u0 = ((lo + hi) / 2.0) ** 2
    h = max(0.05, 0.01 * u0)
    v_minus, v_mid, v_plus = v_of_u(u0 - h) if u0 - h > 0 else v_of_u(u0 + 2 * h), \
        v_of_u(u0), v_of_u(u0 + h)
    if u0 - h <= 0:
        # fall back to a right-sided stencil
        v_minus, v_mid, v_plus = v_of_u(u0), v_of_u(u0 + h), v_of_u(u0 + 2 * h)
        curv = v_plus - 2 * v_mid + v_minus
        return (u0 + h) - h * (v_plus - v_minus) / (2.0 * curv)
    curv = v_plus - 2 * v_mid + v_minus
    return u0 - h * (v_plus - v_minus) / (2.0 * curv)


# ---------------------------------------------------------------------------
# mass matrix (exact) and its association-order diagnostics
# ---------------------------------------------------------------------------

_TAU_CACHE: Optional[List[List[GaussQ]]] = None


def _tau_table() -> List[List[GaussQ]]:
    """tau(a,b) = block trace((U0+ * S^a) * (S^b * U0)), exact Gaussian."""
    global _TAU_CACHE
    if _TAU_CACHE is None:
        u0 = U0_DIRECTION
        u0c = u0.conj()
        left = [u0c * SIGMA[a] for a in range(8)]
        right = [SIGMA[b] * u0 for b in range(8)]
        tab = []
        for a in range(8):
            row = []
            for b in range(8):
                t = (left[a] * right[b]).trace().as_gauss()
                if t is None:
                    raise AssertionError("vacuum sandwich left the Gaussian rationals")
                row.append(t)
            tab.append(row)
        _TAU_CACHE = tab
    return _TAU_CACHE


class MassMatrix:
    """Exact symmetric 8x8 quadratic form of the gauge-field mass term."""

    __slots__ = ("m",)

    def __init__(self, rows: Sequence[Sequence[mpq]]):
        self.m = tuple(tuple(as_mpq(x) for x in row) for row in rows)
        if len(self.m) != 8 or any(len(r) != 8 for r in self.m):
            raise ValueError("need an 8x8 matrix")

    def __getitem__(self, i: int):
        return self.m[i]

    def is_symmetric(self) -> bool:
        return all(self.m[i][j] == self.m[j][i] for i in range(8) for j in range(8))

    def to_float(self) -> List[List[float]]:
        return [[float(x) for x in row] for row in self.m]

    def __eq__(self, o) -> bool:
        if not isinstance(o, MassMatrix):
            return NotImplemented
        return self.m == o.m

    def __str__(self) -> str:
        return "\n".join("  ".join(fmt_q(x) for x in row) for row in self.m)


def mass_matrix(c: ChargeSet, p: FieldParams) -> MassMatrix:
    """M[a][b] = 1/4 q^a q^b (m^2/2f) Re((tau(a,b)+tau(b,a))/2), exact."""
    tau = _tau_table()
    scale2 = p.m * p.m / (2 * p.f)
    rows = []
    for a in range(8):
        row = []
        for b in range(8):
            sym_re = (tau[a][b].re + tau[b][a].re) / 2
            row.append(c.q[a] * c.q[b] * scale2 * sym_re / 4)
        rows.append(row)
    return MassMatrix(rows)


def mass_pairing_diagnostics(a: int, b: int) -> Dict[str, str]:
    """The three association orders of the vacuum sandwich, unscaled.

    Values are for the direction matrix (prefactors m^2/2f omitted); the
    paired order is the one the mass matrix uses.
    """
    u0 = U0_DIRECTION
    u0c = u0.conj()
    paired = ((u0c * SIGMA[a]) * (SIGMA[b] * u0)).trace()
    left_nested = (((u0c * SIGMA[a]) * SIGMA[b]) * u0).trace()
    right_nested = (u0c * (SIGMA[a] * (SIGMA[b] * u0))).trace()
    return {"paired": str(paired), "left_nested": str(left_nested),
            "right_nested": str(right_nested)}


# ---------------------------------------------------------------------------
# deterministic symmetric eigensolver (cyclic Jacobi)
# ---------------------------------------------------------------------------

@dataclass
class SpectrumResult:
    eigenvalues: List[float]
    vectors: List[List[float]]        # vectors[k] is the k-th eigenvector
    reconstruction_error: float
    scale: float

    def zero_modes(self, tol: float = 1e-12) -> int:
        cut = tol * max(1.0, self.scale)
        return sum(1 for x in self.eigenvalues if abs(x) <= cut)


def spectrum(m) -> SpectrumResult:
    """All-real eigensystem of a symmetric matrix by cyclic Jacobi sweeps.

    Sweep order is fixed (row-major over the upper triangle) and the
    rotation threshold is 1e-14 of the largest entry, so repeated runs are
    bit-identical.  Eigenvalues are returned ascending; each eigenvector
    is sign-fixed so its largest-magnitude component is positive.
    """
    if isinstance(m, MassMatrix):
        a = m.to_float()
    else:
        a = [[float(x) for x in row] for row in m]
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("matrix must be square")
    scale = max(max(abs(x) for x in row) for row in a) if n else 0.0
    sym_tol = 1e-13 * max(1.0, scale)
    for i in range(n):
        for j in range(i + 1, n):
            if abs(a[i][j] - a[j][i]) > sym_tol:
                raise ValueError("matrix is not symmetric")
            mean = (a[i][j] + a[j][i]) / 2.0
            a[i][j] = a[j][i] = mean
    orig = [row[:] for row in a]
    v = [[1.0 if i == j else 0.0 for j in range(n)] for i in range(n)]
    thresh = 1e-14 * max(1.0, scale)
    for _sweep in range(100):
        off = 0.0
        for i in range(n):
            for j in range(i + 1, n):
                off = max(off, abs(a[i][j]))
        if off <= thresh:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p][q]
                if abs(apq) <= thresh:
                    continue
                theta = (a[q][q] - a[p][p]) / (2.0 * apq)
                t = 1.0 / (abs(theta) + math.sqrt(theta * theta + 1.0))
                if theta < 0.0:
                    t = -t
                cos = 1.0 / math.sqrt(t * t + 1.0)
                sin = t * cos
                tau = sin / (1.0 + cos)
                app, aqq = a[p][p], a[q][q]
                a[p][p] = app - t * apq
                a[q][q] = aqq + t * apq
                a[p][q] = a[q][p] = 0.0
                for k in range(n):
                    if k != p and k != q:
                        akp, akq = a[k][p], a[k][q]
                        a[k][p] = a[p][k] = akp - sin * (akq + tau * akp)
                        a[k][q] = a[q][k] = akq + sin * (akp - tau * akq)
                for k in range(n):
                    vkp, vkq = v[k][p], v[k][q]
                    v[k][p] = vkp - sin * (vkq + tau * vkp)
                    v[k][q] = vkq + sin * (vkp - tau * vkq)
    order = sorted(range(n), key=lambda k: (a[k][k], k))
    eigvals = [a[k][k] for k in order]
    vecs = []
    for k in order:
        col = [v[i][k] for i in range(n)]
        imax = max(range(n), key=lambda i: abs(col[i]))
        if col[imax] < 0.0:
            col = [-x for x in col]
        vecs.append(col)
    err = 0.0
    for i in range(n):
        for j in range(n):
            r = sum(vecs[k][i] * eigvals[k] * vecs[k][j] for k in range(n))
            err = max(err, abs(orig[i][j] - r))
    return SpectrumResult(eigenvalues=eigvals, vectors=vecs,
                          reconstruction_error=err, scale=max(1.0, scale))


# ---------------------------------------------------------------------------
# boson field redefinitions
# ---------------------------------------------------------------------------

_SQRT2 = math.sqrt(2.0)


def boson_basis_change(fields: Dict[str, complex], theta: float,
                       c: ChargeSet) -> Dict[str, complex]:
    """Gauge-basis fields A0..A7 -> physical fields.

    A0 plays the abelian B role.  The W redefinition as printed is
    singular when sin(theta) cos(theta) = 0; in that case nonzero A1/A2
    input is rejected rather than guessed at.
    """
    a = [complex(fields["A%d" % k]) for k in range(8)]
    st, ct = math.sin(theta), math.cos(theta)
    out: Dict[str, complex] = {}
    out["Z0"] = a[3] * ct - a[0] * st
    out["A_em"] = a[3] * st + a[0] * ct
    if abs(st * ct) < 1e-15:
        if abs(a[1]) > 0.0 or abs(a[2]) > 0.0:
            raise ValueError("W redefinition is singular at this mixing angle")
        out["W"] = out["Wbar"] = 0j
    else:
        out["W"] = (a[1] - 1j * a[2]) / (_SQRT2 * ct)
        out["Wbar"] = (a[1] + 1j * a[2]) / (_SQRT2 * st)
    out["C"] = a[4]
    out["E"] = a[7]
    g5, g6 = float(c.g5), float(c.g6)
    ga = c.ga
    if ga == 0.0:
        if abs(a[5]) > 0.0 or abs(a[6]) > 0.0:
            raise ValueError("combined coupling is zero but a D component is nonzero")
        out["D"] = out["Dbar"] = 0j
    else:
        out["D"] = (g6 * a[6] + 1j * g5 * a[5]) / ga
        out["Dbar"] = (g6 * a[6] - 1j * g5 * a[5]) / ga
    return out


def boson_basis_inverse(named: Dict[str, complex], theta: float,
                        c: ChargeSet) -> Dict[str, complex]:
    """Physical fields back to the gauge basis; exact inverse where the
    forward map is invertible (needs sin/cos theta and g5, g6 nonzero when
    the corresponding fields are nonzero)."""
    st, ct = math.sin(theta), math.cos(theta)
    z, aem = complex(named["Z0"]), complex(named["A_em"])
    w, wbar = complex(named["W"]), complex(named["Wbar"])
    d, dbar = complex(named["D"]), complex(named["Dbar"])
    out: Dict[str, complex] = {}
    out["A3"] = z * ct + aem * st
    out["A0"] = aem * ct - z * st
    out["A1"] = (w * ct + wbar * st) / _SQRT2
    out["A2"] = 1j * (w * ct - wbar * st) / _SQRT2
    out["A4"] = complex(named["C"])
    out["A7"] = complex(named["E"])
    g5, g6 = float(c.g5), float(c.g6)
    ga = c.ga
    if ga == 0.0:
        if abs(d) > 0.0 or abs(dbar) > 0.0:
            raise ValueError("combined coupling is zero but a D field is nonzero")
        out["A5"] = out["A6"] = 0j
    else:
        if g5 == 0.0:
            if abs(d - dbar) > 1e-15 * max(1.0, abs(d) + abs(dbar)):
                raise ValueError("cannot recover A5 with g5 = 0")
            out["A5"] = 0j
        else:
            out["A5"] = ga * (d - dbar) / (2j * g5)
        if g6 == 0.0:
            if abs(d + dbar) > 1e-15 * max(1.0, abs(d) + abs(dbar)):
                raise ValueError("cannot recover A6 with g6 = 0")
            out["A6"] = 0j
        else:
            out["A6"] = ga * (d + dbar) / (2.0 * g6)
    return out


# ---------------------------------------------------------------------------
# structural Lagrangian table
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LagrangianTerm:
    """One structural term: coefficient, formal fields, optional bilinear."""

    klass: str                      # kinetic | mass | current | yukawa | quartic | constant
    assoc: str                      # associative | nonassociative
    coeff_text: str
    coeff_value: float
    fields: Tuple[str, ...]
    lorentz: str
    bilinear: Optional[str] = None

    def record(self) -> dict:
        return {"class": self.klass, "assoc": self.assoc,
                "coeff": self.coeff_text, "value": self.coeff_value,
                "fields": list(self.fields), "lorentz": self.lorentz,
                "bilinear": self.bilinear}


_CLASS_ORDER = {"kinetic": 0, "mass": 1, "current": 2, "yukawa": 3,
                "quartic": 4, "constant": 5}


def _term_key(t: LagrangianTerm):
    return (_CLASS_ORDER[t.klass], t.assoc, t.fields, t.bilinear or "", t.coeff_text)


def lagrangian_terms(c: ChargeSet, p: FieldParams) -> List[LagrangianTerm]:
    """The full post-breaking term table, associative and non-associative
    parts flagged, with the charged D/Dbar rewriting applied to the
    non-associative currents.  Terms with vanishing coefficients drop out.
    """
    from .fermion_symbolic import (E_L, E_L_BAR, NU_L, NU_L_BAR,
                                   current_split, quartic_contract)
    m2f = p.m * p.m / p.f
    terms: List[LagrangianTerm] = []

    def add(klass, assoc, text, value, fields, lorentz, bilinear=None):
        if value == 0:
            return
        terms.append(LagrangianTerm(klass, assoc, text, float(value),
                                    tuple(fields), lorentz, bilinear))

    # always-present pieces
    add("kinetic", "associative", "-1/4", mpq(-1, 4), ("F(a)", "F(a)"), "μν·μν")
    add("kinetic", "associative", "i/2", 0.5, (), "μ", "ebar_L⊗e_L")
    add("kinetic", "associative", "i/2", 0.5, (), "μ", "nubar_L⊗nu_L")
    add("kinetic", "associative", "i/2", 0.5, (), "μ", "ebar_R⊗e_R")
    add("constant", "associative", fmt_q(p.m ** 4 / p.f), p.m ** 4 / p.f, (), "")

    # mass sector
    add("mass", "associative", fmt_q(c.g * c.g * m2f / 2), c.g * c.g * m2f / 2,
        ("A(a)", "A(a)"), "μ·μ")
    add("mass", "associative", fmt_q(-c.g * c.g1 * m2f), -c.g * c.g1 * m2f,
        ("A3", "B"), "μ·μ")

    # electroweak currents (associative sector)
    add("current", "associative", fmt_q(c.g1 / 2), c.g1 / 2, ("B",), "μ", "nubar_L⊗nu_L")
    add("current", "associative", fmt_q(c.g1 / 2), c.g1 / 2, ("B",), "μ", "ebar_L⊗e_L")
    add("current", "associative", fmt_q(c.g / 2), c.g / 2, ("A3",), "μ", "ebar_L⊗e_L")
    add("current", "associative", fmt_q(-c.g / 2), -c.g / 2, ("A3",), "μ", "nubar_L⊗nu_L")
    add("current", "associative", fmt_q(-c.g / 2), -c.g / 2, ("A1-i·A2",), "μ", "nubar_L⊗e_L")
    add("current", "associative", fmt_q(-c.g / 2), -c.g / 2, ("A1+i·A2",), "μ", "ebar_L⊗nu_L")
    add("current", "associative", fmt_q(c.g1), c.g1, ("B",), "μ", "ebar_R⊗e_R")

    # Yukawa
    if c.h != 0:
        val = _SQRT2 * float(c.h) * float(p.m) / math.sqrt(float(p.f))
        add("yukawa", "associative", "sqrt(2)·%s·m/sqrt(f)" % fmt_q(c.h), val,
            (), "", "ebar_L⊗e_R + ebar_R⊗e_L")

    # neutral heavy-boson current: exact engine coefficients, associative
    # (the split of this current has vanishing non-associative half)
    if c.g4 != 0:
        sp4 = current_split(4)
        kap1 = (sp4.assoc.coeff(NU_L_BAR, NU_L) / C0_SQ).as_rational()
        kap2 = (-sp4.assoc.coeff(E_L_BAR, E_L) / C0_SQ).as_rational()
        add("current", "associative", fmt_q(-c.g4 * kap1), -c.g4 * kap1,
            ("A4",), "μ", "nubar_L⊗nu_L")
        add("current", "associative", fmt_q(c.g4 * kap2), c.g4 * kap2,
            ("A4",), "μ", "ebar_L⊗e_L")

    # non-associative sector: quartic contraction and D currents
    for rec in quartic_contract(c):
        add("quartic", "nonassociative", fmt_q(-rec["coefficient"]),
            -rec["coefficient"],
            tuple("A%d" % k for k in rec["indices"]), rec["lorentz"])
    ga = c.ga
    if ga != 0.0:
        add("current", "nonassociative", "-3/4·ga", -0.75 * ga,
            ("D+Dbar",), "μ", "ebar_L⊗e_L")
        add("current", "nonassociative", "-5/4·ga", -1.25 * ga,
            ("D",), "μ", "nubar_L⊗e_L")
        add("current", "nonassociative", "-5/4·ga", -1.25 * ga,
            ("Dbar",), "μ", "ebar_L⊗nu_L")

    terms.sort(key=_term_key)
    return terms


def term_table_records(terms: List[LagrangianTerm]) -> List[dict]:
    return [t.record() for t in terms]


def term_table_markdown(terms: List[LagrangianTerm]) -> str:
    lines = ["| class | part | coefficient | fields | bilinear |",
             "|---|---|---|---|---|"]
    for t in terms:
        lines.append("| %s | %s | %s | %s | %s |" % (
            t.klass, t.assoc, t.coeff_text, " ".join(t.fields) or "—",
            t.bilinear or "—"))
    return "\n".join(lines) + "\n"
