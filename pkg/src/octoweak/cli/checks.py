"""The batch verification driver behind ``verify``.

Every published table, identity, trace, split, matching condition and mass
claim becomes one check; engine self-consistency failures are FAIL,
reproducible disagreements with published claims are FLAG with the exact
computed value alongside.  Randomised property checks draw from a seeded
generator so the whole report is byte-reproducible.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, List, Tuple

from gmpy2 import mpq

from ..scalar_ring import (C0, C0_SQ, CoeffElem, GaussQ, I_UNIT, ONE, S2,
                           Y0, ZERO, as_mpq, fmt_q)
from ..octonion_core import (EPS3, MAT_ZERO, Mat2, OctCoord, SIGMA,
                             ZORN_ZERO, Zorn, associator, coord_to_zorn,
                             eps4, norm_sq, quad_trace, split3,
                             zorn_to_coord)
from ..field_theory import (ChargeSet, FieldParams, boson_basis_change,
                            boson_basis_inverse, higgs_param,
                            lagrangian_terms, mass_matrix,
                            mass_pairing_diagnostics, potential_value,
                            radial_minimize, spectrum,
                            vacuum_norm_sq_exact, vacuum_state,
                            U0_DIRECTION)
from ..fermion_symbolic import (Bilinear, BilinearCombo, E_L, E_L_BAR,
                                FermionSym, NU_L, NU_L_BAR, coupling_match,
                                current_split, current_trace,
                                doublet_bar_matrix, doublet_matrix,
                                oracle_current_trace, quartic_contract,
                                yukawa_matching)
from ..golden import (EPS4_CANONICAL, EPS4_LISTED_ORDERS, EXPR_CORPUS,
                      KAPPA_1, KAPPA_2, golden_current_combo,
                      golden_mass_matrix)
from .report import FAIL, FLAG, PASS, CheckResult


@dataclass
class VerifyConfig:
    m: mpq = mpq(1)
    f: mpq = mpq(1)
    g: mpq = mpq(1)
    g1: mpq = mpq(1)
    g4: mpq = mpq(1)
    g5: mpq = mpq(1)
    g6: mpq = mpq(1)
    g7: mpq = mpq(1)
    h: mpq = mpq(1)
    seed: int = 0

    def params(self) -> FieldParams:
        return FieldParams(self.m, self.f)

    def charges(self) -> ChargeSet:
        return coupling_match(self.g, self.g1, self.h, self.g4, self.g5,
                              self.g6, self.g7)


# ---------------------------------------------------------------------------
# random element generators (seeded, small exact entries)
# ---------------------------------------------------------------------------

def _rand_gauss(rng) -> GaussQ:
    return GaussQ(rng.randint(-3, 3), rng.randint(-3, 3))


def _rand_ce(rng, surds: bool = False) -> CoeffElem:
    terms = {0: _rand_gauss(rng)}
    if surds and rng.random() < 0.4:
        terms[rng.choice((1, 2, 4))] = _rand_gauss(rng)
    return CoeffElem(terms)


def _rand_mat(rng) -> Mat2:
    return Mat2(_rand_ce(rng), _rand_ce(rng), _rand_ce(rng), _rand_ce(rng))


def _rand_traceless(rng) -> Mat2:
    t = _rand_ce(rng)
    return Mat2(t, _rand_ce(rng), _rand_ce(rng), -t)


def _rand_zorn(rng) -> Zorn:
    return Zorn(_rand_ce(rng), _rand_mat(rng), _rand_mat(rng), _rand_ce(rng))


def _rand_oct(rng) -> Zorn:
    return Zorn(_rand_ce(rng), _rand_traceless(rng), _rand_traceless(rng),
                _rand_ce(rng))


def _combo(entries) -> BilinearCombo:
    def sym(label: str) -> FermionSym:
        name, chir = label.split("_")
        barred = name.endswith("bar")
        return FermionSym(name[:-3] if barred else name, chir, barred)
    return BilinearCombo({Bilinear(sym(b), sym(k)):
                          CoeffElem.from_gauss(GaussQ(mpq(re), mpq(im)))
                          for (b, k), (re, im) in entries.items()})


# ---------------------------------------------------------------------------
# the check registry
# ---------------------------------------------------------------------------

def verify_all(cfg: VerifyConfig) -> List[CheckResult]:
    results: List[CheckResult] = []
    rng = random.Random(cfg.seed)

    def run(check_id: str, module: str, anchor: str, claimed: str,
            fn: Callable[[], Tuple[str, str]]):
        try:
            status, computed = fn()
        except Exception as exc:  # an engine crash is itself a failure
            results.append(CheckResult(check_id, module, anchor,
                                       "exception: %r" % (exc,), claimed, FAIL))
            return
        results.append(CheckResult(check_id, module, anchor, computed,
                                   claimed, status))

    _scalar_checks(run, rng)
    _octonion_checks(run, rng)
    _fermion_checks(run, cfg)
    _field_checks(run, rng, cfg)
    _cli_checks(run)
    return results


# ---------------------------------------------------------------------------
# scalar ring
# ---------------------------------------------------------------------------

def _scalar_checks(run, rng):
    def ring_axioms():
        for _ in range(1000):
            x, y, z = (_rand_ce(rng, surds=True) for _ in range(3))
            if (x + y) + z != x + (y + z) or (x * y) * z != x * (y * z):
                return FAIL, "associativity broke on a random triple"
            if x * (y + z) != x * y + x * z or x * y != y * x:
                return FAIL, "distributivity/commutativity broke"
        return PASS, "1000 random triples, exact"
    run("ring_axioms_1000", "scalar_ring", "surd ring over Gaussian rationals",
        "commutative ring axioms", ring_axioms)

    def squares():
        vals = (C0 * C0).as_rational(), (Y0 * Y0).as_rational(), (S2 * S2).as_rational()
        want = (mpq(32, 257), mpq(257, 32) - mpq(5729, 2304), mpq(2))
        ok = vals == want and vals[1] == mpq(12775, 2304)
        return (PASS if ok else FAIL,
                "c0^2=%s, y0^2=%s, s2^2=%s" % tuple(fmt_q(v) for v in vals))
    run("surd_squares", "scalar_ring",
        'c_0^2=32/257; "Given y_0^2=257/32-5729/2304"',
        "c0^2=32/257, y0^2=12775/2304, s2^2=2", squares)

    def confluence():
        lhs = (C0 * Y0) * S2
        rhs = C0 * (Y0 * S2)
        full = C0 * Y0 * S2
        if lhs != rhs or lhs != full:
            return FAIL, "monomial association order changed the normal form"
        sq = full * full
        want = CoeffElem.from_rational(mpq(32, 257) * mpq(12775, 2304) * 2)
        return (PASS if sq == want else FAIL,
                "(c0·y0·s2)^2 = %s" % sq)
    run("reduction_confluence", "scalar_ring", "surd reduction relations",
        "normal form independent of reduction order", confluence)

    def conj_props():
        for _ in range(500):
            x, y = _rand_ce(rng, surds=True), _rand_ce(rng, surds=True)
            if x.conj().conj() != x or (x * y).conj() != x.conj() * y.conj():
                return FAIL, "conjugation failed involution/homomorphism"
            if (x + y).conj() != x.conj() + y.conj():
                return FAIL, "conjugation failed additivity"
        return PASS, "involution and ring homomorphism on 500 random pairs"
    run("conj_involution_hom_500", "scalar_ring", "complex conjugation",
        "conj is an involutive ring homomorphism fixing the surds", conj_props)


# ---------------------------------------------------------------------------
# octonion core
# ---------------------------------------------------------------------------

def _octonion_checks(run, rng):
    gens = [OctCoord.generator(k) for k in range(8)]

    def bao_table():
        bad = []
        for a in range(8):
            for b in range(8):
                # independent expectation from the canonical triple table
                if a == 0 or b == 0:
                    want = gens[a if b == 0 else b]
                elif a == b:
                    want = -gens[0]
                else:
                    want = OctCoord.zero()
                    for k in range(1, 8):
                        s = EPS3.sign(a, b, k)
                        if s:
                            want = gens[k] if s > 0 else -gens[k]
                            break
                if gens[a] * gens[b] != want:
                    bad.append((a, b))
        if bad:
            return FAIL, "mismatching generator pairs: %s" % bad
        return PASS, "all 64 coordinate products match the triple table"
    run("bao_table_64", "octonion_core",
        'Eq. (bao): "multiplication is defined through generatrices"',
        "coordinate products agree with the triple structure constants",
        bao_table)

    def nonas2_table():
        bad = []
        for a in range(1, 8):
            for b in range(1, 8):
                want = SIGMA[0] if a == b else ZORN_ZERO
                if a != b:
                    for k in range(1, 8):
                        s = EPS3.sign(a, b, k)
                        if s:
                            want = SIGMA[k].scale(I_UNIT if s > 0 else -I_UNIT)
                            break
                if SIGMA[a] * SIGMA[b] != want:
                    bad.append((a, b))
        if bad:
            return FAIL, "mismatching star products: %s" % bad
        return PASS, "all 64 star products are delta + i*eps"
    run("nonas2_table_64", "octonion_core",
        "Eq. (nonas2) with the constants of Eq. (nonasalg)",
        "S^i * S^j = delta^{ij} + i eps^{ijk} S^k", nonas2_table)

    def homomorphism():
        bad = []
        for a in range(8):
            for b in range(8):
                lhs = coord_to_zorn(gens[a] * gens[b])
                rhs = coord_to_zorn(gens[a]) * coord_to_zorn(gens[b])
                if lhs != rhs:
                    bad.append((a, b))
        for _ in range(500):
            x, y = _rand_oct(rng), _rand_oct(rng)
            cx, cy = zorn_to_coord(x), zorn_to_coord(y)
            if coord_to_zorn(cx * cy) != x * y:
                return FAIL, "random homomorphism case failed"
        if bad:
            return FLAG, "generator pairs where the two tables disagree: %s" % bad
        return PASS, ("the coordinate table and the matrix star table "
                      "describe the same algebra: verified on all 64 "
                      "generator pairs and 500 random pairs under e^k -> -i S^k")
    run("bao_vs_nonasalg_same_algebra", "octonion_core",
        "Eq. (bao) vs Eq. (nonasalg) conventions",
        "e^k -> -i Sigma^k is an algebra isomorphism onto the matrix span",
        homomorphism)

    def roundtrip():
        for _ in range(200):
            u = _rand_oct(rng)
            if coord_to_zorn(zorn_to_coord(u)) != u:
                return FAIL, "round trip moved a random octonionic matrix"
        for k in range(8):
            if zorn_to_coord(coord_to_zorn(gens[k])) != gens[k]:
                return FAIL, "round trip moved generator %d" % k
        try:
            zorn_to_coord(Zorn(ZERO, Mat2(ONE, ZERO, ZERO, ZERO), MAT_ZERO, ZERO))
        except Exception as exc:
            return PASS, "round trips hold; non-traceless block rejected (%s)" % exc
        return FAIL, "non-octonionic matrix was not rejected"
    run("coord_zorn_roundtrip", "octonion_core",
        "Sigma^k = i tilde-Sigma^k correspondence",
        "mutually inverse on the octonionic subspace; error outside it",
        roundtrip)

    def conj_sigma():
        for k in range(8):
            if SIGMA[k].conj() != SIGMA[k]:
                return FAIL, "Sigma^%d is not Hermitian" % k
        for k in range(1, 8):
            tilde = SIGMA[k].scale(-I_UNIT)  # tilde-Sigma^k = -i Sigma^k
            if tilde.conj() != -tilde:
                return FAIL, "tilde-Sigma^%d is not anti-Hermitian" % k
        return PASS, "Sigma Hermitian, tilde-Sigma anti-Hermitian, all k"
    run("sigma_hermiticity", "octonion_core",
        '"are Hermitian" / "are anti-hermitian"',
        "(S^k)+ = S^k and (tilde S^k)+ = -tilde S^k", conj_sigma)

    def conj_antihom():
        for _ in range(1000):
            u, v = _rand_zorn(rng), _rand_zorn(rng)
            if (u * v).conj() != v.conj() * u.conj():
                return FAIL, "conjugation anti-homomorphism failed"
        return PASS, "(u*v)+ = v+ * u+ on 1000 random pairs, exact"
    run("conj_antihomomorphism_1000", "octonion_core",
        "Hermitian conjugation on the abstract matrix algebra",
        "(u*v)+ = v+ * u+", conj_antihom)

    def alternativity():
        for _ in range(1000):
            u, v = _rand_oct(rng), _rand_oct(rng)
            if not associator(u, u, v).is_zero() or not associator(u, v, v).is_zero():
                return FAIL, "alternativity failed on a random pair"
        return PASS, "{u,u,v} = {u,v,v} = 0 on 1000 random octonionic pairs"
    run("alternativity_1000", "octonion_core", "alternative algebra property",
        "{u,u,v} = 0 and {u,v,v} = 0", alternativity)

    def antisymmetry():
        for n in range(1000):
            u, v, w = _rand_oct(rng), _rand_oct(rng), _rand_oct(rng)
            s = associator(u, v, w)
            # alternate the two adjacent swaps across the 1000 cases
            other = associator(v, u, w) if n % 2 == 0 else associator(u, w, v)
            if s != -other:
                return FAIL, "associator antisymmetry failed"
        return PASS, "{u,v,w} antisymmetric under adjacent swaps, 1000 triples"
    run("associator_antisymmetry_1000", "octonion_core",
        "total antisymmetry of the associator",
        "{u,v,w} = -{v,u,w} = -{u,w,v}", antisymmetry)

    def closure():
        for a in range(8):
            for b in range(8):
                if not (SIGMA[a] * SIGMA[b]).octonionic():
                    return FAIL, "generator product left the octonion span"
        for _ in range(1000):
            u, v = _rand_oct(rng), _rand_oct(rng)
            if not (u * v).octonionic():
                return FAIL, "random octonionic product left the span"
        return PASS, "traceless blocks preserved: 64 generator + 1000 random products"
    run("octonionic_closure_1000", "octonion_core",
        "octonion span inside the abstract matrix algebra",
        "star product of octonionic elements is octonionic", closure)

    def trace_sym():
        for _ in range(500):
            u, v = _rand_zorn(rng), _rand_zorn(rng)
            if u.star_trace(v) != v.star_trace(u):
                return FAIL, "trace symmetry failed"
        return PASS, "tr(u*v) = tr(v*u) on 500 random pairs"
    run("trace_symmetry_500", "octonion_core", "block trace of the star product",
        "tr(u*v) = tr(v*u)", trace_sym)

    def eps4_supports():
        got = eps4().canonical()
        want_supports = sorted(idx for idx, _ in EPS4_CANONICAL)
        if sorted(idx for idx, _ in got) != want_supports:
            return FAIL, "computed quadruples: %s" % (got,)
        if got != sorted(EPS4_CANONICAL):
            return FAIL, "computed signs: %s" % (got,)
        return PASS, "7 canonical quadruples: %s" % (
            ", ".join("%s:%+d" % ("".join(map(str, i)), s) for i, s in got))
    run("eps4_supports_7", "octonion_core",
        'Eq. (ind): "equal to the unit for the following expressions"',
        "exactly the seven listed index sets appear", eps4_supports)

    def eps4_listed_signs():
        t = eps4()
        rows = []
        bad = []
        for order in EPS4_LISTED_ORDERS:
            s = t.sign(*order)
            rows.append("%s:%+d" % ("".join(map(str, order)), s))
            if s != 1:
                bad.append(order)
        msg = ", ".join(rows)
        if bad:
            return FLAG, ("computed signs in the listed index order: %s; "
                          "the published +1 value fails for %s (the generator "
                          "table itself forces that sign)" %
                          (msg, ",".join("".join(map(str, b)) for b in bad)))
        return PASS, msg
    run("eps4_listed_signs", "octonion_core",
        "Eq. (ind) quadruples, printed order, all claimed +1",
        "eps = +1 for 1247, 1265, 2345, 2376, 3146, 3157, 4567",
        eps4_listed_signs)

    def assoc_343():
        t = eps4()
        two = CoeffElem.from_rational(2)
        for i in range(1, 8):
            for j in range(1, 8):
                for k in range(1, 8):
                    want = OctCoord.zero()
                    for l in range(1, 8):
                        s = t.sign(i, j, k, l)
                        if s:
                            want = gens[l].scale(two if s > 0 else -two)
                            break
                    if associator(gens[i], gens[j], gens[k]) != want:
                        return FAIL, "triple (%d,%d,%d) broke" % (i, j, k)
        return PASS, "{e^i,e^j,e^k} = 2 eps^{ijkl} e^l for all 343 triples"
    run("associator_eps4_343", "octonion_core",
        'Eq. (asst): "{e^i,e^j,e^k} = 2 eps^{ijkl} e^l"',
        "associator law on every generator triple", assoc_343)

    def quad_all():
        t = eps4()
        for a in range(8):
            for b in range(8):
                for c in range(8):
                    for d in range(8):
                        want = 0 if 0 in (a, b, c, d) else 8 * t.sign(a, b, c, d)
                        if quad_trace(a, b, c, d) != want:
                            return FAIL, "quadruple (%d,%d,%d,%d) broke" % (a, b, c, d)
        return PASS, "tr{S^a,S^b,S^c,S^d} = 8 eps^{abcd} on all 4096 quadruples"
    run("quad_trace_4096", "octonion_core",
        'Eq. (ass4): "Three sigma matrices trace equals zero"',
        "four-element trace equals 8 eps on 0..7^4, exact", quad_all)

    def split_consistency():
        for _ in range(100):
            u, v, w = _rand_oct(rng), _rand_oct(rng), _rand_oct(rng)
            sa, sn = split3(u, v, w)
            if sa + sn != (u * v) * w:
                return FAIL, "split halves do not sum to the left product"
            if sn + sn != associator(u, v, w):
                return FAIL, "non-associative half is not half the associator"
        return PASS, "assoc+nonassoc = (uv)w and 2*nonassoc = {u,v,w}, 100 triples"
    run("split3_consistency_100", "octonion_core",
        '"decomposed to two expressions, associative and non-associative"',
        "operational split identities", split_consistency)

    def norm_examples():
        n_u0 = norm_sq(U0_DIRECTION).as_rational()
        z = norm_sq(ZORN_ZERO).as_rational()
        if n_u0 != 4 or z != 0:
            return FAIL, "norm"" values %s, %s" % (n_u0, z)
        return PASS, "norm^2(0, i sigma^3; 0, I) = 4; norm^2(0) = 0"
    run("norm_sq_examples", "octonion_core",
        '"it is easy to ensure" the squared norm equals 4',
        "vacuum direction has squared norm 4", norm_examples)


# ---------------------------------------------------------------------------
# fermion sector
# ---------------------------------------------------------------------------

_STMT_CLAIMS = {
    1: {("nubar_L", "e_L"): ("32/257", "0"), ("ebar_L", "nu_L"): ("32/257", "0")},
    2: {("nubar_L", "e_L"): ("0", "-32/257"), ("ebar_L", "nu_L"): ("0", "32/257")},
    3: {("nubar_L", "nu_L"): ("32/257", "0"), ("ebar_L", "e_L"): ("-32/257", "0")},
}

_MAINCL_CLAIMS = {
    5: {("nubar_L", "e_L"): ("0", "40/257"), ("ebar_L", "nu_L"): ("0", "-40/257")},
    6: {("ebar_L", "e_L"): ("48/257", "0"), ("nubar_L", "e_L"): ("40/257", "0"),
        ("ebar_L", "nu_L"): ("40/257", "0")},
}


def _fermion_checks(run, cfg: VerifyConfig):
    def doublet_shape():
        L = doublet_matrix()
        Lb = doublet_bar_matrix()
        if not (L.lam.is_zero() and L.xi.is_zero()
                and Lb.lam.is_zero() and Lb.xi.is_zero()):
            return FAIL, "diagonal scalars are not zero"
        if L.conj() != Lb:
            return FAIL, "bar matrix is not the token-barred conjugate"
        want = CoeffElem.from_gauss(GaussQ(0, 2)) * C0 * S2
        got = L.a.e[1].terms.get((NU_L,), ZERO)
        if got != want:
            return FAIL, "entry coefficient %s, wanted %s" % (got, want)
        return PASS, ("zero diagonal; Lbar = conj(L) with barred tokens; "
                      "nu coefficient at (1,2) = 2i·c0·s2")
    run("doublet_structure", "fermion_symbolic",
        'Eq. (stmt): "L = (c_0/sqrt 2)(...)" and "Lbar = L+ gamma^0"',
        "doublet blocks as printed", doublet_shape)

    def oracle_16():
        for a in range(8):
            for order in ("left", "right"):
                if current_trace(a, order) != oracle_current_trace(a, order):
                    return FAIL, "a=%d order=%s disagrees with the oracle" % (a, order)
        return PASS, "engine equals structure-constant oracle on all 16 traces"
    run("current_trace_oracle_16", "fermion_symbolic",
        "independent expansion over the matrix basis",
        "blockwise engine = brute-force oracle, exact", oracle_16)

    def goldens():
        for a in range(8):
            want = golden_current_combo(a)
            for order in ("left", "right"):
                if current_trace(a, order) != want:
                    return FAIL, "a=%d order=%s moved off the frozen value" % (a, order)
        return PASS, "all 16 traces equal the committed golden values"
    run("current_trace_goldens", "fermion_symbolic",
        "frozen oracle output",
        "current traces stable against committed values", goldens)

    for a, claim in sorted(_STMT_CLAIMS.items()):
        def stmt_check(a=a, claim=claim):
            got = current_trace(a, "left")
            want = _combo(claim)
            if got != want:
                return FLAG, "computed %s" % got
            return PASS, str(got)
        run("stmt_trace_a%d" % a, "fermion_symbolic",
            'Eq. (stmt): "It is easy to ensure then"',
            str(_combo(claim)), stmt_check)

    def stmt_a0():
        got = current_trace(0, "left")
        want = _combo({("nubar_L", "nu_L"): ("1", "0"),
                       ("ebar_L", "e_L"): ("1", "0")})
        return (PASS if got == want else FLAG), str(got)
    run("stmt_trace_a0_reduced", "fermion_symbolic",
        '"we come to" tr Lbar*L after substituting the constants',
        "nubar nu + ebar e", stmt_a0)

    def order_indep():
        diffs = [a for a in range(8)
                 if current_trace(a, "left") != current_trace(a, "right")]
        low = [a for a in diffs if a <= 3]
        if low:
            return FAIL, "order dependence at a in %s" % low
        note = ("orders agree for a = 0..3 as claimed; in fact they agree "
                "for every a (the trace form is associative here)")
        return PASS, note if not diffs else "orders differ for a in %s" % diffs
    run("order_independence_a0_3", "fermion_symbolic",
        '"the order of multiplication does not matter"',
        "left and right pairings agree for a = 0..3", order_indep)

    def sigma7_zero():
        l, r = current_trace(7, "left"), current_trace(7, "right")
        ok = l.is_zero() and r.is_zero()
        return (PASS if ok else FLAG), "left = %s, right = %s" % (l, r)
    run("sigma7_current_zero", "fermion_symbolic",
        '"g_7 A^{mu(7)} Lbar*gamma Sigma^7*L = 0"',
        "the E-field current vanishes identically", sigma7_zero)

    def a4_assoc_only():
        sp = current_split(4)
        ok = sp.nonassoc.is_zero() and not sp.assoc.is_zero()
        return (PASS if ok else FLAG), ("nonassoc half = %s; assoc half = %s"
                                        % (sp.nonassoc, sp.assoc))
    run("a4_pure_associative", "fermion_symbolic",
        '"The field A_mu^4 has only associative part"',
        "operational non-associative half of the a=4 current is zero",
        a4_assoc_only)

    def kappa():
        sp = current_split(4)
        k1 = (sp.assoc.coeff(NU_L_BAR, NU_L) / C0_SQ).as_rational()
        k2 = (-sp.assoc.coeff(E_L_BAR, E_L) / C0_SQ).as_rational()
        stable = (k1, k2) == (KAPPA_1, KAPPA_2)
        near = abs(abs(k1) - 8) <= mpq(1, 2) and abs(abs(k2) - 7) <= mpq(1, 2)
        txt = ("kappa1 = %s (|.| ~ %.4f), kappa2 = %s (|.| ~ %.4f)"
               % (fmt_q(k1), float(abs(k1)), fmt_q(k2), float(abs(k2))))
        if not stable:
            return FAIL, txt + "; moved off the committed exact values"
        return (PASS if near else FLAG), txt
    run("p4_kappa_values", "fermion_symbolic",
        '"kappa_1 and kappa_2 are approximately equal to eight and seven"',
        "|kappa1| ~ 8 and |kappa2| ~ 7 (exact values committed)", kappa)

    for a, claim in sorted(_MAINCL_CLAIMS.items()):
        def maincl_value(a=a, claim=claim):
            got = current_trace(a, "left")
            want = _combo(claim)
            return (PASS if got == want else FLAG), str(got)
        run("maincl_a%d_current_value" % a, "fermion_symbolic",
            "Eq. (maincl) coefficient list",
            str(_combo(claim)), maincl_value)

        def maincl_label(a=a):
            sp = current_split(a)
            if sp.nonassoc.is_zero():
                return FLAG, ("operational nonassoc half is 0; the published "
                              "combination equals the FULL trace (label refers "
                              "to the new-field terms, not the 1/2(L-R) split)")
            return PASS, str(sp.nonassoc)
        run("maincl_a%d_nas_label" % a, "fermion_symbolic",
            'Eq. (maincl) "(...)_{nas.}" labelling',
            "the listed combination is the non-associative half", maincl_label)

    def hermiticity():
        for a in range(8):
            t = current_trace(a, "left")
            lhs = t.coeff(E_L_BAR, NU_L)
            rhs = t.coeff(NU_L_BAR, E_L).conj()
            if lhs != rhs:
                return FAIL, "a=%d: ebar-nu coeff is not the conjugate" % a
        return PASS, "coeff(ebar nu) = conj(coeff(nubar e)) for all a"
    run("hermiticity_pattern", "fermion_symbolic",
        "reality of the current Lagrangian",
        "cross-coefficient conjugation pattern", hermiticity)

    def linearity():
        base = current_trace(6, "left")
        for t in (2, 3):
            ce_t = CoeffElem.from_rational(t)
            scaled = current_trace(
                6, "left", doublet=doublet_matrix(e_scale=ce_t))
            for bil, coeff in base.terms.items():
                want = coeff * t if bil.ket == E_L else coeff
                if scaled.terms.get(bil, ZERO) != want:
                    return FAIL, "t=%d scaling failed on %s" % (t, bil)
        return PASS, "ket-side e coefficients scale by t = 2, 3 exactly"
    run("current_linearity_scaling", "fermion_symbolic",
        "linearity of the trace in the doublet components",
        "rescaling the e component rescales the matching bilinears", linearity)

    def yukawa():
        y = yukawa_matching(cfg.h)
        txt = ("tr(Lbar*U0) ebar coefficient = %s; htilde*coeff = %s, "
               "target 2h = %s" % (y["coeff_bar"], y["lhs"], y["rhs"]))
        if y["stray_terms"]:
            return FAIL, "unexpected extra fermion terms in the vacuum sandwich"
        return (PASS if y["holds"] else FLAG), txt
    run("yukawa_identity", "fermion_symbolic",
        'Eq. (vst0): "is attained if tilde-h c_0/sqrt 2 = h"',
        "sqrt(2) h m/sqrt(f) (ebar_L e_R + ebar_R e_L), exact in the surd ring",
        yukawa)

    def matching():
        cs = cfg.charges()
        checks = [cs.q[0] * C0_SQ == -cfg.g1]
        checks += [cs.q[k] * C0_SQ == cfg.g for k in (1, 2, 3)]
        checks += [cs.q[k] * C0_SQ == gk for k, gk in
                   ((4, cfg.g4), (5, cfg.g5), (6, cfg.g6), (7, cfg.g7))]
        # htilde * c0 / sqrt2 = htilde * c0 * s2 / 2 must equal h exactly
        checks.append(cs.htilde * C0 * S2 / 2 ==
                      CoeffElem.from_rational(cfg.h))
        if not all(checks):
            return FAIL, "a matching identity failed"
        return PASS, ("q0 c0^2 = -g1, qk c0^2 = g (k=1..3), qk c0^2 = gk "
                      "(k=4..7), htilde c0/sqrt2 = h; all exact")
    run("coupling_match_identities", "fermion_symbolic",
        '"is is achieved provided", "is guaranteed when", "is attained if"',
        "all charge-coupling identities hold in the surd ring", matching)

    def quartic():
        cs = cfg.charges()
        rows = quartic_contract(cs)
        if any(v == 0 for v in (cfg.g, cfg.g4, cfg.g5, cfg.g6, cfg.g7)):
            return PASS, "%d entries (zero couplings drop their quadruples)" % len(rows)
        if len(rows) != 7:
            return FAIL, "expected 7 entries for generic charges, got %d" % len(rows)
        unit = coupling_match(1, 1, 1, 1, 1, 1, 1)
        unit_rows = {tuple(r["indices"]): r["coefficient"]
                     for r in quartic_contract(ChargeSet(
                         q=tuple(mpq(1) for _ in range(8)), g=mpq(1), g1=mpq(1),
                         g4=mpq(1), g5=mpq(1), g6=mpq(1), g7=mpq(1), h=mpq(1),
                         htilde=unit.htilde))}
        if unit_rows.get((1, 2, 4, 7)) != 1:
            return FAIL, "unit-charge coefficient of 1247 is not +1"
        return PASS, "7 canonical entries; unit-charge 1247 coefficient +1"
    run("quartic_contract_7", "fermion_symbolic",
        "four-field contraction over the quadruple table",
        "one signed entry per canonical quadruple", quartic)


# ---------------------------------------------------------------------------
# field theory
# ---------------------------------------------------------------------------

def _field_checks(run, rng, cfg: VerifyConfig):
    p = cfg.params()
    cs = cfg.charges()

    def vacuum_norm():
        cases = [(p.m, p.f), (mpq(1), mpq(2)), (mpq(3), mpq(5))]
        for m, f in cases:
            pp = FieldParams(m, f)
            if vacuum_norm_sq_exact(pp) != 2 * m * m / f:
                return FAIL, "norm broke at m=%s f=%s" % (m, f)
        return PASS, "norm^2(Psi0) = 2m^2/f exactly for %s" % (
            ", ".join("(%s,%s)" % (fmt_q(m), fmt_q(f)) for m, f in cases))
    run("vacuum_norm_exact", "field_theory",
        'Eq. (nkal): "choose the calibration"; |Psi_0|^2 = 2m^2/f',
        "exact symbolic vacuum norm", vacuum_norm)

    def potential_min():
        n = 2 * p.m * p.m / p.f
        v = -p.m * p.m * n + p.f / 4 * n * n
        if v != -(p.m ** 4) / p.f:
            return FAIL, "stationary value is %s" % fmt_q(v)
        # second derivative in N is f/2 > 0; stationarity: dV/dN = -m^2 + f N/2
        if -p.m * p.m + p.f * n / 2 != 0:
            return FAIL, "vacuum norm is not a stationary point"
        vn = potential_value(vacuum_state(p), p)
        if abs(vn - float(v)) > 1e-10 * max(1.0, abs(float(v))):
            return FAIL, "numeric potential %r at the vacuum" % vn
        return PASS, "V(Psi0) = %s exactly; unique stationary N = 2m^2/f" % fmt_q(v)
    run("potential_minimum", "field_theory",
        'Eq. (potx) and "gives a stable equilibrium"',
        "V = -m^4/f at N = 2m^2/f, second derivative f/2 > 0", potential_min)

    def radial():
        for m, f in ((mpq(1), mpq(2)), (mpq(2), mpq(1)), (mpq(3), mpq(5))):
            pp = FieldParams(m, f)
            r2 = radial_minimize(pp, 1e-9)
            if abs(r2 - float(2 * m * m / f)) >= 1e-9:
                return FAIL, "m=%s f=%s gave %r" % (m, f, r2)
        return PASS, "numeric minimiser within 1e-9 of 2m^2/f for three cases"
    run("radial_minimize_cases", "field_theory",
        "numeric confirmation of the stable equilibrium",
        "r*^2 = 2m^2/f to 1e-9", radial)

    def higgs_center():
        h0 = higgs_param(0.0, [0.0] * 7, p)
        v0 = vacuum_state(p)
        d = h0 - v0
        worst = max(abs(x) for x in
                    [d.lam, d.xi] + list(d.a.e) + list(d.b.e))
        n = norm_sq(h0).real
        if worst > 1e-12 or abs(n - float(2 * p.m * p.m / p.f)) > 1e-10:
            return FAIL, "center offset %.3e, norm %r" % (worst, n)
        # linearity in sigma: exact two-point finite difference
        h1 = higgs_param(1.0, [0.0] * 7, p)
        h2 = higgs_param(2.0, [0.0] * 7, p)
        lin = (h2 - h1) - (h1 - h0)
        worst_lin = max(abs(x) for x in
                        [lin.lam, lin.xi] + list(lin.a.e) + list(lin.b.e))
        if worst_lin > 1e-12:
            return FAIL, "sigma dependence is not linear (%.3e)" % worst_lin
        return PASS, ("sigma = 0, theta = 0 reproduces the vacuum; "
                      "output linear in sigma (offset %.1e)" % worst)
    run("higgs_parametrisation", "field_theory",
        'Eq. (higs): "near the minimum of potential energy"',
        "parametrisation centred at the vacuum, linear in sigma", higgs_center)

    def mass_sym():
        m = mass_matrix(cs, p)
        if not m.is_symmetric():
            return FAIL, "mass matrix is not symmetric"
        neg = ChargeSet(q=tuple(-x for x in cs.q), g=cs.g, g1=cs.g1, g4=cs.g4,
                        g5=cs.g5, g6=cs.g6, g7=cs.g7, h=cs.h, htilde=cs.htilde)
        if mass_matrix(neg, p) != m:
            return FAIL, "global charge sign flip changed the matrix"
        return PASS, "exactly symmetric; invariant under q -> -q"
    run("mass_matrix_symmetry", "field_theory",
        "Eq. (vst2) quadratic form in the gauge fields",
        "symmetric by construction; sign-flip invariant", mass_sym)

    def mass_golden():
        unit = ChargeSet(q=tuple(mpq(1) for _ in range(8)), g=mpq(1),
                         g1=mpq(1), g4=mpq(1), g5=mpq(1), g6=mpq(1),
                         g7=mpq(1), h=mpq(1), htilde=cs.htilde)
        got = mass_matrix(unit, FieldParams(1, 1))
        if got != golden_mass_matrix():
            return FAIL, "matrix moved off the committed oracle output:\n%s" % got
        diag = mass_pairing_diagnostics(0, 3)
        return PASS, ("unit-charge matrix matches the committed value; "
                      "pairing diagnostics (0,3): %s" % diag)
    run("mass_matrix_golden", "field_theory",
        "direct block expansion of the vacuum sandwich",
        "golden 8x8 at unit charges, exact", mass_golden)

    def photon_mode():
        m = mass_matrix(cs, p)
        det = m[0][0] * m[3][3] - m[0][3] * m[3][0]
        if det != 0:
            return FAIL, "the {0,3} sub-block has determinant %s" % fmt_q(det)
        res = spectrum(m)
        if cs.q[0] != 0 or cs.q[3] != 0:
            if res.zero_modes(1e-12) < 1:
                return FAIL, "no zero eigenvalue within 1e-12"
        return PASS, ("{0,3} block determinant 0 exactly; zero modes: %d; "
                      "eigenvalues %s" %
                      (res.zero_modes(1e-12),
                       ["%.6g" % x for x in res.eigenvalues]))
    run("photon_direction_singular", "field_theory",
        'Eq. (glt) cross term "-g g^{(1)} m^2/f A^3 B"',
        "massless direction in the {0,3} sector", photon_mode)

    def spectrum_recon():
        m = mass_matrix(cs, p)
        res = spectrum(m)
        if res.reconstruction_error >= 1e-12 * res.scale:
            return FAIL, "reconstruction error %.3e" % res.reconstruction_error
        rows = [[0.0] * 8 for _ in range(8)]
        for i in range(8):
            for j in range(i, 8):
                rows[i][j] = rows[j][i] = rng.uniform(-2, 2)
        res2 = spectrum(rows)
        if res2.reconstruction_error >= 1e-12 * res2.scale:
            return FAIL, "random-matrix reconstruction error %.3e" % res2.reconstruction_error
        if res2.eigenvalues != sorted(res2.eigenvalues):
            return FAIL, "eigenvalues not sorted"
        return PASS, ("Q Lambda Q^T reconstruction below 1e-12 of scale "
                      "(mass matrix and a seeded random symmetric matrix)")
    run("spectrum_reconstruction", "field_theory",
        "deterministic cyclic Jacobi eigensolver",
        "reconstruction error < 1e-12 of matrix scale", spectrum_recon)

    def mass_claims():
        m = mass_matrix(cs, p)
        m2f = p.m * p.m / p.f
        out = []
        status = PASS
        # C and E: published coefficients g_k^2 m^2/(2f) on the diagonal
        for name, idx, gk in (("C", 4, cfg.g4), ("E", 7, cfg.g7)):
            claimed = gk * gk * m2f / 2
            computed = m[idx][idx]
            tag = "=" if computed == claimed else "≠"
            if computed != claimed:
                status = FLAG
            out.append("%s: computed %s %s claimed %s" %
                       (name, fmt_q(computed), tag, fmt_q(claimed)))
        # D: published g_a^2 m^2/f on Dbar D
        ga2 = cfg.g5 * cfg.g5 + cfg.g6 * cfg.g6
        claimed_d = ga2 * m2f
        if cfg.g5 != 0 and cfg.g6 != 0:
            rho5 = m[5][5] / (cfg.g5 * cfg.g5)
            rho6 = m[6][6] / (cfg.g6 * cfg.g6)
            if rho5 != rho6:
                return FAIL, "D sector is not proportional to the couplings"
            computed_d = rho5 * ga2
        elif cfg.g5 == 0 and cfg.g6 == 0:
            computed_d = mpq(0)
        else:
            gk = cfg.g5 if cfg.g5 != 0 else cfg.g6
            idx = 5 if cfg.g5 != 0 else 6
            computed_d = m[idx][idx] / (gk * gk) * ga2
        tag = "=" if computed_d == claimed_d else "≠"
        if computed_d != claimed_d:
            status = FLAG
        out.append("D: computed %s %s claimed %s" %
                   (fmt_q(computed_d), tag, fmt_q(claimed_d)))
        if status == FLAG:
            out.append("(the matched charges carry 1/c0^4 = (257/32)^2 that "
                       "the published coefficients drop)")
        return status, "; ".join(out)
    run("l0d_mass_coefficients", "field_theory",
        'Eq. (l0d): "additional free part" mass coefficients',
        "D: g_a^2 m^2/f; C: g_4^2 m^2/(2f); E: g_7^2 m^2/(2f)", mass_claims)

    def boson_maps():
        safe = cs if (cs.g5 != 0 and cs.g6 != 0) else coupling_match(
            1, 1, 1, 1, 1, 1, 1)
        for _ in range(100):
            theta = rng.uniform(0.2, 1.35)
            fields = {"A%d" % k: complex(rng.uniform(-1, 1), rng.uniform(-1, 1))
                      for k in range(8)}
            named = boson_basis_change(fields, theta, safe)
            back = boson_basis_inverse(named, theta, safe)
            worst = max(abs(back[k] - fields[k]) for k in fields)
            if worst >= 1e-14 * 8:
                return FAIL, "round trip error %.3e" % worst
        fields = {"A%d" % k: 0j for k in range(8)}
        fields["A3"] = 0.75 + 0j
        fields["A0"] = -0.25 + 0j
        named0 = boson_basis_change(fields, 0.0, safe)
        if named0["Z0"] != fields["A3"] or named0["A_em"] != fields["A0"]:
            return FAIL, "theta = 0 does not reduce to Z0 = A3, A_em = B"
        a5zero = {"A%d" % k: 0j for k in range(8)}
        a5zero["A6"] = 1.0 + 0j
        named5 = boson_basis_change(a5zero, 0.3, safe)
        if abs(named5["D"] - named5["Dbar"]) > 1e-15:
            return FAIL, "A5 = 0 does not give D = Dbar"
        return PASS, ("100 random round trips exact to 1e-14; theta = 0 "
                      "reduces per the neutral redefinition; A5 = 0 gives "
                      "D = Dbar")
    run("boson_basis_change", "field_theory",
        "Eqs. (zb), (wb) and the D/Dbar definitions",
        "invertible field redefinitions, round-trip identity", boson_maps)

    def termtable():
        terms = lagrangian_terms(cs, p)
        classes = {t.klass for t in terms}
        want_classes = {"kinetic", "constant"}
        if cfg.g != 0:
            want_classes.add("mass")
        if cfg.g != 0 or cfg.g1 != 0 or cfg.g4 != 0 or cs.ga != 0.0:
            want_classes.add("current")
        if cfg.h != 0:
            want_classes.add("yukawa")
        if quartic_contract(cs):
            want_classes.add("quartic")
        if classes != want_classes:
            return FAIL, "term classes %s, expected %s" % (
                sorted(classes), sorted(want_classes))
        nas = [t for t in terms if t.assoc == "nonassociative"]
        if cfg.g5 != 0 or cfg.g6 != 0:
            d_rows = {(t.fields, t.bilinear, t.coeff_text) for t in nas
                      if t.klass == "current"}
            want = {(("D",), "nubar_L⊗e_L", "-5/4·ga"),
                    (("Dbar",), "ebar_L⊗nu_L", "-5/4·ga"),
                    (("D+Dbar",), "ebar_L⊗e_L", "-3/4·ga")}
            if d_rows != want:
                return FAIL, "charged-current rows: %s" % d_rows
        yuk = [t for t in terms if t.klass == "yukawa"]
        if cfg.h != 0:
            if len(yuk) != 1 or yuk[0].bilinear != "ebar_L⊗e_R + ebar_R⊗e_L" \
                    or not yuk[0].coeff_text.startswith("sqrt(2)·"):
                return FAIL, "yukawa row malformed: %s" % yuk
        const = [t for t in terms if t.klass == "constant"]
        if len(const) != 1 or const[0].coeff_value != float(p.m ** 4 / p.f):
            return FAIL, "constant term missing or wrong"
        return PASS, ("%d terms; associative/non-associative split present; "
                      "D/Dbar rewriting applied to the charged currents"
                      % len(terms))
    run("lagrangian_term_table", "field_theory",
        "Eq. (plna) with the rewriting of Eq. (db) -> Eq. (ld)",
        "structural term table complete and partitioned", termtable)

    def termtable_sm():
        terms = lagrangian_terms(cs, p)
        rows = {(t.fields, t.bilinear): as_mpq(t.coeff_text)
                for t in terms if t.klass == "current"
                and t.assoc == "associative"
                and t.fields and t.fields[0] in
                ("B", "A3", "A1-i·A2", "A1+i·A2")}
        want = {(("B",), "nubar_L⊗nu_L"): cfg.g1 / 2,
                (("B",), "ebar_L⊗e_L"): cfg.g1 / 2,
                (("B",), "ebar_R⊗e_R"): cfg.g1,
                (("A3",), "ebar_L⊗e_L"): cfg.g / 2,
                (("A3",), "nubar_L⊗nu_L"): -cfg.g / 2,
                (("A1-i·A2",), "nubar_L⊗e_L"): -cfg.g / 2,
                (("A1+i·A2",), "ebar_L⊗nu_L"): -cfg.g / 2}
        want = {k: v for k, v in want.items() if v != 0}
        if rows != want:
            return FAIL, "electroweak sector rows: %s" % rows
        mass_rows = {t.fields: as_mpq(t.coeff_text) for t in terms
                     if t.klass == "mass"}
        m2f = p.m * p.m / p.f
        want_mass = {("A(a)", "A(a)"): cfg.g * cfg.g * m2f / 2,
                     ("A3", "B"): -cfg.g * cfg.g1 * m2f}
        want_mass = {k: v for k, v in want_mass.items() if v != 0}
        if mass_rows != want_mass:
            return FAIL, "mass rows: %s" % mass_rows
        return PASS, "a = 0..3 sector coincides with the electroweak table"
    run("termtable_electroweak_sector", "field_theory",
        'Eq. (glt): "In the standard Weinberg-Salam"',
        "term-for-term match under the coupling dictionary", termtable_sm)

    def termtable_zero():
        zero = coupling_match(0, 0, 0, 0, 0, 0, 0)
        terms = lagrangian_terms(zero, p)
        classes = sorted({t.klass for t in terms})
        if classes != ["constant", "kinetic"]:
            return FAIL, "zero-coupling survivors: %s" % classes
        return PASS, "only kinetic terms and the m^4/f constant survive"
    run("termtable_zero_charges", "field_theory",
        "coupling dependence of the term table",
        "zero couplings leave kinetic + constant terms", termtable_zero)


# ---------------------------------------------------------------------------
# expression language
# ---------------------------------------------------------------------------

def _cli_checks(run):
    from .evaluator import eval_source
    from .expr import ExprError, parse, render_source

    def corpus():
        for src in EXPR_CORPUS:
            ast1 = parse(src)
            text1 = render_source(ast1)
            ast2 = parse(text1)
            text2 = render_source(ast2)
            if text1 != text2 or ast1 != ast2:
                return FAIL, "round trip moved %r -> %r -> %r" % (src, text1, text2)
            v1 = eval_source(src).render()
            v2 = eval_source(src).render()
            if v1 != v2:
                return FAIL, "evaluation of %r is not deterministic" % src
        return PASS, "%d expressions parse, evaluate and round-trip byte-stably" \
            % len(EXPR_CORPUS)
    run("parser_corpus_roundtrip", "cli", "golden expression corpus",
        "parse -> render -> parse is a fixed point", corpus)

    def chain_star():
        try:
            parse("S1*S2*S3")
        except ExprError as exc:
            if exc.code == "E_CHAIN_STAR":
                return PASS, "rejected with %s at %d:%d" % (exc.code, exc.line, exc.col)
            return FAIL, "wrong error code %s" % exc.code
        return FAIL, "chained star was accepted"
    run("chain_star_rejected", "cli", "syntactically non-associative star",
        "a*b*c is a parse error", chain_star)

    def eval_examples():
        cases = [("(S1*S2)", "i·S3"), ("norm2(Psi0(1,2))", "1"),
                 ("eps4(1,2,4,7)", "8"), ("(e1*e4)", "e5")]
        got = [(src, eval_source(src).render()) for src, _ in cases]
        bad = [(src, out, want) for (src, out), (_, want) in zip(got, cases)
               if out != want]
        if bad:
            return FAIL, "; ".join("%r -> %r (wanted %r)" % b for b in bad)
        return PASS, "; ".join("%s = %s" % g for g in got)
    run("eval_examples", "cli", "expression evaluation against the algebra",
        "S1*S2 = i·S3; norm2(Psi0(1,2)) = 1; eps4(1,2,4,7) = 8", eval_examples)
