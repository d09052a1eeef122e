import pytest
from gmpy2 import mpq

from octoweak.scalar_ring import C0, C0_SQ, CoeffElem, GaussQ, ONE, S2, ZERO
from octoweak.octonion_core import Zorn
from octoweak.fermion_symbolic import (Bilinear, BilinearCombo, E_L, E_L_BAR,
                                       E_R, FermionPoly, FermionSym, NU_L,
                                       NU_L_BAR, build_doublet,
                                       coupling_match, current_split,
                                       current_trace, decompose10,
                                       doublet_matrix, oracle_current_trace,
                                       quartic_contract, yukawa_matching,
                                       _basis10)
from octoweak.golden import KAPPA_1, KAPPA_2, golden_current_combo


def ce(re, im=0):
    return CoeffElem.from_gauss(GaussQ(mpq(re), mpq(im)))


class TestTokens:
    def test_no_right_handed_neutrino(self):
        with pytest.raises(ValueError):
            FermionSym("nu", "R")
        with pytest.raises(ValueError):
            FermionSym("mu", "L")

    def test_bar_involution(self):
        assert NU_L.bar() == NU_L_BAR
        assert NU_L_BAR.bar() == NU_L
        assert E_R.label == "e_R"
        assert E_L_BAR.label == "ebar_L"

    def test_bilinear_requires_bar_ket(self):
        with pytest.raises(ValueError):
            Bilinear(NU_L, E_L)
        assert Bilinear(NU_L_BAR, E_L).label == "nubar_L⊗e_L"


class TestFermionPoly:
    def test_commutative_product(self):
        p = FermionPoly.symbol(NU_L_BAR) * FermionPoly.symbol(E_L)
        q = FermionPoly.symbol(E_L) * FermionPoly.symbol(NU_L_BAR)
        assert p == q

    def test_conj_bars_tokens(self):
        p = FermionPoly.symbol(E_L, ce(0, 2))
        assert p.conj() == FermionPoly.symbol(E_L_BAR, ce(0, -2))

    def test_bilinear_extraction(self):
        p = FermionPoly.symbol(NU_L_BAR) * FermionPoly.symbol(E_L)
        combo = BilinearCombo.from_poly(p)
        assert combo.coeff(NU_L_BAR, E_L) == ONE
        with pytest.raises(ValueError):
            BilinearCombo.from_poly(FermionPoly.symbol(E_L))


class TestDoublet:
    def test_zero_diagonal(self):
        L, Lbar, right = build_doublet()
        assert L.lam.is_zero() and L.xi.is_zero()
        assert Lbar.lam.is_zero() and Lbar.xi.is_zero()
        assert right == E_R

    def test_bar_is_conjugate_with_barred_tokens(self):
        L, Lbar, _ = build_doublet()
        assert L.conj() == Lbar

    def test_nu_entry_coefficient(self):
        # top-right block, entry (1,2): (2i sigma^1 - 2 sigma^2) picks up
        # 2i - 2(-i) = 4i, times the c0/sqrt2 = c0 s2/2 prefactor
        L = doublet_matrix()
        got = L.a.e[1].terms.get((NU_L,), ZERO)
        assert got == ce(0, 2) * C0 * S2

    def test_y0_appears_only_with_e(self):
        L = doublet_matrix()
        for entry in L.a.e + L.b.e:
            for mono, coeff in entry.terms.items():
                if any(2 & m for m in coeff.terms):  # y0 bit set
                    assert mono == (E_L,)


class TestOracle:
    def test_basis_decomposition_roundtrip(self):
        basis = _basis10()
        for i, u in enumerate(basis):
            vec = decompose10(u)
            for j, x in enumerate(vec):
                want = ONE if i == j else ZERO
                assert x == want, (i, j)

    def test_random_matrix_decomposition(self, rng):
        from octoweak.octonion_core import Mat2
        def rm():
            return Mat2(*(ce(rng.randint(-3, 3), rng.randint(-3, 3))
                          for _ in range(4)))
        basis = _basis10()
        for _ in range(50):
            u = Zorn(ce(rng.randint(-3, 3)), rm(), rm(), ce(rng.randint(-3, 3)))
            vec = decompose10(u)
            rebuilt = None
            for x, b in zip(vec, basis):
                piece = b.scale(x)
                rebuilt = piece if rebuilt is None else rebuilt + piece
            assert rebuilt == u

    @pytest.mark.parametrize("a", range(8))
    @pytest.mark.parametrize("order", ["left", "right"])
    def test_engine_equals_oracle(self, a, order):
        assert current_trace(a, order) == oracle_current_trace(a, order)


class TestCurrentTraces:
    @pytest.mark.parametrize("a", range(8))
    def test_matches_golden(self, a):
        want = golden_current_combo(a)
        assert current_trace(a, "left") == want
        assert current_trace(a, "right") == want

    def test_stmt_identities(self):
        c2 = mpq(32, 257)
        t1 = current_trace(1, "left")
        assert t1.coeff(NU_L_BAR, E_L).as_rational() == c2
        assert t1.coeff(E_L_BAR, NU_L).as_rational() == c2
        t2 = current_trace(2, "left")
        assert t2.coeff(NU_L_BAR, E_L) == ce(0, -c2)
        assert t2.coeff(E_L_BAR, NU_L) == ce(0, c2)
        t3 = current_trace(3, "left")
        assert t3.coeff(NU_L_BAR, NU_L).as_rational() == c2
        assert t3.coeff(E_L_BAR, E_L).as_rational() == -c2

    def test_unit_trace_reduces_to_unit_coefficients(self):
        t0 = current_trace(0, "left")
        assert t0.coeff(NU_L_BAR, NU_L) == ONE
        assert t0.coeff(E_L_BAR, E_L) == ONE
        assert len(t0.terms) == 2

    def test_order_independence(self):
        for a in range(8):
            assert current_trace(a, "left") == current_trace(a, "right")

    def test_sigma7_zero(self):
        assert current_trace(7, "left").is_zero()
        assert current_trace(7, "right").is_zero()

    def test_split_halves(self):
        for a in (4, 5, 6, 7):
            sp = current_split(a)
            assert sp.nonassoc.is_zero()
            assert sp.assoc == sp.left == sp.right
            assert sp.associator_trace.is_zero()

    def test_kappa_values(self):
        sp = current_split(4)
        k1 = (sp.assoc.coeff(NU_L_BAR, NU_L) / C0_SQ).as_rational()
        k2 = (-sp.assoc.coeff(E_L_BAR, E_L) / C0_SQ).as_rational()
        assert (k1, k2) == (KAPPA_1, KAPPA_2)
        assert abs(abs(k1) - 8) < mpq(1, 2)
        assert abs(abs(k2) - 7) < mpq(1, 2)

    def test_hermiticity_pattern(self):
        for a in range(8):
            t = current_trace(a, "left")
            assert t.coeff(E_L_BAR, NU_L) == t.coeff(NU_L_BAR, E_L).conj()

    def test_linearity_in_components(self):
        base = current_trace(6, "left")
        for t in (2, 3):
            scaled = current_trace(6, "left",
                                   doublet=doublet_matrix(e_scale=ce(t)))
            for bil, coeff in base.terms.items():
                want = coeff * t if bil.ket == E_L else coeff
                assert scaled.terms.get(bil, ZERO) == want
        nu_scaled = current_trace(1, "left",
                                  doublet=doublet_matrix(nu_scale=ce(5)))
        assert nu_scaled.coeff(E_L_BAR, NU_L) == \
            current_trace(1, "left").coeff(E_L_BAR, NU_L) * 5

    def test_index_validation(self):
        with pytest.raises(IndexError):
            current_trace(8)
        with pytest.raises(ValueError):
            current_trace(1, "middle")


class TestCouplingMatch:
    def test_zero_couplings(self):
        cs = coupling_match(0, 0, 0, 0, 0, 0, 0)
        assert all(q == 0 for q in cs.q)

    def test_q0_normalisation(self):
        cs = coupling_match(0, mpq(32, 257), 0, 0, 0, 0, 0)
        assert cs.q[0] == -1

    def test_su2_charge(self):
        cs = coupling_match(mpq(13, 20), 0, 0, 0, 0, 0, 0)
        assert cs.q[1] == mpq(13, 20) * mpq(257, 32)
        assert cs.q[1] == cs.q[2] == cs.q[3]

    def test_matching_identities_exact(self):
        cs = coupling_match(mpq(2, 3), mpq(5, 7), mpq(1, 2), 1, 2, 3, 4)
        assert cs.q[0] * mpq(32, 257) == -mpq(5, 7)
        for k in (1, 2, 3):
            assert cs.q[k] * mpq(32, 257) == mpq(2, 3)
        for k, gk in ((4, 1), (5, 2), (6, 3), (7, 4)):
            assert cs.q[k] * mpq(32, 257) == gk
        # htilde * c0/sqrt2 == h in the surd ring
        assert cs.htilde * C0 * S2 * mpq(1, 2) == \
            CoeffElem.from_rational(mpq(1, 2))

    def test_theta(self):
        import math
        cs = coupling_match(1, 1, 0, 0, 0, 0, 0)
        assert abs(cs.theta - math.pi / 4) < 1e-15


class TestYukawa:
    def test_identity_holds_exactly(self):
        for h in (mpq(1), mpq(3, 7), mpq(-2)):
            y = yukawa_matching(h)
            assert y["holds"]
            assert not y["stray_terms"]

    def test_sandwich_coefficient(self):
        y = yukawa_matching(1)
        assert y["coeff_bar"] == C0 * S2
        assert y["coeff_ket"] == C0 * S2


class TestQuarticContract:
    def test_seven_generic_entries(self):
        cs = coupling_match(1, 1, 1, 1, 1, 1, 1)
        rows = quartic_contract(cs)
        assert len(rows) == 7
        assert all(r["lorentz"] == "eta(λδ)·eta(μν)" for r in rows)

    def test_unit_charges_1247(self):
        from octoweak.field_theory import ChargeSet
        cs = coupling_match(1, 1, 1, 1, 1, 1, 1)
        unit = ChargeSet(q=tuple(mpq(1) for _ in range(8)), g=mpq(1),
                         g1=mpq(1), g4=mpq(1), g5=mpq(1), g6=mpq(1),
                         g7=mpq(1), h=mpq(1), htilde=cs.htilde)
        rows = {tuple(r["indices"]): r["coefficient"]
                for r in quartic_contract(unit)}
        assert rows[(1, 2, 4, 7)] == 1
        assert rows[(4, 5, 6, 7)] == -1

    def test_zero_charge_drops_quadruples(self):
        cs = coupling_match(1, 1, 1, 0, 1, 1, 1)  # g4 = 0
        rows = quartic_contract(cs)
        assert all(4 not in r["indices"] for r in rows)
        assert len(rows) == 3  # quadruples avoiding index 4
