import pytest
from gmpy2 import mpq

from octoweak.scalar_ring import (C0, CoeffElem, GaussQ, GQ_I, ONE, S2, Y0,
                                  ZERO, coeff_arith, coeff_embed, gq_arith)


def gq(re, im=0):
    return GaussQ(mpq(re), mpq(im))


class TestGaussQ:
    def test_modulus_product(self):
        assert gq(1, 1) * gq(1, -1) == gq(2)

    def test_i_squared(self):
        assert gq(0, 1) * gq(0, 1) == gq(-1)

    def test_division_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            gq("3/2") / gq(0)

    def test_division_roundtrip(self):
        x, y = gq("3/7", "-2/5"), gq(4, 9)
        assert (x / y) * y == x

    def test_dispatch(self):
        assert gq_arith(gq(2), gq(3), "mul") == gq(6)
        assert gq_arith(gq(1, 2), gq(0), "conj") == gq(1, -2)
        with pytest.raises(ValueError):
            gq_arith(gq(1), gq(1), "pow")


class TestCoeffElem:
    def test_surd_squares(self):
        assert (C0 * C0).as_rational() == mpq(32, 257)
        assert (S2 * S2).as_rational() == 2
        # y0^2 from the defining difference, over the common denominator
        assert (Y0 * Y0).as_rational() == mpq(257, 32) - mpq(5729, 2304)
        assert (Y0 * Y0).as_rational() == mpq(12775, 2304)

    def test_embed_and_extract(self):
        for v in (mpq(32, 257), mpq(-5), mpq(0)):
            assert coeff_embed(v).as_rational() == v
        assert coeff_embed("c0") == C0
        with pytest.raises(ValueError):
            coeff_embed("x")

    def test_dispatch(self):
        assert coeff_arith(C0, C0, "mul").as_rational() == mpq(32, 257)
        assert coeff_arith(C0, ZERO, "neg") == -C0

    def test_mixed_monomial_reduction(self):
        # (c0 y0 s2)^2 reduces to a plain rational through any association
        w = C0 * Y0 * S2
        expect = mpq(32, 257) * mpq(12775, 2304) * 2
        assert (w * w).as_rational() == expect
        assert ((C0 * Y0) * S2) == (C0 * (Y0 * S2))

    def test_ring_axioms_random(self, rng):
        def rand():
            terms = {0: GaussQ(rng.randint(-4, 4), rng.randint(-4, 4))}
            if rng.random() < 0.5:
                terms[rng.choice((1, 2, 4, 3, 5, 6, 7))] = \
                    GaussQ(rng.randint(-4, 4), rng.randint(-4, 4))
            return CoeffElem(terms)
        for _ in range(1000):
            x, y, z = rand(), rand(), rand()
            assert (x + y) + z == x + (y + z)
            assert (x * y) * z == x * (y * z)
            assert x * (y + z) == x * y + x * z
            assert x * y == y * x

    def test_conj_involution_and_hom(self, rng):
        for _ in range(300):
            x = CoeffElem({0: GaussQ(rng.randint(-4, 4), rng.randint(-4, 4)),
                           5: GaussQ(rng.randint(-4, 4), rng.randint(-4, 4))})
            y = CoeffElem({2: GaussQ(rng.randint(-4, 4), rng.randint(-4, 4))})
            assert x.conj().conj() == x
            assert (x * y).conj() == x.conj() * y.conj()
            assert (x + y).conj() == x.conj() + y.conj()

    def test_surds_fixed_by_conj(self):
        for s in (C0, Y0, S2):
            assert s.conj() == s
        assert CoeffElem.from_gauss(GQ_I).conj() == -CoeffElem.from_gauss(GQ_I)

    def test_rendering(self):
        x = CoeffElem.from_rational(mpq(3, 2)) + C0 * mpq(-1, 4) \
            + S2 * GaussQ(0, 2)
        assert str(x) == "3/2 - 1/4·c0 + 2i·s2"
        assert str(ZERO) == "0"
        assert str(ONE) == "1"
        assert str(C0 * Y0 * S2) == "c0·y0·s2"

    def test_to_complex(self):
        z = (C0 * C0).to_complex()
        assert abs(z - 32 / 257) < 1e-15
        assert abs(S2.to_complex() - 2 ** 0.5) < 1e-15
