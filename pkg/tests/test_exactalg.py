from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from stabgraph.errors import (
    DivisionByZero,
    NotDivisible,
    VariableMismatch,
    ZeroPolynomial,
)
from stabgraph.exactalg import NEG_INF, GaussianRational, UniPoly, gcd, gcd_many

from conftest import gaussian_rationals, gaussian_rationals_nonzero, unipolys, unipolys_nonzero


def gr(re, im=0):
    return GaussianRational(Fraction(re), Fraction(im))


def p_of(*ints, var="z1"):
    return UniPoly(var, ints)


class TestGaussianRational:
    def test_mul_example(self):
        assert gr(1, 2) * gr(3, -1) == gr(5, 5)

    def test_inv_of_i(self):
        assert gr(0, 1).inv() == gr(0, -1)

    def test_div_by_zero(self):
        with pytest.raises(DivisionByZero):
            gr(1) / gr(0)
        with pytest.raises(DivisionByZero):
            gr(0).inv()

    def test_text_forms(self):
        assert str(gr(3)) == "3"
        assert str(gr(Fraction(3, 5))) == "3/5"
        assert str(gr(Fraction(3, 5), Fraction(4, 5))) == "3/5+4/5*i"
        assert str(gr(Fraction(1, 2), -2)) == "1/2-2*i"
        assert str(gr(0, 1)) == "0+1*i"

    @given(gaussian_rationals(), gaussian_rationals(), gaussian_rationals())
    def test_ring_axioms(self, a, b, c):
        assert (a + b) + c == a + (b + c)
        assert a + b == b + a
        assert (a * b) * c == a * (b * c)
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c
        assert a + (-a) == gr(0)

    @given(gaussian_rationals(), gaussian_rationals())
    def test_conj_is_multiplicative_involution(self, a, b):
        assert a.conj().conj() == a
        assert (a * b).conj() == a.conj() * b.conj()
        assert (a + b).conj() == a.conj() + b.conj()

    @given(gaussian_rationals(), gaussian_rationals_nonzero())
    def test_div_undoes_mul(self, a, b):
        assert (a / b) * b == a
        assert b * b.inv() == gr(1)


class TestUniPolyBasics:
    def test_zero_degree_marker(self):
        assert UniPoly.zero("z1").deg == NEG_INF
        assert p_of(7).deg == 0
        assert p_of(0, 1).deg == 1

    def test_trailing_zeros_trimmed(self):
        assert p_of(1, 2, 0, 0) == p_of(1, 2)
        assert p_of(0, 0, 0).is_zero()

    def test_variable_mismatch(self):
        with pytest.raises(VariableMismatch):
            p_of(1, var="z1") + p_of(1, var="z2")
        with pytest.raises(VariableMismatch):
            UniPoly("q", [1])

    @given(unipolys(), unipolys())
    def test_deg_of_product_adds(self, p, q):
        assert (p * q).deg == p.deg + q.deg

    @given(unipolys(), unipolys(), gaussian_rationals())
    def test_eval_is_ring_homomorphism(self, p, q, x):
        assert (p + q).eval_at(x) == p.eval_at(x) + q.eval_at(x)
        assert (p * q).eval_at(x) == p.eval_at(x) * q.eval_at(x)

    @given(unipolys())
    def test_derivative_linearity_on_shift(self, p):
        shifted = p.times_power(1)
        # (x*p)' = p + x*p'
        assert shifted.derivative() == p + p.derivative().times_power(1)


class TestDivision:
    @given(unipolys(), unipolys_nonzero())
    def test_divmod_identity(self, a, b):
        q, r = a.divmod(b)
        assert q * b + r == a
        assert r.deg < b.deg

    @given(unipolys(), unipolys_nonzero())
    def test_exact_div_roundtrip(self, a, b):
        assert (a * b).exact_div(b) == a

    def test_exact_div_rejects_remainder(self):
        with pytest.raises(NotDivisible):
            p_of(1, 1).exact_div(p_of(0, 1))

    def test_division_by_zero_poly(self):
        with pytest.raises(DivisionByZero):
            p_of(1).divmod(UniPoly.zero("z1"))


class TestGcd:
    def test_gcd_example(self):
        # z1^2 + 1 = (z1 - i)(z1 + i)
        p = p_of(1, 0, 1)
        q = UniPoly("z1", [gr(0, -1), gr(1)])
        assert gcd(p, q) == q.monic()
        assert gcd(p, q) == q  # already monic

    def test_gcd_of_zeros(self):
        z = UniPoly.zero("z1")
        assert gcd(z, z).is_zero()
        assert gcd(p_of(2, 2), z) == p_of(1, 1)

    @given(unipolys(), unipolys())
    @settings(max_examples=60)
    def test_gcd_divides_both_and_is_monic(self, p, q):
        g = gcd(p, q)
        if g.is_zero():
            assert p.is_zero() and q.is_zero()
            return
        assert g.lead() == gr(1)
        p.exact_div(g)
        q.exact_div(g)

    @given(unipolys(), unipolys(), unipolys(max_len=3), unipolys(max_len=3))
    @settings(max_examples=60)
    def test_gcd_divides_combinations(self, p, q, a, b):
        g = gcd(p, q)
        if g.is_zero():
            return
        (a * p + b * q).exact_div(g)

    def test_gcd_many(self):
        polys = [p_of(0, 2), p_of(0, 0, 4), p_of(0, -6)]
        assert gcd_many(polys, "z1") == p_of(0, 1)


class TestCoeffSymmetries:
    def test_flip_examples(self):
        assert p_of(0, -1).flip(-1) == p_of(1)
        assert p_of(-1, 0, 1).flip(1) == p_of(1, 0, -1)
        assert p_of(0, 2, 0, -1).flip(-1) == p_of(1, 0, -2)

    def test_flip_of_zero_rejected(self):
        with pytest.raises(ZeroPolynomial):
            UniPoly.zero("z1").flip(1)

    @given(unipolys_nonzero(), st.sampled_from([1, -1]))
    def test_double_flip_is_signed_identity(self, p, sign):
        flipped = p.flip(sign)
        if p.coeff(0):
            twice = flipped.flip(sign)
            expected = p if sign == 1 or p.deg % 2 == 0 else -p
            assert twice == expected
            assert twice in (p, -p)

    @given(unipolys(), unipolys())
    def test_conj_coeffs_involution_multiplicative(self, p, q):
        assert p.conj_coeffs().conj_coeffs() == p
        assert (p * q).conj_coeffs() == p.conj_coeffs() * q.conj_coeffs()


class TestText:
    def test_ascending_order_with_unit_coeffs(self):
        p = UniPoly("z1", [1, -3, -1, -1])
        assert p.text() == "1 - 3*z1 - z1^2 - z1^3"

    def test_fraction_and_complex_coeffs(self):
        p = UniPoly("z1", [gr(Fraction(1, 2)), gr(0, 1)])
        assert p.text() == "1/2 + (0+1*i)*z1"

    def test_zero_renders_as_zero(self):
        assert UniPoly.zero("x").text() == "0"

    def test_leading_negative_constant(self):
        assert p_of(-3, 1).text() == "-3 + z1"
