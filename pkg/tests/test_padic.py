"""Rational valuation/norm and truncated p-adic arithmetic."""

import math
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rpqcalc.errors import (ConvergenceDomainError, InvalidParameterError)
from rpqcalc.padic import (PadicNumber, is_prime, padic_exp, padic_log,
                           padic_norm, padic_power, padic_valuation)


def factor_valuation(n: int, p: int) -> int:
    """Independent oracle: count factors of p by explicit factorization."""
    v = 0
    n = abs(n)
    while n and n % p == 0:
        n //= p
        v += 1
    return v


class TestValuation:
    def test_integer_powers(self):
        assert padic_valuation(F(8), 2) == 3
        assert padic_valuation(F(8), 2) == factor_valuation(8, 2)

    def test_unit(self):
        assert padic_valuation(F(1), 5) == 0

    def test_prime_itself(self):
        assert padic_valuation(F(5), 5) == 1
        assert padic_norm(PadicNumber.from_rational(5, 5, 8)) == F(1, 5)

    def test_zero_is_infinite(self):
        assert padic_valuation(F(0), 7) == math.inf

    def test_rational_mixed(self):
        assert padic_valuation(F(50, 3), 5) == 2
        assert padic_valuation(F(3, 50), 5) == -2

    def test_nonprime_rejected(self):
        with pytest.raises(InvalidParameterError):
            padic_valuation(F(1), 6)

    @given(st.integers(min_value=1, max_value=10 ** 9))
    def test_matches_factorization(self, n):
        assert padic_valuation(F(n), 3) == factor_valuation(n, 3)


class TestNorm:
    def test_positive_valuation(self):
        x = PadicNumber.from_rational(9, 3, 8)
        assert x.valuation == 2
        assert padic_norm(x) == F(1, 9)

    def test_zero(self):
        assert padic_norm(PadicNumber.zero(3, 8)) == 0

    def test_unit(self):
        assert padic_norm(PadicNumber.from_rational(F(2, 7), 3, 8)) == 1


class TestArithmetic:
    def test_doubling_gains_valuation_at_two(self):
        x = PadicNumber.from_rational(3, 2, 10)
        assert (x + x).valuation >= x.valuation + 1

    def test_exact_integer_product(self):
        one_plus = PadicNumber.from_rational(6, 5, 12)
        one_minus = PadicNumber.from_rational(-4, 5, 12)
        assert one_plus * one_minus == PadicNumber.from_rational(-24, 5, 12)

    def test_mixed_primes_rejected(self):
        x = PadicNumber.from_rational(1, 3, 8)
        y = PadicNumber.from_rational(1, 5, 8)
        with pytest.raises(InvalidParameterError):
            _ = x + y

    def test_division_roundtrip(self):
        x = PadicNumber.from_rational(F(7, 3), 5, 10)
        y = PadicNumber.from_rational(F(11, 4), 5, 10)
        assert (x / y) * y == x

    def test_integer_pow(self):
        x = PadicNumber.from_rational(F(2, 3), 7, 10)
        assert x ** 5 == x * x * x * x * x
        assert x ** 0 == 1
        assert x ** -2 == 1 / (x * x)

    def test_rational_embedding_resums(self):
        # digits of a/b with p not dividing b re-sum to a/b mod p^N
        x = PadicNumber.from_rational(F(22, 7), 5, 9)
        acc = 0
        for i, d in enumerate(x.digits):
            acc += d * 5 ** i
        resummed = acc * 5 ** x.valuation
        assert (F(22, 7) - resummed) % (5 ** x.absolute_precision) == 0 \
            or padic_valuation(F(22, 7) - resummed, 5) \
            >= x.absolute_precision


small_rationals = st.fractions(
    min_value=F(-50), max_value=F(50),
    max_denominator=40).filter(lambda f: f.denominator % 5 != 0)


@settings(max_examples=60, deadline=None)
@given(small_rationals, small_rationals)
def test_ultrametric_and_multiplicativity(a, b):
    x = PadicNumber.from_rational(a, 5, 14)
    y = PadicNumber.from_rational(b, 5, 14)
    s = x + y
    if not (x.is_zero() or y.is_zero() or s.is_zero()):
        assert padic_norm(s) <= max(padic_norm(x), padic_norm(y))
        assert padic_norm(x * y) == padic_norm(x) * padic_norm(y)


@settings(max_examples=40, deadline=None)
@given(small_rationals, small_rationals, small_rationals)
def test_ring_laws_to_precision(a, b, c):
    x = PadicNumber.from_rational(a, 5, 14)
    y = PadicNumber.from_rational(b, 5, 14)
    z = PadicNumber.from_rational(c, 5, 14)
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z


class TestExpLog:
    def test_exp_zero(self):
        assert PadicNumber.zero(5, 10).exp() == 1

    def test_log_one(self):
        assert PadicNumber.one(5, 10).log().is_zero()

    def test_exp_additivity(self):
        # both sides checked against the truncated-series oracle too
        e1 = padic_exp(PadicNumber.from_rational(5, 5, 8))
        e2 = padic_exp(PadicNumber.from_rational(10, 5, 8))
        assert e1 * e1 == e2
        oracle = sum(F(5) ** n / math.factorial(n) for n in range(40))
        assert PadicNumber.from_rational(oracle, 5, 8) == e1

    def test_roundtrips(self):
        x = PadicNumber.from_rational(15, 5, 10)
        assert padic_log(padic_exp(x)) == x
        u = PadicNumber.from_rational(1 + 5 * 3, 5, 10)
        assert padic_exp(padic_log(u)) == u

    def test_exp_domain_error_names_bound(self):
        with pytest.raises(ConvergenceDomainError, match="p"):
            padic_exp(PadicNumber.one(5, 10))

    def test_log_domain_error(self):
        with pytest.raises(ConvergenceDomainError):
            padic_log(PadicNumber.from_rational(2, 5, 10))

    def test_power(self):
        q = PadicNumber.from_rational(6, 5, 8)
        assert padic_power(q, 0) == 1
        assert padic_power(q, 1) == q
        assert padic_power(q, 2) == q * q
        x = PadicNumber.from_rational(2, 5, 8)
        assert padic_power(q, x) == q * q

    def test_power_domain(self):
        q = PadicNumber.from_rational(2, 5, 8)
        with pytest.raises(ConvergenceDomainError):
            padic_power(q, 2)


class TestExternalForms:
    def test_text_form(self):
        x = PadicNumber.from_rational(50, 5, 4)
        text = str(x)
        assert text.startswith("5^2 * (2")
        assert "[4 digits]" in text

    def test_json_roundtrip(self):
        x = PadicNumber.from_rational(F(7, 3), 5, 10)
        assert PadicNumber.from_json(x.to_json()) == x
        obj = x.to_json()
        assert obj["prime"] == 5 and len(obj["digits"]) == 10

    def test_json_zero(self):
        z = PadicNumber.zero(7, 6)
        assert PadicNumber.from_json(z.to_json()).is_zero()


def test_is_prime_basics():
    assert is_prime(2) and is_prime(97) and is_prime(2 ** 61 - 1)
    assert not is_prime(1) and not is_prime(91)
