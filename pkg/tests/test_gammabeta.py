"""Power basis, deformed gamma/beta, Taylor expansions."""

import random
from fractions import Fraction as F

import pytest

from rpqcalc.deform import DeformParams, rpq_factorial, rpq_number
from rpqcalc.errors import (ConvergenceDomainError, InvalidParameterError,
                            PoleError)
from rpqcalc.gammabeta import (beta_rpq, gamma_rpq,
                               gamma_duplication_report, power_basis,
                               power_basis_derivative_suite,
                               power_basis_identity_suite,
                               power_basis_infinite, power_basis_poly,
                               beta_reflection_report, rational_pow_exact,
                               rpq_number_at, taylor_expand,
                               taylor_reconstruct)
from rpqcalc.poly import Polynomial

JS = DeformParams.preset("jagannathan_srinivasa", p=1, q=F(1, 2))
# square-friendly parameters: both q and 1-q are exact squares
JS9 = DeformParams.preset("jagannathan_srinivasa", p=1, q=F(9, 25))
JS16 = DeformParams.preset("jagannathan_srinivasa", p=1, q=F(16, 25))
PRESETS = [
    JS,
    DeformParams.preset("heine", q=F(1, 2)),
    DeformParams.preset("biedenharn_macfarlane", q=F(1, 2)),
    DeformParams.preset("quesne", q=F(1, 2)),
    DeformParams.preset("hounkonnou_ngompe", p=F(9, 10), q=F(1, 2)),
    DeformParams.preset("chakrabarty_jagannathan", p=F(9, 10), q=F(1, 2)),
]


class TestRationalPow:
    def test_integer_exponents(self):
        assert rational_pow_exact(F(2, 3), F(-2)) == F(9, 4)

    def test_exact_roots(self):
        assert rational_pow_exact(F(9, 25), F(1, 2)) == F(3, 5)
        assert rational_pow_exact(F(8, 27), F(2, 3)) == F(4, 9)

    def test_irrational_rejected(self):
        with pytest.raises(InvalidParameterError):
            rational_pow_exact(F(1, 2), F(1, 2))


class TestPowerBasis:
    def test_single_factor(self):
        x, a = F(2), F(1, 3)
        assert power_basis(x, a, 1, "minus", JS) == x - a

    def test_two_factors(self):
        x, a = F(2), F(1, 3)
        assert power_basis(x, a, 2, "minus", JS) == \
            (x - a) * (x * JS.xi1 - a * JS.xi2)

    def test_worked_example(self):
        assert power_basis(F(1), F(1, 2), 3, "minus", JS) == F(21, 64)

    def test_plus_mode(self):
        x, y = F(2), F(1, 3)
        assert power_basis(x, y, 2, "plus", JS) == \
            (x + y) * (x * JS.xi1 + y * JS.xi2)

    def test_negative_exponent_reciprocal(self):
        x, y = F(2), F(1, 3)
        val = power_basis(x, y, -2, "minus", JS)
        x1, x2 = JS.xi1, JS.xi2
        direct = 1 / ((x * x1 ** -2 - y * x2 ** -2)
                      * (x * x1 ** -1 - y * x2 ** -1))
        assert val == direct

    def test_zero_reciprocal_factor(self):
        # y = x xi2/xi1 zeroes the index -1 factor x/xi1 - y/xi2
        with pytest.raises(ZeroDivisionError):
            power_basis(F(1), JS.xi2 / JS.xi1, -1, "minus", JS)

    def test_poly_expansion_matches_values(self):
        a = F(1, 3)
        poly = power_basis_poly(a, 3, "minus", JS)
        for x in (F(2), F(-1, 2), F(7, 5)):
            assert poly(x) == power_basis(x, a, 3, "minus", JS)

    def test_infinite_truncation_certificate(self):
        prod = power_basis_infinite(F(1), F(1, 2), "minus", JS, 64)
        assert prod.truncation == 64
        assert prod.tail_ratio == F(1, 2) * F(1, 2) ** 64


class TestIdentitySuites:
    @pytest.mark.parametrize("params", PRESETS)
    @pytest.mark.parametrize("n,k", [(2, 1), (3, 2), (0, 1), (4, 3)])
    def test_regrouping_identities(self, params, n, k):
        assert power_basis_identity_suite(params, n, k).passed

    @pytest.mark.parametrize("params", PRESETS)
    @pytest.mark.parametrize("n,k", [(1, 1), (2, 2), (3, 2), (5, 3)])
    def test_derivative_rules(self, params, n, k):
        assert power_basis_derivative_suite(params, n, k).passed

    def test_rejects_bad_orders(self):
        with pytest.raises(InvalidParameterError):
            power_basis_derivative_suite(JS, 1, 2)


class TestGamma:
    def test_factorial_link(self):
        for n in range(33):
            g = gamma_rpq(n + 1, JS)
            assert g.exact and g.tail_bound == 0
            assert g.value == rpq_factorial(JS, n)

    def test_base_value(self):
        assert gamma_rpq(1, JS).value == 1

    def test_worked_example(self):
        assert gamma_rpq(4, JS).value == F(21, 8)

    def test_pole_at_nonpositive_integers(self):
        for z in (0, -1, -3):
            with pytest.raises(PoleError):
                gamma_rpq(z, JS)

    @pytest.mark.parametrize("params", [JS9, JS16])
    def test_recurrence_at_half_integers(self, params):
        for k in (1, 3, 5, 7, 9):
            z = F(k, 2)
            gz = gamma_rpq(z, params)
            gz1 = gamma_rpq(z + 1, params)
            expected = rpq_number_at(params, z) * gz.value
            rel = abs(gz1.value - expected) / abs(expected)
            budget = (1 + gz.tail_bound) * (1 + gz1.tail_bound) - 1
            assert rel <= 2 * budget + F(1, 10 ** 25)

    def test_chain_consistency_with_integer_path(self):
        # walking the recurrence from 1/2 lands on the product value
        g = gamma_rpq(F(1, 2), JS9)
        chain = g.value
        for k in range(5):
            chain *= rpq_number_at(JS9, F(1, 2) + k)
        direct = gamma_rpq(F(11, 2), JS9)
        rel = abs(direct.value - chain) / abs(chain)
        assert rel < F(1, 10 ** 20)

    def test_tail_bound_meets_default_tolerance(self):
        g = gamma_rpq(F(3, 2), JS9)
        assert g.tail_bound <= F(1, 10 ** 30)

    def test_convergence_domain(self):
        flipped = DeformParams.preset("jagannathan_srinivasa", p=1,
                                      q=F(9, 25), xi1=F(9, 25),
                                      xi2=F(1))
        with pytest.raises(ConvergenceDomainError):
            gamma_rpq(F(1, 2), flipped)


class TestBeta:
    def test_unit_values(self):
        b = beta_rpq(1, 1, JS)
        assert b.value == 1 / rpq_number(JS, 1) and b.exact

    def test_symmetry(self):
        for (x, y) in ((1, 2), (3, 2), (4, 5)):
            assert beta_rpq(x, y, JS).value == beta_rpq(y, x, JS).value

    @pytest.mark.parametrize("x,y", [(1, 1), (2, 3), (4, 2), (3, 5)])
    def test_recurrences(self, x, y):
        b = beta_rpq(x, y, JS).value
        nx, ny = rpq_number(JS, x), rpq_number(JS, y)
        nxy = rpq_number(JS, x + y)
        assert beta_rpq(x, y + 1, JS).value == ny / nxy * b
        assert beta_rpq(x + 1, y, JS).value == nx / nxy * b
        assert beta_rpq(x + 1, y, JS).value == \
            nx / ny * beta_rpq(x, y + 1, JS).value
        assert beta_rpq(x + 1, y + 1, JS).value == \
            nx * ny / (rpq_number(JS, x + y + 1) * nxy) * b

    def test_shift_product_form(self):
        # iterating the one-step recurrence n times multiplies by the
        # factor-ratio product of the power bases
        x, y, n = 2, 3, 3
        x1, x2 = JS.xi1, JS.xi2
        num = power_basis(x1 ** x, x2 ** x, n, "minus", JS)
        den = power_basis(x1 ** (x + y), x2 ** (x + y), n, "minus", JS)
        assert beta_rpq(x + n, y, JS).value == \
            num / den * beta_rpq(x, y, JS).value

    def test_four_gamma_product_form(self):
        x, y, z, w = 1, 2, 3, 2
        lhs = beta_rpq(x, y, JS).value \
            * beta_rpq(x + y, z, JS).value \
            * beta_rpq(x + y + z, w, JS).value
        rhs = (gamma_rpq(x, JS).value * gamma_rpq(y, JS).value
               * gamma_rpq(z, JS).value * gamma_rpq(w, JS).value
               / gamma_rpq(x + y + z + w, JS).value)
        assert lhs == rhs


class TestMeasuredReports:
    def test_duplication_is_reported_not_asserted(self):
        js35 = DeformParams.preset("jagannathan_srinivasa", p=1,
                                   q=F(3, 5))
        rep = gamma_duplication_report(js35, 2, truncation=96)
        assert rep["asserted"] is False
        assert "difference" in rep

    def test_reflection_product_part_exact(self):
        rep = beta_reflection_report(JS9, F(1, 2), truncation=96)
        assert rep["asserted"] is False
        assert rep["product_form_matches"] is True


class TestTaylor:
    def test_monomial_at_origin(self):
        cs = taylor_expand(Polynomial.monomial(3), F(0), JS, "forward")
        assert cs[3] != 0
        assert all(c == 0 for i, c in enumerate(cs) if i != 3)

    @pytest.mark.parametrize("params", PRESETS)
    @pytest.mark.parametrize("form", ["forward", "reverse"])
    def test_reconstruction(self, params, form):
        rng = random.Random(13)
        f = Polynomial({k: F(rng.randint(-9, 9), rng.randint(1, 7))
                        for k in range(4)})
        a = F(rng.randint(1, 5), rng.randint(1, 4))
        cs = taylor_expand(f, a, params, form)
        assert taylor_reconstruct(cs, a, params, form) == f

    @pytest.mark.parametrize("form", ["forward", "reverse"])
    def test_degree_twelve(self, form):
        rng = random.Random(17)
        f = Polynomial({k: F(rng.randint(-9, 9), rng.randint(1, 7))
                        for k in range(13)})
        a = F(3, 7)
        cs = taylor_expand(f, a, JS, form)
        assert taylor_reconstruct(cs, a, JS, form) == f

    def test_exponential_coefficients(self):
        # expanding the truncated exponential at a: the k-th coefficient
        # times [k]!/lambda^k equals the exponential's own truncation
        from rpqcalc.series import exp_lower
        lam, a, order = F(2, 3), F(1, 4), 12
        e = exp_lower(JS, order).scale_arg(lam).to_polynomial()
        cs = taylor_expand(e, a, JS, "forward")
        for k in range(5):
            partial = exp_lower(JS, order - k).scale_arg(lam)
            expected = sum(partial.coefficient(i) * a ** i
                           for i in range(order - k + 1))
            assert cs[k] * rpq_factorial(JS, k) / lam ** k == expected
