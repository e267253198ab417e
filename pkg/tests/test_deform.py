"""Structure functions, deformed numbers/factorials/binomials."""

from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rpqcalc.deform import (DeformParams, StructureFunction,
                            bm_identity_suite, bm_number, rpq_binomial,
                            rpq_factorial, rpq_number)
from rpqcalc.errors import InvalidParameterError
from rpqcalc.padic import PadicNumber

P, Q = F(9, 10), F(1, 2)

# direct-formula evaluators, independent of the preset dispatch
ORACLES = {
    "heine": lambda n: (1 - Q ** n) / (1 - Q),
    "quesne": lambda n: (1 - Q ** -n) / (Q - 1),
    "biedenharn_macfarlane": lambda n: (Q ** n - Q ** -n) / (Q - Q ** -1),
    "jagannathan_srinivasa": lambda n: (P ** n - Q ** n) / (P - Q),
    "chakrabarty_jagannathan":
        lambda n: (P ** -n - Q ** n) / (P ** -1 - Q),
    "hounkonnou_ngompe": lambda n: (P ** n - Q ** -n) / (Q - P ** -1),
}


def preset(kind, p=P, q=Q):
    return DeformParams.preset(kind, p=p, q=q)


class TestNumbers:
    def test_two_base_example(self):
        js = preset("jagannathan_srinivasa", p=1, q=F(1, 2))
        assert rpq_number(js, 3) == F(7, 4)

    def test_zero_always(self):
        for kind in ORACLES:
            assert rpq_number(preset(kind), 0) == 0

    def test_bm_example(self):
        bm = preset("biedenharn_macfarlane", q=F(1, 2))
        assert rpq_number(bm, 2) == F(5, 2)

    @pytest.mark.parametrize("kind", sorted(ORACLES))
    def test_against_oracles(self, kind):
        pr = preset(kind)
        for n in range(1, 30):
            assert rpq_number(pr, n) == ORACLES[kind](n), (kind, n)

    def test_negative_rejected(self):
        with pytest.raises(InvalidParameterError):
            rpq_number(preset("heine"), -1)

    def test_two_base_degenerates_to_heine(self):
        js = DeformParams.preset("jagannathan_srinivasa", p=1, q=Q)
        h = preset("heine")
        for n in range(21):
            assert rpq_number(js, n) == rpq_number(h, n)

    def test_classical(self):
        cl = DeformParams.preset("classical", p=1, q=1)
        assert rpq_number(cl, 17) == 17

    def test_padic_parameters(self):
        rho = PadicNumber.from_rational(6, 5, 12)
        q = PadicNumber.from_rational(11, 5, 12)
        pr = DeformParams(rho, q)
        assert rpq_number(pr, 3) == (rho ** 3 - q ** 3) / (rho - q)


class TestFactorials:
    def test_empty(self):
        assert rpq_factorial(preset("heine"), 0) == 1

    def test_single(self):
        for kind in ORACLES:
            pr = preset(kind)
            assert rpq_factorial(pr, 1) == rpq_number(pr, 1)

    def test_example(self):
        js = DeformParams.preset("jagannathan_srinivasa", p=1, q=F(1, 2))
        assert rpq_factorial(js, 3) == F(21, 8)

    @pytest.mark.parametrize("kind", sorted(ORACLES))
    def test_recursion(self, kind):
        pr = preset(kind)
        for n in range(1, 16):
            assert rpq_factorial(pr, n) == \
                rpq_number(pr, n) * rpq_factorial(pr, n - 1)


class TestBinomials:
    def test_edges(self):
        pr = preset("jagannathan_srinivasa")
        assert rpq_binomial(pr, 5, 0) == 1
        assert rpq_binomial(pr, 5, 5) == 1

    def test_example(self):
        js = DeformParams.preset("jagannathan_srinivasa", p=1, q=F(1, 2))
        assert rpq_binomial(js, 3, 1) == F(7, 4)

    def test_rejects_bad_range(self):
        with pytest.raises(InvalidParameterError):
            rpq_binomial(preset("heine"), 2, 3)

    @settings(max_examples=40, deadline=None)
    @given(st.integers(min_value=0, max_value=14),
           st.integers(min_value=0, max_value=14))
    def test_symmetry(self, m, n):
        if n > m:
            m, n = n, m
        pr = preset("jagannathan_srinivasa")
        assert rpq_binomial(pr, m, n) == rpq_binomial(pr, m, m - n)

    def test_factorial_consistency(self):
        pr = preset("biedenharn_macfarlane")
        for m in range(8):
            for n in range(m + 1):
                assert rpq_binomial(pr, m, n) * rpq_factorial(pr, n) \
                    * rpq_factorial(pr, m - n) == rpq_factorial(pr, m)


class TestTwistConsistency:
    @pytest.mark.parametrize("kind", sorted(ORACLES))
    def test_presets_consistent(self, kind):
        assert preset(kind).is_twist_consistent()

    def test_scale_is_first_number(self):
        for kind in ORACLES:
            pr = preset(kind)
            assert pr.twist_scale() == rpq_number(pr, 1)


class TestBmIdentities:
    def test_exact_suite(self):
        rep = bm_identity_suite(F(1, 2), 2, 1)
        assert rep.passed
        assert all(r.residual == 0 for r in rep.results)

    def test_m_zero(self):
        rep = bm_identity_suite(F(1, 2), 4, 0)
        assert rep.passed

    def test_pair_one(self):
        assert bm_number(F(1, 2), 2) == F(1, 2) + 2
        assert bm_identity_suite(F(1, 2), 1, 1).passed

    def test_rejects_degenerate_q(self):
        with pytest.raises(InvalidParameterError):
            bm_identity_suite(F(1), 2, 1)


class TestCustomKernels:
    def test_two_base_as_custom(self):
        sf = StructureFunction.custom(
            [[1, 0, 1], [0, 1, -1]], [[0, 0, P - Q]])
        pr = DeformParams(P, Q, sf)
        js = preset("jagannathan_srinivasa")
        for n in range(10):
            assert rpq_number(pr, n) == rpq_number(js, n)

    def test_kernel_vanishing_constraint(self):
        with pytest.raises(InvalidParameterError):
            StructureFunction.custom([[1, 0, 1]], [[0, 0, 1]])  # R(1,1)=1

    def test_positivity_window(self):
        sf = StructureFunction.custom(
            [[1, 0, 1], [0, 1, -1]], [[0, 0, Q - P]])  # negative values
        with pytest.raises(InvalidParameterError):
            DeformParams(P, Q, sf)

    def test_json_roundtrip(self):
        sf = StructureFunction.custom(
            [[1, 0, 1], [0, 1, -1]], [[0, 0, F(2, 5)]])
        again = StructureFunction.from_json(sf.to_json())
        assert again == sf


class TestParameterValidation:
    def test_order_constraint(self):
        with pytest.raises(InvalidParameterError):
            DeformParams(F(1, 2), F(3, 4))  # q >= p

    def test_p_above_one(self):
        with pytest.raises(InvalidParameterError):
            DeformParams(F(3, 2), F(1, 2))

    def test_powered(self):
        pr = preset("jagannathan_srinivasa")
        sq = pr.powered(2)
        assert sq.p == P ** 2 and sq.xi2 == Q ** 2
        for n in range(6):
            assert rpq_number(sq, n) == \
                (P ** (2 * n) - Q ** (2 * n)) / (P ** 2 - Q ** 2)
