"""Closed-form ground truths against the singular-kernel quadrature."""

import math

import numpy as np
import pytest

from fracdec import (
    ConfigError,
    QuadratureSpec,
    caputo_power,
    caputo_quadrature,
    family_names,
    frac_gradient_saddle,
    frac_gradient_shifted_min,
    gamma,
    get_family,
    left_caputo_exp,
    two_sided_cubic,
    two_sided_poly,
    two_sided_quadratic,
)

POINTS = (0.15, 0.4, 0.85)


class TestPowerRule:
    def test_formula(self):
        for q in (1.0, 2.0, 3.0, 2.5):
            for s in (0.25, 0.5, 0.75):
                for x in POINTS:
                    expected = gamma(q + 1) * x ** (q - s) / gamma(q + 1 - s)
                    assert caputo_power(q, s, x) == pytest.approx(expected)

    def test_vs_quadrature(self):
        for q in (2.0, 3.0):
            for s in (0.3, 0.5, 0.7):
                for x in POINTS:
                    oracle = caputo_quadrature(lambda t: q * t ** (q - 1),
                                               0.0, 1.0, x, s, side="left")
                    assert caputo_power(q, s, x) == pytest.approx(oracle, abs=1e-8)

    def test_validation(self):
        with pytest.raises(ConfigError):
            caputo_power(0.0, 0.5, 0.5)
        with pytest.raises(ConfigError):
            caputo_power(2.0, 1.0, 0.5)
        with pytest.raises(ConfigError):
            caputo_power(2.0, 0.5, -0.1)


class TestTwoSidedForms:
    @pytest.mark.parametrize("s", [0.3, 0.5, 0.7])
    @pytest.mark.parametrize("sign", ["plus", "minus"])
    def test_cubic_vs_quadrature(self, s, sign):
        for x in POINTS:
            oracle = caputo_quadrature(lambda t: 3 * t ** 2, 0.0, 1.0, x, s,
                                       side="two_sided", right_sign=sign)
            assert two_sided_cubic(x, s, sign) == pytest.approx(oracle, abs=1e-8)

    @pytest.mark.parametrize("s", [0.3, 0.5, 0.7])
    @pytest.mark.parametrize("sign", ["plus", "minus"])
    def test_quadratic_vs_quadrature(self, s, sign):
        for x in POINTS:
            oracle = caputo_quadrature(lambda t: 2 * t, 0.0, 1.0, x, s,
                                       side="two_sided", right_sign=sign)
            assert two_sided_quadratic(x, s, sign) == pytest.approx(oracle, abs=1e-8)

    def test_poly_is_linear_combination(self):
        for s in (0.4, 0.5):
            for sign in ("plus", "minus"):
                x = np.linspace(0.05, 0.95, 7)
                combo = -10 * two_sided_cubic(x, s, sign) \
                    + 10 * two_sided_quadratic(x, s, sign)
                np.testing.assert_allclose(two_sided_poly(x, s, sign), combo,
                                           atol=1e-13)

    def test_half_order_printed_forms(self):
        # At s = 1/2 the pieces reduce to the familiar explicit formulas.
        x = 0.3
        right_c = 3.0 / gamma(3.5) * math.sqrt(1 - x) * (0.75 + x + 2 * x * x)
        left_c = gamma(4.0) / gamma(3.5) * x ** 2.5
        assert two_sided_cubic(x, 0.5, "minus") == pytest.approx(left_c - right_c,
                                                                 rel=1e-12)
        right_q = 2.0 / gamma(2.5) * math.sqrt(1 - x) * (x + 0.5)
        left_q = 2.0 / gamma(2.5) * x ** 1.5
        assert two_sided_quadratic(x, 0.5, "plus") == pytest.approx(
            left_q + right_q, rel=1e-12)


class TestExponential:
    def test_vs_quadrature(self):
        for s in (0.3, 0.5, 0.7):
            for x in POINTS:
                oracle = caputo_quadrature(math.exp, 0.0, 1.0, x, s, side="left")
                assert left_caputo_exp(x, s) == pytest.approx(oracle, abs=1e-8)

    def test_s_limits(self):
        # As s -> 0+, the left derivative tends to e^x - 1 (the integral
        # of f' with a flat kernel).
        assert left_caputo_exp(0.7, 1e-6) == pytest.approx(math.exp(0.7) - 1.0,
                                                           abs=1e-4)

    def test_vector_input(self):
        x = np.array([0.2, 0.5])
        out = left_caputo_exp(x, 0.5)
        assert out.shape == (2,)
        assert out[0] == pytest.approx(left_caputo_exp(0.2, 0.5))


class Test2DFields:
    def test_saddle_components(self):
        for (x, y) in ((0.2, 0.7), (0.5, 0.5)):
            vec = frac_gradient_saddle(x, y, "plus")
            ox = -caputo_quadrature(lambda t: 2 * t, 0, 1, x, 0.5,
                                    side="two_sided", right_sign="plus")
            oy = caputo_quadrature(lambda t: 2 * t, 0, 1, y, 0.5,
                                   side="two_sided", right_sign="plus")
            np.testing.assert_allclose(vec, [ox, oy], atol=1e-8)

    def test_shifted_min_components(self):
        for (x, y) in ((0.2, 0.7), (0.45, 0.1)):
            vec = frac_gradient_shifted_min(x, y, "plus")
            ox = caputo_quadrature(lambda t: 2 * (t - 0.1), 0, 1, x, 0.5,
                                   side="two_sided", right_sign="plus")
            oy = caputo_quadrature(lambda t: 2 * (t - 0.1), 0, 1, y, 0.5,
                                   side="two_sided", right_sign="plus")
            np.testing.assert_allclose(vec, [ox, oy], atol=1e-8)

    def test_vectorized_shape(self):
        x = np.linspace(0.1, 0.9, 5)
        assert frac_gradient_saddle(x, x).shape == (5, 2)


class TestQuadratureOracle:
    def test_spec_validation(self):
        with pytest.raises(ConfigError):
            QuadratureSpec(abs_tol=0.0)

    def test_domain_checks(self):
        with pytest.raises(ConfigError):
            caputo_quadrature(math.exp, 0.0, 1.0, 1.5, 0.5)
        with pytest.raises(ConfigError):
            caputo_quadrature(math.exp, 0.0, 1.0, 0.5, 1.0)
        with pytest.raises(ConfigError):
            caputo_quadrature(math.exp, 0.0, 1.0, 0.5, 0.5, side="upward")

    def test_right_side_only(self):
        x, s = 0.4, 0.5
        left = caputo_quadrature(lambda t: 2 * t, 0, 1, x, s, side="left")
        right = caputo_quadrature(lambda t: 2 * t, 0, 1, x, s, side="right")
        both = caputo_quadrature(lambda t: 2 * t, 0, 1, x, s,
                                 side="two_sided", right_sign="minus")
        assert both == pytest.approx(left - right, abs=1e-10)

    def test_constant_derivative_zero(self):
        assert caputo_quadrature(lambda t: 0.0, 0, 1, 0.5, 0.5,
                                 side="two_sided") == pytest.approx(0.0, abs=1e-12)


class TestFamilyRegistry:
    def test_names(self):
        names = family_names()
        for required in ("constant", "cubic_x3", "exp_x",
                         "poly_neg10x3_plus_10x2", "saddle_2d",
                         "shifted_min_2d", "power"):
            assert required in names

    def test_power_exponent(self):
        fam = get_family("power", q=2.0)
        assert fam.sample(3.0) == pytest.approx(9.0)
        assert fam.reference(0.5, 0.5) == pytest.approx(caputo_power(2.0, 0.5, 0.5))

    def test_unknown_family(self):
        with pytest.raises(ConfigError):
            get_family("sinc")

    def test_sample_derivative_consistency(self):
        # Finite differences of each sample match the stored derivative.
        h = 1e-6
        for name in ("cubic_x3", "poly_neg10x3_plus_10x2", "exp_x"):
            fam = get_family(name)
            for x in POINTS:
                fd = (fam.sample(x + h) - fam.sample(x - h)) / (2 * h)
                assert fd == pytest.approx(fam.derivative(x), rel=1e-5)
