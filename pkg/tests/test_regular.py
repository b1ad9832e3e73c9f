import math
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from casimir_thermo.core import SeriesControl
from casimir_thermo.regular import (
    CancellationError,
    CutoffParam,
    correction_orders,
    eps_c_zero_regularized,
    extrapolate_g_p,
    g_p_deriv_form,
    g_p_exact,
    g_p_numeric,
    richardson_limit,
)

DEFAULT_ALPHAS = (0.5, 0.25, 0.125)


def _G_mp(p, alpha):
    """(-1)^{p+1} h^{(p+1)}(alpha) by mpmath numerical differentiation."""
    mpmath.mp.dps = 50
    h = lambda a: 1 / (2 * a) + 1 / (a * mpmath.expm1(a)) - 1 / a ** 2
    return float((-1) ** (p + 1) * mpmath.diff(h, mpmath.mpf(alpha), p + 1))


def _G_quad(p, alpha):
    """The three defining pieces via mpmath's incomplete gamma and quadrature."""
    mpmath.mp.dps = 40
    a = mpmath.mpf(alpha)
    s = p + 2
    inner = lambda m: mpmath.gammainc(s, a * m) / a ** s
    modes = mpmath.nsum(inner, [1, mpmath.inf])
    free = mpmath.quad(inner, [0, mpmath.inf])
    return float(inner(0) / 2 + modes - free)


def test_g_p_exact_examples():
    assert g_p_exact(0) == 0
    assert g_p_exact(1) == Fraction(-1, 360)
    assert g_p_exact(3) == Fraction(1, 1260)
    assert g_p_exact(5) == Fraction(-1, 1680)


def test_g_p_even_vanish_exactly():
    for p in range(0, 21, 2):
        assert g_p_exact(p) == 0


def test_cutoff_param():
    assert CutoffParam(1.0).alpha == 1.0
    for bad in (0.0, -0.5, 1.5):
        with pytest.raises(ValueError):
            CutoffParam(bad)


@pytest.mark.parametrize("p", [0, 1, 2, 3])
@pytest.mark.parametrize("alpha", [1.0, 0.5, 0.25])
def test_numeric_matches_deriv_form(p, alpha):
    assert abs(g_p_numeric(p, alpha) - g_p_deriv_form(p, alpha)) < 1e-9
    assert abs(g_p_numeric(p, alpha, extended=False) - g_p_deriv_form(p, alpha)) < 1e-9


@pytest.mark.parametrize("p, alpha", [(0, 0.25), (1, 0.5), (2, 0.7), (3, 1.0), (6, 0.4), (8, 0.9)])
def test_deriv_form_against_mpmath(p, alpha):
    assert g_p_deriv_form(p, alpha) == pytest.approx(_G_mp(p, alpha), rel=1e-12, abs=1e-16)


@pytest.mark.parametrize("p, alpha", [(0, 0.5), (1, 0.5), (2, 1.0)])
def test_numeric_against_quadrature(p, alpha):
    assert g_p_numeric(p, alpha) == pytest.approx(_G_quad(p, alpha), abs=1e-12)


def test_deriv_form_limits():
    assert abs(g_p_deriv_form(1, 1e-3) + 1 / 360) < 1e-6
    # even p: no constant term, leading correction is -B_6 alpha / 30 = -alpha/1260
    for alpha in (0.1, 0.05, 1e-3):
        assert g_p_deriv_form(2, alpha) == pytest.approx(-alpha / 1260, rel=5e-3)
    assert abs(g_p_deriv_form(2, 1e-3)) < 1e-6


@given(st.integers(0, 8), st.floats(0.05, 1.0))
@settings(max_examples=40, deadline=None)
def test_numeric_equals_deriv_form_everywhere(p, alpha):
    assert g_p_numeric(p, alpha) == pytest.approx(g_p_deriv_form(p, alpha), rel=1e-12, abs=1e-15)


def test_parity_of_correction():
    # G_p(alpha) - g_p is odd in alpha for even p and even for odd p
    for p in range(4):
        a = 0.3
        base = float(g_p_exact(p))
        lhs = g_p_deriv_form(p, a) - base
        # h is even, so h^{(p+1)}(-a) = (-1)^{p+1} h^{(p+1)}(a); check via mpmath at -a
        mpmath.mp.dps = 40
        h = lambda x: sum(mpmath.bernoulli(n) * x ** (n - 2) / mpmath.factorial(n) for n in range(2, 60))
        rhs = float((-1) ** (p + 1) * mpmath.diff(h, -a, p + 1)) - base
        assert rhs == pytest.approx((-1) ** (p + 1) * lhs, abs=1e-14)
        assert correction_orders(p)[0] == (1 if p % 2 == 0 else 2)


def test_regularized_energy():
    assert eps_c_zero_regularized(0.5) == g_p_numeric(1, 0.5)
    assert abs(eps_c_zero_regularized(0.5) + 1 / 360) > 1e-5
    vals = [eps_c_zero_regularized(a) for a in DEFAULT_ALPHAS]
    assert abs(richardson_limit(DEFAULT_ALPHAS, vals, (1, 2)) + 1 / 360) < 1e-6
    assert abs(extrapolate_g_p(1) + 1 / 360) < 1e-6


@pytest.mark.parametrize("p", range(9))
def test_extrapolation_recovers_exact(p):
    assert abs(extrapolate_g_p(p) - float(g_p_exact(p))) < 1e-6


def test_mode_count_invariance():
    assert g_p_exact(0) == 0
    assert abs(extrapolate_g_p(0, (0.25, 0.125, 0.0625))) < 1e-8


def test_richardson_exact_on_model():
    alphas = (0.5, 0.25, 0.125)
    vals = [3.0 + 2.0 * a - 5.0 * a ** 3 for a in alphas]
    assert richardson_limit(alphas, vals, (1, 3)) == pytest.approx(3.0, abs=1e-13)
    with pytest.raises(ValueError):
        richardson_limit(alphas, vals, (1,))
    with pytest.raises(ValueError):
        richardson_limit((0.5, 0.5, 0.25), vals, (1, 2))


def test_cancellation_error_binary64():
    with pytest.raises(CancellationError):
        g_p_numeric(8, 0.125, SeriesControl(tol=1e-14), extended=False)
    # a looser tolerance accepts the same evaluation
    g_p_numeric(1, 0.125, SeriesControl(tol=1e-8), extended=False)


def test_p_range():
    with pytest.raises(ValueError):
        g_p_numeric(9, 0.5)
    with pytest.raises(ValueError):
        g_p_deriv_form(-1, 0.5)
    with pytest.raises(ValueError):
        g_p_exact(-1)
