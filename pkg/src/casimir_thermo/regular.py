"""Exponential-cutoff regularisation and the ``g_p`` functionals.

With a cutoff ``exp(-alpha x)`` the regularised plate-minus-free moment is

    G_p(alpha) = 1/2 int_0^inf x^{p+1} e^{-alpha x} dx
                 + sum_{m>=1} int_m^inf x^{p+1} e^{-alpha x} dx
                 - int_0^inf dm int_m^inf x^{p+1} e^{-alpha x} dx
               = (-1)^{p+1} d^{p+1}/dalpha^{p+1} h(alpha),
    h(alpha)   = 1/(2 alpha) + 1/(alpha (e^alpha - 1)) - 1/alpha^2
               = sum_{n>=2} B_n alpha^{n-2} / n!

so ``g_p = lim G_p = B_{p+3} / ((p+3)(p+2))``: zero for every even ``p``,
``-1/360`` for ``p = 1``.  ``G_p(alpha) - g_p`` only contains powers of
alpha with the parity of ``p + 1``, which :func:`richardson_limit` exploits.
"""
import decimal
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import _config
from .core import DEFAULT_CONTROL
from .specialfn import bernoulli, upper_gamma_int

__all__ = [
    "CutoffParam",
    "CancellationError",
    "g_p_exact",
    "g_p_numeric",
    "g_p_deriv_form",
    "eps_c_zero_regularized",
    "correction_orders",
    "richardson_limit",
    "extrapolate_g_p",
    "P_MAX",
]

P_MAX = 8


class CancellationError(ArithmeticError):
    """The three-way difference in ``G_p`` would lose more than ``1/tol`` in binary64."""


@dataclass(frozen=True)
class CutoffParam:
    """Dimensionless cutoff ``alpha`` in ``(0, 1]``."""

    alpha: float

    def __post_init__(self):
        a = float(self.alpha)
        if not 0.0 < a <= 1.0:
            raise ValueError(f"cutoff alpha must lie in (0, 1], got {self.alpha}")
        object.__setattr__(self, "alpha", a)


def _alpha(a):
    return a.alpha if isinstance(a, CutoffParam) else CutoffParam(a).alpha


def _check_p(p):
    if int(p) != p or p < 0 or p > P_MAX:
        raise ValueError(f"p must be an integer in [0, {P_MAX}], got {p}")
    return int(p)


def g_p_exact(p):
    """``B_{p+3} / ((p+3)(p+2))`` as an exact fraction (any ``p >= 0``)."""
    if int(p) != p or p < 0:
        raise ValueError(f"p must be a nonnegative integer, got {p}")
    p = int(p)
    return bernoulli(p + 3) / ((p + 3) * (p + 2))


def _magnitude(p, alpha):
    return math.factorial(p + 2) / alpha ** (p + 3)


def g_p_numeric(p, a, ctl=DEFAULT_CONTROL, *, extended=True):
    """``G_p(alpha)`` from the three incomplete-gamma closed forms.

    The three pieces grow like ``alpha^-(p+3)`` while their difference stays
    O(1), so binary64 loses ``log10(magnitude)`` digits.  With
    ``extended=True`` (default) the pieces are evaluated in decimal
    arithmetic carrying enough extra digits to absorb that loss.  With
    ``extended=False`` the evaluation is binary64 and
    :class:`CancellationError` is raised once the magnitude exceeds
    ``1/ctl.tol``.
    """
    p = _check_p(p)
    alpha = _alpha(a)
    mag = _magnitude(p, alpha)
    if not extended:
        if mag > 1.0 / ctl.tol:
            raise CancellationError(
                f"G_{p}({alpha}) pieces reach {mag:.2e} > 1/tol={1.0 / ctl.tol:.1e}; "
                "use a larger alpha or extended=True")
        return _g_p_float(p, alpha)

    digits = 20 + int(math.log10(mag)) + 10
    with decimal.localcontext() as dctx:
        dctx.prec = digits
        return float(_g_p_decimal(p, decimal.Decimal(alpha)))


def _g_p_float(p, alpha):
    s = p + 2
    cutoff = _config.GAMMA_SUM_CUTOFF_BASE + _config.GAMMA_SUM_CUTOFF_PER_P * p
    terms = [0.5 * math.factorial(p + 1) / alpha ** s]
    m = 1
    while alpha * m <= cutoff:
        terms.append(upper_gamma_int(s, alpha * m) / alpha ** s)
        m += 1
    terms.append(-math.factorial(p + 2) / alpha ** (s + 1))
    return math.fsum(terms)


def _g_p_decimal(p, alpha):
    s = p + 2
    cutoff = _config.GAMMA_SUM_CUTOFF_BASE + _config.GAMMA_SUM_CUTOFF_PER_P * p
    scale = alpha ** s
    total = decimal.Decimal(math.factorial(p + 1)) / (2 * scale)
    m = 1
    while alpha * m <= cutoff:
        total += upper_gamma_int(s, alpha * m, exp=lambda x: x.exp()) / scale
        m += 1
    total -= decimal.Decimal(math.factorial(p + 2)) / (scale * alpha)
    return total


def g_p_deriv_form(p, a):
    """``(-1)^{p+1} h^{(p+1)}(alpha)`` by differentiating the Bernoulli series termwise."""
    p = _check_p(p)
    alpha = _alpha(a)
    k = p + 1
    terms = []
    n = k + 2  # lowest power alpha^{n-2} surviving k derivatives
    small_run = 0
    while True:
        b = bernoulli(n)
        if b:
            # d^k/dalpha^k alpha^{n-2} = (n-2)!/(n-2-k)! alpha^{n-2-k}
            coeff = b * Fraction(math.factorial(n - 2), math.factorial(n - 2 - k) * math.factorial(n))
            term = float(coeff) * alpha ** (n - 2 - k)
            terms.append(term)
            small_run = small_run + 1 if abs(term) < _config.DERIV_FORM_TERM_TOL else 0
            if small_run >= 2:
                break
        n += 1
        if n > 400:
            raise ArithmeticError(f"Bernoulli expansion for p={p}, alpha={alpha} did not converge")
    return (-1) ** k * math.fsum(terms)


def eps_c_zero_regularized(a, ctl=DEFAULT_CONTROL):
    """Regularised zero-temperature Casimir energy, identical to ``G_1(alpha)``."""
    return g_p_numeric(1, a, ctl)


def correction_orders(p, count=2):
    """Leading powers of alpha in ``G_p(alpha) - g_p``: odd for even p, even for odd p."""
    first = 1 if p % 2 == 0 else 2
    return tuple(first + 2 * i for i in range(count))


def richardson_limit(alphas, values, orders):
    """Fit ``L + sum_j c_j alpha^{orders[j]}`` through the points and return ``L``."""
    alphas = np.asarray(alphas, dtype=float)
    values = np.asarray(values, dtype=float)
    if alphas.shape != values.shape or alphas.ndim != 1:
        raise ValueError("alphas and values must be 1-d and of equal length")
    if len(alphas) != len(orders) + 1:
        raise ValueError(f"{len(orders)} correction orders need {len(orders) + 1} points")
    if len(set(alphas.tolist())) != len(alphas):
        raise ValueError("alphas must be distinct")
    design = np.column_stack([np.ones_like(alphas)] + [alphas ** o for o in orders])
    return float(np.linalg.solve(design, values)[0])


def extrapolate_g_p(p, alphas=(0.5, 0.25, 0.125), ctl=DEFAULT_CONTROL):
    """Richardson estimate of ``g_p`` from ``g_p_numeric`` at the given cutoffs."""
    p = _check_p(p)
    values = [g_p_numeric(p, a, ctl) for a in alphas]
    return richardson_limit(alphas, values, correction_orders(p, len(alphas) - 1))
