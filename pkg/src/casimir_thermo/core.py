"""Dimensionless Casimir energy, free energy and entropy between ideal plates.

The reduced temperature is ``t = pi T / T_c`` with ``k_B T_c = hbar c pi / d``.
Both series run over ``mu = 2 pi m``::

    eps_c(t) = -4 t^3 sum_m coth(t mu) csch^2(t mu) / mu
    phi_c(t) = -2 t   sum_m [coth(t mu) + t mu csch^2(t mu)] / mu^3
    phi_c    = eps_c - t sigma_c

Each sum is truncated by an explicit tail bound (factor-2 margin) rather
than by watching the terms.
"""
import math
from dataclasses import dataclass

import numpy as np

from . import _config
from .specialfn import zeta_int

__all__ = [
    "SeriesControl",
    "SeriesConvergenceError",
    "CasimirPoint",
    "DEFAULT_CONTROL",
    "eps_c_zero",
    "eps_c",
    "phi_c",
    "sigma_c",
    "point",
    "curve",
]

TWO_PI = 2.0 * math.pi
SIGMA_LOW_T = _config.SIGMA_LOW_T
EPS_C_ZERO = -1.0 / 360.0


class SeriesConvergenceError(ArithmeticError):
    """A series hit ``max_terms`` before its tail bound met ``tol``."""

    def __init__(self, message, bound=None, t=None):
        super().__init__(message)
        self.bound = bound
        self.t = t


@dataclass(frozen=True)
class SeriesControl:
    """Absolute truncation tolerance and term cap for every infinite sum."""

    tol: float = _config.DEFAULT_TOL
    max_terms: int = _config.DEFAULT_MAX_TERMS

    def __post_init__(self):
        if not (self.tol > 0.0 and math.isfinite(self.tol)):
            raise ValueError(f"tol must be positive and finite, got {self.tol}")
        if int(self.max_terms) != self.max_terms or self.max_terms < 1:
            raise ValueError(f"max_terms must be a positive integer, got {self.max_terms}")


DEFAULT_CONTROL = SeriesControl()


@dataclass(frozen=True)
class CasimirPoint:
    """The three dimensionless observables at one reduced temperature."""

    t: float
    eps_c: float
    phi_c: float
    sigma_c: float

    def __post_init__(self):
        slack = 1e-12
        if not (self.phi_c <= self.eps_c + slack and self.eps_c <= slack):
            raise ValueError(f"ordering phi_c <= eps_c <= 0 violated at t={self.t}")
        if self.sigma_c < -slack:
            raise ValueError(f"negative entropy at t={self.t}")
        if self.eps_c < EPS_C_ZERO - slack:
            raise ValueError(f"eps_c below the zero-temperature value at t={self.t}")
        if abs(self.phi_c - (self.eps_c - self.t * self.sigma_c)) > slack:
            raise ValueError(f"phi_c != eps_c - t sigma_c at t={self.t}")


def _check_t(t):
    t = float(t)
    if not (t >= 0.0 and math.isfinite(t)):
        raise ValueError(f"reduced temperature must be finite and >= 0, got {t}")
    return t


def eps_c_zero():
    """Zero-temperature Casimir energy density, ``-4 zeta(4) / (2 pi)^4 = -1/360``."""
    value = -4.0 * zeta_int(4) / TWO_PI ** 4
    assert abs(value - EPS_C_ZERO) < 1e-15, value
    return value


def _hyperbolic(z):
    q = np.exp(-2.0 * z)
    den = -np.expm1(-2.0 * z)
    return q, den


_SMALL_Z = 1e-4


def _energy_shape(z):
    """``z^3 coth z csch^2 z``: equals 1 at z = 0, decays like ``4 z^3 e^{-2z}``."""
    small = z < _SMALL_Z
    zs = np.where(small, 1.0, z)
    q, den = _hyperbolic(zs)
    with np.errstate(over="ignore", invalid="ignore"):
        big = np.where(q > 0.0, zs ** 3 * (1.0 + q) * 4.0 * q / den ** 3, 0.0)
    return np.where(small, 1.0 - z ** 4 / 15.0, big)


def _free_shape(z):
    """``z (coth z - 1) + z^2 csch^2 z``: equals 2 at z = 0, decays exponentially."""
    small = z < _SMALL_Z
    zs = np.where(small, 1.0, z)
    q, den = _hyperbolic(zs)
    with np.errstate(over="ignore", invalid="ignore"):
        big = np.where(q > 0.0, 2.0 * zs * q / den + 4.0 * zs * zs * q / (den * den), 0.0)
    return np.where(small, 2.0 - z + 2.0 * z ** 4 / 45.0, big)


def _sum_until(block_terms, ctl, t, what):
    """Accumulate blocks of ``(terms, tails)`` until a tail bound is below tol.

    ``block_terms(m)`` returns the terms for indices ``m`` and, for each,
    an upper bound on the absolute sum of all later terms.
    """
    kept = []
    start = 1
    last_bound = math.inf
    while start <= ctl.max_terms:
        stop = min(start + _config.SERIES_BLOCK, ctl.max_terms + 1)
        m = np.arange(start, stop, dtype=float)
        terms, tails = block_terms(m)
        done = np.nonzero(tails < ctl.tol)[0]
        if done.size:
            kept.extend(terms[: done[0] + 1].tolist())
            return math.fsum(kept)
        kept.extend(terms.tolist())
        last_bound = float(tails[-1])
        start = stop
    raise SeriesConvergenceError(
        f"{what} series at t={t} reached max_terms={ctl.max_terms} "
        f"with tail bound {last_bound:.3e} > tol={ctl.tol:.1e}",
        bound=last_bound,
        t=t,
    )


def eps_c(t, ctl=DEFAULT_CONTROL):
    """Casimir energy density ``eps_c(t)`` (dimensionless)."""
    t = _check_t(t)
    if t == 0.0:
        return eps_c_zero()
    # a_m = -4 t^3 coth(z) csch^2(z) / mu = -4/(2 pi)^4 * shape(z) / m^4
    pref = 4.0 / TWO_PI ** 4
    # |a_{m+1}| <= e^{-4 pi t} |a_m|, so the tail after m is <= |a_m| / expm1(4 pi t)
    x = 2.0 * TWO_PI * t
    geo = math.exp(-x) / -math.expm1(-x)
    # shape <= 1, so the tail after m is <= pref / (3 m^3)

    def block(m):
        a = -pref * _energy_shape(TWO_PI * t * m) / m ** 4
        tails = 2.0 * np.minimum(np.abs(a) * geo, pref / (3.0 * m ** 3))
        return a, tails

    return _sum_until(block, ctl, t, "eps_c")


def _phi_excess(t, ctl):
    # sum_m 2/(2 pi)^4 shape(z_m) / m^4 >= 0
    pref = 2.0 / TWO_PI ** 4
    r = math.exp(-2.0 * TWO_PI * t)

    def block(m):
        c = pref * _free_shape(TWO_PI * t * m) / m ** 4
        # shape <= 2 bounds the power tail; successive ratios are <= e^{-4 pi t}(1 + 1/m)
        power = 2.0 * pref / (3.0 * m ** 3)
        rho = r * (1.0 + 1.0 / m)
        with np.errstate(divide="ignore", invalid="ignore"):
            geo = np.where(rho < 1.0, c * rho / (1.0 - rho), np.inf)
        return c, 2.0 * np.minimum(power, geo)

    return _sum_until(block, ctl, t, "phi_c")


def phi_c(t, ctl=DEFAULT_CONTROL):
    """Casimir free-energy density ``phi_c(t)`` (dimensionless).

    The bracket tends to 1, so ``sum 1/m^3 = zeta(3)`` is taken out exactly
    and only the excess over 1 is summed; it decays exponentially in m.
    """
    t = _check_t(t)
    if t == 0.0:
        return eps_c_zero()
    return _phi_from(t, _phi_excess(t, ctl))


def _phi_from(t, excess):
    return -math.fsum([2.0 * t / TWO_PI ** 3 * zeta_int(3), excess])


def _sigma_from(t, eps, excess):
    if t < SIGMA_LOW_T:
        z3 = zeta_int(3)
        return 3.0 * z3 * t ** 2 / math.pi ** 3 - 8.0 * t ** 3 / 45.0
    # limit + correction, so the rounded result inherits the monotonicity of the correction
    return math.fsum([zeta_int(3) / (4.0 * math.pi ** 3), math.fsum([eps, excess]) / t])


def sigma_c(t, ctl=DEFAULT_CONTROL):
    """Casimir entropy density ``sigma_c = (eps_c - phi_c) / t``; zero at ``t = 0``.

    Below ``SIGMA_LOW_T`` the difference is O(t^3) and the rounding error of
    the sums, divided by t, dominates, so the low-temperature expansion
    ``3 zeta(3) t^2 / pi^3 - 8 t^3 / 45`` is returned instead.  Its omitted
    terms are O(exp(-pi/t)), about 1e-14 relative at the switch.
    """
    t = _check_t(t)
    if t == 0.0:
        return 0.0
    if t < SIGMA_LOW_T:
        return _sigma_from(t, None, None)
    return _sigma_from(t, eps_c(t, ctl), _phi_excess(t, ctl))


def point(t, ctl=DEFAULT_CONTROL):
    """Evaluate all three observables at ``t``."""
    t = _check_t(t)
    if t == 0.0:
        e0 = eps_c_zero()
        return CasimirPoint(0.0, e0, e0, 0.0)
    e = eps_c(t, ctl)
    excess = _phi_excess(t, ctl)
    return CasimirPoint(t, e, _phi_from(t, excess), _sigma_from(t, e, excess))


def curve(t_min, t_max, steps, ctl=DEFAULT_CONTROL):
    """Evenly spaced :class:`CasimirPoint` records on ``[t_min, t_max]``, ascending in t."""
    t_min, t_max = float(t_min), float(t_max)
    if not 0.0 <= t_min < t_max:
        raise ValueError(f"need 0 <= t_min < t_max, got {t_min}, {t_max}")
    if int(steps) != steps or steps < 2:
        raise ValueError(f"steps must be an integer >= 2, got {steps}")
    out = []
    for t in np.linspace(t_min, t_max, int(steps)):
        try:
            out.append(point(float(t), ctl))
        except SeriesConvergenceError as exc:
            raise SeriesConvergenceError(f"at t={float(t)!r}: {exc}", exc.bound, float(t)) from exc
    return out
