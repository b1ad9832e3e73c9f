"""Thermal mode sums: an evaluation route independent of :mod:`core`.

Energies come from the occupation integrals

    f(m) = int_m^inf y^2 / (e^{eta y} - 1) dy,      eta = T_c / T = pi / t

summed over plate modes (``f(0)/2 + sum_m f(m)``) and integrated over a
continuum of modes for the free reference.  The free energy uses

    F(m) = int_m^inf x ln(1 - e^{-eta x}) dx.

Both integrals have closed forms in ``Li_1..Li_3`` of ``e^{-eta m}``.

Normalisation notes:

* Thermal energies carry an overall factor 2 for the two photon
  polarisations.  Without it the free-space energy density is half the
  Stefan-Boltzmann value and ``eps = phi - t dphi/dt`` fails.
* The free-energy mode sum has prefactor ``k_B T / (2 pi d)``; a stray
  ``hbar c`` in the textbook form is dimensionally wrong.  Against the
  energy-density scale ``D`` this reduces to ``2 t / pi``.
* ``int_0^inf x^2 ln(1 - e^{-eta x}) dx = -2 zeta(4) / eta^3``.  The
  integrand is negative and the power of eta follows from scaling.
"""
import math
from dataclasses import dataclass

from . import _config
from .core import DEFAULT_CONTROL, SeriesConvergenceError, eps_c_zero
from .specialfn import polylog, zeta_int

__all__ = [
    "ThermalKernel",
    "f_therm",
    "u_prime_constrained",
    "u_prime_free",
    "eps_c_oracle",
    "kirchhoff_extract",
    "F_free",
    "phi_c_oracle",
]


@dataclass(frozen=True)
class ThermalKernel:
    """Reduced temperature ``t > 0`` and the matching ``eta = pi / t``."""

    t: float

    def __post_init__(self):
        t = float(self.t)
        if not (t > 0.0 and math.isfinite(t)):
            raise ValueError(f"thermal kernel needs finite t > 0, got {self.t}")
        object.__setattr__(self, "t", t)

    @property
    def eta(self):
        return math.pi / self.t


def _kernel(k):
    return k if isinstance(k, ThermalKernel) else ThermalKernel(k)


def f_therm(m, k):
    """``int_m^inf y^2 n(y) dy`` with Bose occupation ``n(y) = 1/(e^{eta y} - 1)``."""
    k = _kernel(k)
    eta = k.eta
    if m < 0:
        raise ValueError(f"m must be >= 0, got {m}")
    if m == 0:
        return 2.0 * zeta_int(3) / eta ** 3
    em = eta * m
    x = math.exp(-em)
    if x == 0.0:
        return 0.0
    return math.fsum([em * em * polylog(1, x), 2.0 * em * polylog(2, x), 2.0 * polylog(3, x)]) / eta ** 3


def F_free(m, k):
    """``int_m^inf x ln(1 - e^{-eta x}) dx`` (negative)."""
    k = _kernel(k)
    eta = k.eta
    if m < 0:
        raise ValueError(f"m must be >= 0, got {m}")
    if m == 0:
        return -zeta_int(3) / eta ** 2
    x = math.exp(-eta * m)
    if x == 0.0:
        return 0.0
    return -(m / eta) * polylog(2, x) - polylog(3, x) / eta ** 2


def _mode_sum(func, k, ctl):
    # func(0)/2 + sum_{m>=1} func(m), cut at eta*m > THERMAL_EXP_CUTOFF
    eta = k.eta
    terms = [0.5 * func(0, k)]
    m = 1
    while eta * m <= _config.THERMAL_EXP_CUTOFF:
        if m > ctl.max_terms:
            raise SeriesConvergenceError(
                f"mode sum at t={k.t} exceeded max_terms={ctl.max_terms}", t=k.t)
        term = func(m, k)
        terms.append(term)
        if abs(term) < ctl.tol * 1e-3:
            break
        m += 1
    return terms


def u_prime_constrained(k, ctl=DEFAULT_CONTROL):
    """Thermal energy density between the plates, both polarisations."""
    k = _kernel(k)
    return 2.0 * math.fsum(_mode_sum(f_therm, k, ctl))


def u_prime_free(k):
    """Thermal energy density without plates: ``2 * 6 zeta(4) / eta^4 = 2 t^4 / 15``."""
    k = _kernel(k)
    return 2.0 * 6.0 * zeta_int(4) / k.eta ** 4


def eps_c_oracle(t, ctl=DEFAULT_CONTROL):
    """``eps_c(0) + u'(d, T) - u'(inf, T)``."""
    k = _kernel(t)
    terms = [2.0 * v for v in _mode_sum(f_therm, k, ctl)]
    terms.append(-u_prime_free(k))
    terms.append(eps_c_zero())
    return math.fsum(terms)


def kirchhoff_extract(t_large, ctl=DEFAULT_CONTROL):
    """Estimate ``eps_c(0)`` from convergent thermal sums alone.

    The plate-minus-free thermal energy tends to ``-eps_c(0)`` at high
    temperature; the residual is ``|eps_c(t_large)|``, exponentially small.
    """
    k = _kernel(t_large)
    if k.t < 3.0:
        raise ValueError(f"t_large must be >= 3 for the exponential regime, got {k.t}")
    terms = [2.0 * v for v in _mode_sum(f_therm, k, ctl)]
    terms.append(-u_prime_free(k))
    return -math.fsum(terms)


def phi_c_oracle(t, ctl=DEFAULT_CONTROL):
    """``eps_c(0) + (2t/pi) [F(0)/2 + sum_m F(m) - int_0^inf F(m) dm]``."""
    k = _kernel(t)
    integral = -2.0 * zeta_int(4) / k.eta ** 3
    bracket = _mode_sum(F_free, k, ctl)
    bracket.append(-integral)
    return math.fsum([eps_c_zero(), 2.0 * k.t / math.pi * math.fsum(bracket)])
