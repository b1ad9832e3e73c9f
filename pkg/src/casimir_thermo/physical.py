"""SI observables for a concrete pair of plates.

Scales used throughout::

    T_c = hbar c pi / (k_B d)          crossover temperature
    t   = k_B T d / (hbar c)           = pi T / T_c
    D   = hbar c pi^2 / (2 d^4)        energy-density scale

The zero-temperature pressure is ``-pi^2 hbar c / (240 d^4)``; restoring units
through ``D`` forces ``pi^2``, not a single power of pi.
"""
import math
import warnings
from dataclasses import dataclass, field

from .core import DEFAULT_CONTROL, eps_c_zero, point
from .modesum import u_prime_free
from .specialfn import zeta_int

__all__ = [
    "Constants",
    "CODATA2018",
    "PlateConfig",
    "PhysicalReport",
    "characteristic_temperature",
    "reduced_temperature",
    "energy_scale",
    "report",
    "casimir_force_zero_T",
    "free_thermal_energy_density",
    "classical_entropy",
]


@dataclass(frozen=True)
class Constants:
    hbar: float  # J s
    c: float  # m / s
    k_B: float  # J / K


CODATA2018 = Constants(hbar=1.054571817e-34, c=2.99792458e8, k_B=1.380649e-23)


@dataclass(frozen=True)
class PlateConfig:
    """Separation ``d`` and edge ``L`` in metres, temperature ``T`` in kelvin."""

    d: float
    L: float
    T: float = 0.0
    constants: Constants = field(default=CODATA2018)

    def __post_init__(self):
        for name in ("d", "L", "T"):
            value = float(getattr(self, name))
            if not math.isfinite(value):
                raise ValueError(f"{name} must be finite, got {value}")
            object.__setattr__(self, name, value)
        if self.d <= 0.0 or self.L <= 0.0:
            raise ValueError(f"plate geometry must be positive, got d={self.d}, L={self.L}")
        if self.T < 0.0:
            raise ValueError(f"temperature must be >= 0, got {self.T}")
        if self.L < self.d:
            raise ValueError(f"plate edge L={self.L} is smaller than the separation d={self.d}")
        if self.L < 10.0 * self.d:
            warnings.warn(
                f"L/d = {self.L / self.d:.3g}; the parallel-plate result assumes L >> d",
                stacklevel=3)


@dataclass(frozen=True)
class PhysicalReport:
    T_c: float  # K
    t: float
    D: float  # J / m^3
    E_c: float  # J
    F_c: float  # J
    S_c: float  # J / K
    pressure: float  # Pa


def characteristic_temperature(cfg):
    k = cfg.constants
    return k.hbar * k.c * math.pi / (k.k_B * cfg.d)


def reduced_temperature(cfg):
    k = cfg.constants
    return k.k_B * cfg.T * cfg.d / (k.hbar * k.c)


def energy_scale(cfg):
    """``D = hbar c pi^2 / (2 d^4)`` in J/m^3."""
    k = cfg.constants
    return k.hbar * k.c * math.pi ** 2 / (2.0 * cfg.d ** 4)


def report(cfg, ctl=DEFAULT_CONTROL):
    """Energy, free energy, entropy and pressure for ``cfg``.

    The pressure is ``-d(F_c/L^2)/dd`` at fixed ``T``.  Since ``t`` is
    proportional to ``d`` this reduces to ``D (2 phi_c + eps_c)``.
    """
    k = cfg.constants
    t = reduced_temperature(cfg)
    D = energy_scale(cfg)
    pt = point(t, ctl)
    volume = cfg.L ** 2 * cfg.d
    return PhysicalReport(
        T_c=characteristic_temperature(cfg),
        t=t,
        D=D,
        E_c=volume * D * pt.eps_c,
        F_c=volume * D * pt.phi_c,
        S_c=k.k_B * math.pi ** 2 * cfg.L ** 2 * pt.sigma_c / (2.0 * cfg.d ** 2),
        pressure=D * (2.0 * pt.phi_c + pt.eps_c),
    )


def casimir_force_zero_T(cfg):
    """Zero-temperature force ``(total N, per-area Pa)``; ``cfg.T`` is ignored."""
    k = cfg.constants
    per_area = -math.pi ** 2 * k.hbar * k.c / (240.0 * cfg.d ** 4)
    via_scale = 3.0 * energy_scale(cfg) * eps_c_zero()
    assert abs(per_area - via_scale) <= 1e-12 * abs(per_area), (per_area, via_scale)
    return cfg.L ** 2 * per_area, per_area


def free_thermal_energy_density(cfg):
    """Thermal energy density of the unconstrained field in J/m^3 (``D * 2 t^4 / 15``)."""
    t = reduced_temperature(cfg)
    if t == 0.0:
        return 0.0
    return energy_scale(cfg) * u_prime_free(t)


def classical_entropy(cfg):
    """High-temperature Casimir entropy ``k_B zeta(3) L^2 / (8 pi d^2)`` in J/K."""
    k = cfg.constants
    return k.k_B * zeta_int(3) * cfg.L ** 2 / (8.0 * math.pi * cfg.d ** 2)
