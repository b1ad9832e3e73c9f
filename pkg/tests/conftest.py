import math

import mpmath
import pytest

from casimir_thermo.specialfn import zeta_int

ZETA3 = zeta_int(3)
HIGH_T_ENTROPY = ZETA3 / (4 * math.pi ** 3)


@pytest.fixture(autouse=True)
def _restore_mpmath_precision():
    # oracles raise mp.dps globally; keep that from leaking between tests
    dps = mpmath.mp.dps
    yield
    mpmath.mp.dps = dps


def eps_low_t(t):
    """Low-temperature closed form of eps_c; error grows like exp(-pi/t), ~1e-15 at t = 0.1."""
    return -1 / 360 + 2 * ZETA3 * t ** 3 / math.pi ** 3 - 2 * t ** 4 / 15


def phi_low_t(t):
    return -1 / 360 - ZETA3 * t ** 3 / math.pi ** 3 + 2 * t ** 4 / 45


def sigma_low_t(t):
    return 3 * ZETA3 * t ** 2 / math.pi ** 3 - 8 * t ** 3 / 45


def brute_eps(t, n_terms=200_000):
    """Plain float summation of the energy series, no tail bound."""
    total = []
    for m in range(1, n_terms + 1):
        z = 2 * math.pi * m * t
        if z > 100:
            break
        total.append(-4 * t ** 3 / (2 * math.pi * m) * math.cosh(z) / math.sinh(z) ** 3)
    return math.fsum(total)


def brute_phi(t, n_terms=200_000):
    total = []
    for m in range(1, n_terms + 1):
        mu = 2 * math.pi * m
        z = mu * t
        br = 1.0 if z > 100 else math.cosh(z) / math.sinh(z) + z / math.sinh(z) ** 2
        total.append(-2 * t / mu ** 3 * br)
    # remaining bracket is 1 to double precision: add the exact zeta tail
    tail = ZETA3 - math.fsum([m ** -3.0 for m in range(1, n_terms + 1)])
    return math.fsum(total) - 2 * t / (2 * math.pi) ** 3 * tail
