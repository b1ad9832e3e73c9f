"""Special functions and exact sequences used by the Casimir modules.

Bernoulli numbers follow the generating function ``y/(e^y - 1)``, so
``B_1 = -1/2``.  Flipping that convention silently flips the sign of every
odd-indexed ``g_p`` in :mod:`casimir_thermo.regular`.

All floating-point series are accumulated with :func:`math.fsum`.
"""
import math
import threading
from fractions import Fraction
from functools import lru_cache

from . import _config

__all__ = [
    "bernoulli",
    "bernoulli_table",
    "zeta_int",
    "polylog",
    "coth_scaled",
    "csch2_scaled",
    "bose",
    "upper_gamma_int",
]

_bernoulli_lock = threading.Lock()
_bernoulli_values = [Fraction(1)]


def _extend_bernoulli(n):
    # binomial recurrence: sum_{k=0}^{n} C(n+1, k) B_k = 0
    with _bernoulli_lock:
        while len(_bernoulli_values) <= n:
            m = len(_bernoulli_values)
            if m > 1 and m % 2 == 1:
                _bernoulli_values.append(Fraction(0))
                continue
            acc = Fraction(0)
            for k, b in enumerate(_bernoulli_values):
                if b:
                    acc += math.comb(m + 1, k) * b
            _bernoulli_values.append(-acc / (m + 1))


def bernoulli(n):
    """Return the exact Bernoulli number ``B_n`` as a :class:`~fractions.Fraction`.

    >>> bernoulli(1), bernoulli(4)
    (Fraction(-1, 2), Fraction(-1, 30))
    """
    n = int(n)
    if n < 0:
        raise ValueError(f"Bernoulli index must be nonnegative, got {n}")
    if n >= len(_bernoulli_values):
        _extend_bernoulli(n)
    return _bernoulli_values[n]


def bernoulli_table(n_max):
    """Tuple ``(B_0, ..., B_{n_max})``."""
    bernoulli(n_max)
    return tuple(_bernoulli_values[: n_max + 1])


@lru_cache(maxsize=None)
def zeta_int(n, tol=1e-17):
    """Riemann zeta at an integer ``n >= 2``.

    Even arguments use ``zeta(2k) = (-1)^(k+1) B_2k (2 pi)^2k / (2 (2k)!)``.
    Odd arguments use a short partial sum closed by an Euler-Maclaurin tail;
    the first omitted correction bounds the error and must fall below ``tol``
    (relative).
    """
    n = int(n)
    if n < 2:
        raise ValueError(f"zeta_int needs n >= 2, got {n}")
    if n % 2 == 0:
        k = n // 2
        b = abs(bernoulli(n))
        # exact rational prefactor before the single float multiply keeps ~1 ulp
        coeff = b * 2 ** (n - 1) / math.factorial(n)
        return float(coeff) * math.pi ** n

    N = _config.ZETA_PARTIAL_TERMS
    terms = [m ** -float(n) for m in range(1, N)]
    terms.append(N ** (1.0 - n) / (n - 1))
    terms.append(0.5 * N ** -float(n))
    rising = n  # (n)_{2k-1}, built incrementally
    k = 1
    while True:
        if k > 1:
            rising *= (n + 2 * k - 3) * (n + 2 * k - 2)
        corr = float(bernoulli(2 * k) * rising / math.factorial(2 * k)) * N ** (-n - 2 * k + 1)
        if k > _config.ZETA_EM_ORDER and abs(corr) < tol:
            break
        terms.append(corr)
        k += 1
        if k > 200:
            raise ArithmeticError(f"Euler-Maclaurin tail for zeta({n}) failed to converge")
    return math.fsum(terms)


def polylog(s, x):
    """``Li_s(x) = sum_{k>=1} x^k / k^s`` for ``s`` in 1..4 and ``0 <= x <= 1``."""
    if s not in (1, 2, 3, 4):
        raise ValueError(f"polylog order must be 1, 2, 3 or 4, got {s}")
    x = float(x)
    if not 0.0 <= x <= 1.0:
        raise ValueError(f"polylog argument must lie in [0, 1], got {x}")
    if s == 1:
        if x == 1.0:
            raise ValueError("Li_1 has a pole at x = 1")
        return -math.log1p(-x)
    if x == 1.0:
        return zeta_int(s)
    if x == 0.0:
        return 0.0

    terms = []
    xk = 1.0
    one_minus_x = 1.0 - x
    for k in range(1, _config.POLYLOG_MAX_TERMS + 1):
        xk *= x
        term = xk / k ** s
        terms.append(term)
        if xk == 0.0:
            break
        tail = xk * x / ((k + 1) ** s * one_minus_x)
        if tail <= _config.POLYLOG_REL_TOL * terms[0]:
            break
    else:
        raise ArithmeticError(f"polylog({s}, {x}) did not converge")
    return math.fsum(terms)


def _check_positive(z):
    z = float(z)
    if not z > 0.0:
        raise ValueError(f"argument must be positive, got {z}")
    return z


def coth_scaled(z):
    """coth z written through ``q = exp(-2 z)``; never overflows."""
    z = _check_positive(z)
    q = math.exp(-2.0 * z)
    return (1.0 + q) / -math.expm1(-2.0 * z)


def csch2_scaled(z):
    """csch^2 z written through ``q = exp(-2 z)``; never overflows."""
    z = _check_positive(z)
    q = math.exp(-2.0 * z)
    den = -math.expm1(-2.0 * z)
    return 4.0 * q / (den * den)


def bose(x):
    """``x / (e^x - 1)`` with ``bose(0) == 1``.

    Below ``BOSE_SERIES_SWITCH`` the Bernoulli series
    ``1 - x/2 + x^2/12 - x^4/720`` is used instead of the quotient.
    """
    x = float(x)
    if x < 0.0:
        raise ValueError(f"bose needs x >= 0, got {x}")
    if x < _config.BOSE_SERIES_SWITCH:
        x2 = x * x
        return 1.0 - 0.5 * x + x2 / 12.0 - x2 * x2 / 720.0
    return x / math.expm1(x)


def upper_gamma_int(s, x, exp=math.exp):
    """Upper incomplete gamma ``Gamma(s, x)`` for integer ``s >= 1``.

    Runs the recurrence ``Gamma(k+1, x) = k Gamma(k, x) + x^k e^{-x}`` from
    ``Gamma(1, x) = e^{-x}``.  ``exp`` lets callers supply an extended-precision
    exponential together with matching number types.
    """
    if s < 1:
        raise ValueError(f"integer order must be >= 1, got {s}")
    ex = exp(-x)
    g = ex
    xk = 1
    for k in range(1, s):
        xk = xk * x
        g = k * g + xk * ex
    return g
