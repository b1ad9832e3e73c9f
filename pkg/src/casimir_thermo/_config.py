"""Branch-switch thresholds and series defaults shared across modules.

Kept in one place so tests can probe both sides of every switch.
"""

# bose(x) uses the Bernoulli series below this argument
BOSE_SERIES_SWITCH = 1e-2

# sigma_c switches to its low-temperature expansion below this t
SIGMA_LOW_T = 0.08

# polylog series stops once the tail bound drops below this fraction of the sum
POLYLOG_REL_TOL = 1e-17
POLYLOG_MAX_TERMS = 200_000

# Euler-Maclaurin setup for odd zeta values
ZETA_PARTIAL_TERMS = 16
ZETA_EM_ORDER = 12

# mode sums over thermal integrals stop once eta*m exceeds this
THERMAL_EXP_CUTOFF = 60.0

# g_p incomplete-gamma sums run until alpha*m > base + per_p * p
GAMMA_SUM_CUTOFF_BASE = 60.0
GAMMA_SUM_CUTOFF_PER_P = 10.0

# Bernoulli expansion of h(alpha) is truncated below this term magnitude
DERIV_FORM_TERM_TOL = 1e-18

# block length for vectorised series evaluation in core
SERIES_BLOCK = 512

DEFAULT_TOL = 1e-14
DEFAULT_MAX_TERMS = 1_000_000
