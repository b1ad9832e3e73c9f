"""Casimir-effect thermodynamics between two ideal parallel plates."""

__version__ = "0.1.0"

from .core import (  # noqa: E402
    DEFAULT_CONTROL,
    CasimirPoint,
    SeriesControl,
    SeriesConvergenceError,
    curve,
    eps_c,
    eps_c_zero,
    phi_c,
    point,
    sigma_c,
)
from .estimator import CasimirThermodynamics, PlateObservables  # noqa: E402
from .modesum import eps_c_oracle, kirchhoff_extract, phi_c_oracle  # noqa: E402
from .physical import PlateConfig, PhysicalReport, report  # noqa: E402
from .regular import g_p_deriv_form, g_p_exact, g_p_numeric  # noqa: E402
