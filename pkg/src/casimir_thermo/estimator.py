"""scikit-learn wrappers so the Casimir observables drop into pipelines.

Both transformers are stateless: ``fit`` only validates input and records
``n_features_in_``.
"""
import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_array, check_is_fitted

from .core import SeriesControl, point
from .physical import PlateConfig, report

__all__ = ["CasimirThermodynamics", "PlateObservables"]

_DIMLESS = ("eps_c", "phi_c", "sigma_c")
_SI = ("T_c", "t", "D", "E_c", "F_c", "S_c", "pressure")


def _check_finite_nonneg(X, name):
    if np.any(X < 0):
        raise ValueError(f"{name} must be nonnegative")


class CasimirThermodynamics(TransformerMixin, BaseEstimator):
    """Map reduced temperatures ``t`` (one column) to ``eps_c, phi_c, sigma_c``.

    Parameters
    ----------
    tol : float
        Absolute truncation tolerance of the series.
    max_terms : int
        Term cap per series evaluation.
    observables : tuple of str
        Subset and order of ``("eps_c", "phi_c", "sigma_c")`` to emit.
    """

    def __init__(self, tol=1e-14, max_terms=1_000_000, observables=_DIMLESS):
        self.tol = tol
        self.max_terms = max_terms
        self.observables = observables

    def _validate(self):
        unknown = set(self.observables) - set(_DIMLESS)
        if unknown or not self.observables:
            raise ValueError(f"observables must be drawn from {_DIMLESS}, got {self.observables}")
        return SeriesControl(self.tol, self.max_terms)

    def fit(self, X, y=None):
        self._validate()
        X = check_array(X, ensure_2d=True, dtype=np.float64)
        if X.shape[1] != 1:
            raise ValueError(f"expected a single column of reduced temperatures, got {X.shape[1]}")
        _check_finite_nonneg(X, "reduced temperature")
        self.n_features_in_ = 1
        return self

    def transform(self, X):
        check_is_fitted(self, "n_features_in_")
        ctl = self._validate()
        X = check_array(X, ensure_2d=True, dtype=np.float64)
        if X.shape[1] != self.n_features_in_:
            raise ValueError(f"X has {X.shape[1]} features, expected {self.n_features_in_}")
        _check_finite_nonneg(X, "reduced temperature")
        out = np.empty((X.shape[0], len(self.observables)))
        for i, t in enumerate(X[:, 0]):
            pt = point(float(t), ctl)
            out[i] = [getattr(pt, name) for name in self.observables]
        return out

    def get_feature_names_out(self, input_features=None):
        return np.asarray(self.observables, dtype=object)


class PlateObservables(TransformerMixin, BaseEstimator):
    """Map rows ``(d [m], L [m], T [K])`` to SI Casimir observables.

    Output columns follow ``("T_c", "t", "D", "E_c", "F_c", "S_c", "pressure")``.
    """

    def __init__(self, tol=1e-14, max_terms=1_000_000):
        self.tol = tol
        self.max_terms = max_terms

    def fit(self, X, y=None):
        X = check_array(X, dtype=np.float64)
        if X.shape[1] != 3:
            raise ValueError(f"expected columns (d, L, T), got {X.shape[1]} columns")
        self.n_features_in_ = 3
        return self

    def transform(self, X):
        check_is_fitted(self, "n_features_in_")
        ctl = SeriesControl(self.tol, self.max_terms)
        X = check_array(X, dtype=np.float64)
        if X.shape[1] != self.n_features_in_:
            raise ValueError(f"X has {X.shape[1]} features, expected {self.n_features_in_}")
        out = np.empty((X.shape[0], len(_SI)))
        for i, (d, L, T) in enumerate(X):
            r = report(PlateConfig(d, L, T), ctl)
            out[i] = [getattr(r, name) for name in _SI]
        return out

    def get_feature_names_out(self, input_features=None):
        return np.asarray(_SI, dtype=object)
