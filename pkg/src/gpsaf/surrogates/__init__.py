"""Surrogate models, metrics and the per-function ensemble."""

from .ensemble import ScaledTarget, SurrogateEnsemble, default_candidates, fit_ensemble
from .kriging import Kriging
from .metrics import ErrorEstimate, kendall_tau_distance, max_abs_error, update_error
from .plog import plog, plog_inv
from .rbf import RBF

__all__ = [
    "ErrorEstimate",
    "Kriging",
    "RBF",
    "ScaledTarget",
    "SurrogateEnsemble",
    "default_candidates",
    "fit_ensemble",
    "kendall_tau_distance",
    "max_abs_error",
    "plog",
    "plog_inv",
    "update_error",
]
