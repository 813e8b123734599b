"""Per-function model ensembles with rank-based model selection."""

from collections import deque

import numpy as np
from scipy.linalg import LinAlgError
from sklearn.base import BaseEstimator, RegressorMixin, clone
from sklearn.exceptions import NotFittedError
from sklearn.model_selection import KFold
from sklearn.utils.validation import check_is_fitted, validate_data

from ..exceptions import EnsembleFitError, NumericInputError
from .kriging import Kriging
from .metrics import kendall_tau_distance, max_abs_error
from .plog import plog, plog_inv
from .rbf import RBF

_FIT_ERRORS = (LinAlgError, ValueError, FloatingPointError, NumericInputError)


class ScaledTarget(RegressorMixin, BaseEstimator):
    """Standardize (and optionally log-squash) the target around a regressor.

    Unlike ``TransformedTargetRegressor`` the inner regressor is cloned only
    once, so estimators with ``warm_start`` keep their state across refits.
    """

    def __init__(self, regressor, log_transform=False):
        self.regressor = regressor
        self.log_transform = log_transform

    def fit(self, X, y):
        X, y = validate_data(self, X, y, y_numeric=True)
        z = plog(y) if self.log_transform else y
        self.mean_ = float(np.mean(z))
        self.scale_ = float(np.std(z)) or 1.0
        if not hasattr(self, "regressor_"):
            self.regressor_ = clone(self.regressor)
        self.regressor_.fit(X, (z - self.mean_) / self.scale_)
        return self

    def predict(self, X):
        check_is_fitted(self, "regressor_")
        X = validate_data(self, X, reset=False)
        z = self.regressor_.predict(X) * self.scale_ + self.mean_
        if not self.log_transform:
            return z
        with np.errstate(over="ignore"):
            return plog_inv(z)


def default_candidates(n_starts=3, random_state=None):
    """Named candidate models shared by every function."""
    out = []
    for kernel in ("cubic", "gaussian", "thin_plate"):
        for tail in (0, 1):
            out.append((f"rbf-{kernel}-{tail}", RBF(kernel=kernel, tail=tail)))
    for regression in ("constant", "linear"):
        out.append((f"kriging-{regression}",
                    Kriging(regression=regression, n_starts=n_starts, warm_start=True,
                            random_state=random_state)))
    return out


class _Slot:
    """Candidates, fitted models and metric windows of one function."""

    def __init__(self, candidates, window):
        self.names = [name for name, _, _ in candidates]
        self.is_plog = [plog_ for (_, _, plog_) in candidates]
        self.models = [ScaledTarget(model, log_transform=p) for _, model, p in candidates]
        self.tau = [deque(maxlen=window) for _ in candidates]
        self.mae = [deque(maxlen=window) for _ in candidates]
        self.ok = [False] * len(candidates)
        self.cv_mae = [np.inf] * len(candidates)
        self.selected = None

    def score(self, k):
        tau = np.mean(self.tau[k]) if self.tau[k] else np.inf
        mae = np.mean(self.mae[k]) if self.mae[k] else np.inf
        return tau, mae

    def select(self):
        keys = []
        for k in range(len(self.models)):
            if self.ok[k]:
                tau, mae = self.score(k)
                keys.append((tau, self.is_plog[k], mae, k))
        if not keys:
            return None
        self.selected = min(keys)[-1]
        return self.selected


class SurrogateEnsemble:
    """One independently selected surrogate per objective and constraint.

    Designs are mapped to the unit box of ``lower``/``upper`` before
    modelling. Each function owns the same candidate grid; constraint
    functions additionally get log-squashed twins. The model used for
    prediction minimizes the windowed Kendall tau distance, then the
    windowed maximum absolute error. Metrics of the first fit come from
    ``n_folds``-fold cross-validation; afterwards :meth:`update_metrics`
    scores every candidate on each newly evaluated batch.

    Parameters
    ----------
    lower, upper : array-like
        Design-space bounds.
    n_obj, n_constr : int
    window : int, default 5
        Length of the metric moving averages.
    n_folds : int, default 5
    n_starts : int, default 3
        Likelihood-search starts of cold Kriging fits.
    random_state : int or None
    """

    def __init__(self, lower, upper, n_obj, n_constr, window=5, n_folds=5, n_starts=3,
                 random_state=None):
        self.lower = np.asarray(lower, dtype=float)
        self.upper = np.asarray(upper, dtype=float)
        self.n_obj = int(n_obj)
        self.n_constr = int(n_constr)
        self.window = window
        self.n_folds = n_folds
        self.n_starts = n_starts
        self.random_state = random_state
        self.slots = []
        for i in range(self.n_functions):
            base = default_candidates(n_starts, random_state)
            cands = [(name, model, False) for name, model in base]
            if i >= self.n_obj:
                cands += [(f"plog-{name}", clone(model), True) for name, model in base]
            self.slots.append(_Slot(cands, window))
        self.n_fits_ = 0

    @classmethod
    def for_problem(cls, problem, **kwargs):
        return cls(problem.lower, problem.upper, problem.n_obj, problem.n_constr, **kwargs)

    @property
    def n_functions(self):
        return self.n_obj + self.n_constr

    def _normalize(self, X):
        X = np.atleast_2d(np.asarray(X, dtype=float))
        return (X - self.lower) / (self.upper - self.lower)

    def _targets(self, F, G, n):
        F = np.asarray(F, dtype=float).reshape(n, self.n_obj)
        G = np.asarray(G if G is not None else np.empty((n, 0)), dtype=float).reshape(n, self.n_constr)
        return np.hstack([F, G])

    def _cross_validate(self, slot, Z, y):
        folds = KFold(n_splits=min(self.n_folds, len(Z)), shuffle=True,
                      random_state=self.random_state)
        for k, model in enumerate(slot.models):
            oof = np.empty(len(y))
            try:
                for train, test in folds.split(Z):
                    oof[test] = clone(model).fit(Z[train], y[train]).predict(Z[test])
            except _FIT_ERRORS:
                continue
            if not np.all(np.isfinite(oof)):
                continue
            slot.cv_mae[k] = max_abs_error(oof, y)
            slot.tau[k].append(kendall_tau_distance(oof, y))
            slot.mae[k].append(slot.cv_mae[k])

    def fit(self, X, F, G=None):
        """Fit every candidate on all data and select one model per function."""
        Z = self._normalize(X)
        Y = self._targets(F, G, len(Z))
        if len(Z) < Z.shape[1] + 2:
            raise EnsembleFitError("surrogates need at least n_var + 2 designs")
        first = self.n_fits_ == 0
        for i, slot in enumerate(self.slots):
            y = Y[:, i]
            if first:
                self._cross_validate(slot, Z, y)
            for k, model in enumerate(slot.models):
                try:
                    model.fit(Z, y)
                    slot.ok[k] = bool(np.all(np.isfinite(model.predict(Z[:1]))))
                except _FIT_ERRORS:
                    slot.ok[k] = False
            if slot.select() is None:
                raise EnsembleFitError(f"every candidate failed for function {i}")
        self.n_fits_ += 1
        return self

    def _check_fitted(self):
        if self.n_fits_ == 0:
            raise NotFittedError("the ensemble must be fitted before predicting")

    def predict_all(self, X):
        """Predictions of the selected models, one column per function."""
        self._check_fitted()
        Z = self._normalize(X) if np.size(X) else np.empty((0, len(self.lower)))
        out = np.empty((len(Z), self.n_functions))
        if len(Z):
            for i, slot in enumerate(self.slots):
                out[:, i] = slot.models[slot.selected].predict(Z)
        return out

    def predict(self, X):
        """Return ``(F_hat, G_hat)`` for a batch of designs."""
        Y = self.predict_all(X)
        return Y[:, : self.n_obj], Y[:, self.n_obj:]

    def update_metrics(self, X, F, G=None):
        """Score every fitted candidate on a batch of newly evaluated designs.

        Call before refitting so the batch is genuinely out of sample.
        """
        self._check_fitted()
        Z = self._normalize(X)
        Y = self._targets(F, G, len(Z))
        for i, slot in enumerate(self.slots):
            for k, model in enumerate(slot.models):
                if not slot.ok[k]:
                    continue
                pred = model.predict(Z)
                if not np.all(np.isfinite(pred)):
                    continue
                slot.mae[k].append(max_abs_error(pred, Y[:, i]))
                if len(Z) >= 2:
                    slot.tau[k].append(kendall_tau_distance(pred, Y[:, i]))
        return self

    @property
    def selected_names(self):
        return [slot.names[slot.selected] if slot.selected is not None else None
                for slot in self.slots]

    def selected_cv_error(self):
        """Cross-validated maximum absolute error of each selected model."""
        self._check_fitted()
        return np.array([slot.cv_mae[slot.selected] for slot in self.slots])


def fit_ensemble(archive, lower, upper, **kwargs):
    """Fit a fresh ensemble on every solution of ``archive``."""
    ens = SurrogateEnsemble(lower, upper, archive.n_obj, archive.n_constr, **kwargs)
    return ens.fit(archive.X, archive.F, archive.G)
