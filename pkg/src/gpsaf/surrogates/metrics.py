"""Surrogate accuracy metrics and the moving-average error tracker."""

from collections import deque

import numpy as np

from ..exceptions import ContractViolation, UndefinedMetricError


def kendall_tau_distance(pred, truth):
    """Fraction of discordant pairs; pairs tied in either vector count half."""
    pred = np.asarray(pred, dtype=float).ravel()
    truth = np.asarray(truth, dtype=float).ravel()
    if pred.shape != truth.shape:
        raise ContractViolation("pred and truth must have equal length")
    n = len(pred)
    if n < 2:
        raise UndefinedMetricError("Kendall tau distance needs at least two values")
    i, j = np.triu_indices(n, k=1)
    dp = np.sign(pred[i] - pred[j])
    dt = np.sign(truth[i] - truth[j])
    tied = (dp == 0) | (dt == 0)
    discordant = (dp * dt) < 0
    return float((discordant.sum() + 0.5 * tied.sum()) / len(i))


def max_abs_error(pred, truth):
    pred = np.asarray(pred, dtype=float)
    truth = np.asarray(truth, dtype=float)
    if pred.shape != truth.shape:
        raise ContractViolation("pred and truth must have equal shape")
    return float(np.max(np.abs(pred - truth)))


class ErrorEstimate:
    """Per-function moving averages of prediction error.

    ``mae`` windows hold the maximum absolute error of each batch; ``tau``
    windows hold Kendall tau distances of batches with at least two points.
    The smoothed error ``e`` is the arithmetic mean of each ``mae`` window.
    """

    def __init__(self, n_functions, window=5):
        self.n_functions = n_functions
        self.window = window
        self.mae = [deque(maxlen=window) for _ in range(n_functions)]
        self.tau = [deque(maxlen=window) for _ in range(n_functions)]

    @property
    def e(self):
        return np.array([np.mean(w) if len(w) else 0.0 for w in self.mae])

    @property
    def tau_mean(self):
        return np.array([np.mean(w) if len(w) else np.nan for w in self.tau])

    def push(self, i, mae, tau=None):
        if mae < 0:
            raise ContractViolation("error entries must be non-negative")
        self.mae[i].append(float(mae))
        if tau is not None:
            self.tau[i].append(float(tau))

    def update(self, truth, pred):
        """Push one batch; columns are functions (objectives then constraints)."""
        truth = np.atleast_2d(np.asarray(truth, dtype=float))
        pred = np.atleast_2d(np.asarray(pred, dtype=float))
        if truth.shape != pred.shape or truth.shape[1] != self.n_functions or len(truth) < 1:
            raise ContractViolation("truth and prediction batches are misaligned")
        for i in range(self.n_functions):
            tau = kendall_tau_distance(pred[:, i], truth[:, i]) if len(truth) >= 2 else None
            self.push(i, max_abs_error(pred[:, i], truth[:, i]), tau)
        return self


def update_error(estimate, F, G, F_hat, G_hat):
    """Functional form of :meth:`ErrorEstimate.update` on split F/G arrays."""
    truth = np.hstack([np.atleast_2d(F), np.asarray(G, dtype=float).reshape(len(np.atleast_2d(F)), -1)])
    pred = np.hstack([np.atleast_2d(F_hat), np.asarray(G_hat, dtype=float).reshape(len(np.atleast_2d(F_hat)), -1)])
    return estimate.update(truth, pred)
