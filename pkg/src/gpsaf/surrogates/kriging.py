"""Kriging with a Gaussian correlation and maximum likelihood length scales."""

import numpy as np
from scipy.linalg import LinAlgError, cholesky, qr, solve_triangular
from scipy.optimize import minimize
from sklearn.base import BaseEstimator, RegressorMixin
from sklearn.utils import check_random_state
from sklearn.utils.validation import check_is_fitted, validate_data


def _regression_matrix(X, regression):
    if regression == "constant":
        return np.ones((len(X), 1))
    if regression == "linear":
        return np.hstack([np.ones((len(X), 1)), X])
    raise ValueError(f"unknown regression {regression!r}")


class Kriging(RegressorMixin, BaseEstimator):
    """Universal Kriging in the style of DACE.

    The correlation is ``exp(-sum_k theta_k (x_k - x'_k)^2)`` with one
    ``theta`` per input dimension, tuned by maximizing the concentrated
    log-likelihood with multi-start bounded Nelder-Mead in ``log10(theta)``.
    Targets are standardized internally.

    Parameters
    ----------
    regression : {"constant", "linear"}
        Trend basis: constant mean (ordinary Kriging) or first-order polynomial.
    theta_bounds : tuple of float, default (1e-3, 1e3)
    nugget : float, default 1e-10
    n_starts : int, default 3
    max_fev : int or None
        Likelihood evaluations per start; ``None`` means ``10 * (n_features + 1)``.
    warm_start : bool, default False
        When refitting, start a single search from the previous ``theta_``
        instead of the multi-start.
    random_state : int, Generator or None
    """

    def __init__(self, regression="constant", theta_bounds=(1e-3, 1e3), nugget=1e-10,
                 n_starts=3, max_fev=None, warm_start=False, random_state=None):
        self.regression = regression
        self.theta_bounds = theta_bounds
        self.nugget = nugget
        self.n_starts = n_starts
        self.max_fev = max_fev
        self.warm_start = warm_start
        self.random_state = random_state

    def _factor(self, theta, D, Fm, y, iu):
        n = len(y)
        R = np.empty((n, n))
        r = np.exp(-D @ theta)
        R[iu] = r
        R[iu[1], iu[0]] = r
        np.fill_diagonal(R, 1.0 + self.nugget)
        C = cholesky(R, lower=True, check_finite=False)
        Ft = solve_triangular(C, Fm, lower=True, check_finite=False)
        Yt = solve_triangular(C, y, lower=True, check_finite=False)
        Q, G = qr(Ft, mode="economic", check_finite=False)
        beta = solve_triangular(G, Q.T @ Yt, check_finite=False)
        resid = Yt - Ft @ beta
        sigma2 = float(resid @ resid) / n
        return C, beta, resid, sigma2

    def _objective(self, log_theta, D, Fm, y, iu):
        try:
            C, _, _, sigma2 = self._factor(10.0 ** log_theta, D, Fm, y, iu)
        except (LinAlgError, ValueError):
            return 1e20
        if not np.isfinite(sigma2) or sigma2 <= 0:
            return 1e20
        n = len(y)
        return n * np.log(sigma2) + 2.0 * np.sum(np.log(np.diag(C)))

    def fit(self, X, y):
        X, y = validate_data(self, X, y, y_numeric=True)
        n, d = X.shape
        Fm = _regression_matrix(X, self.regression)
        if n < Fm.shape[1] + 1:
            raise ValueError("too few samples for the regression basis")
        self.y_mean_ = float(y.mean())
        self.y_std_ = float(y.std()) or 1.0
        ys = (y - self.y_mean_) / self.y_std_

        iu = np.triu_indices(n, k=1)
        D = (X[iu[0]] - X[iu[1]]) ** 2
        lo, hi = np.log10(self.theta_bounds[0]), np.log10(self.theta_bounds[1])
        rng = self.random_state
        if not isinstance(rng, np.random.Generator):
            rng = check_random_state(rng)
        if self.warm_start and hasattr(self, "theta_") and len(self.theta_) == d:
            starts = [np.log10(self.theta_)]
        else:
            starts = [np.zeros(d)]
            while len(starts) < max(1, self.n_starts):
                starts.append(rng.uniform(-1.0, 2.0, size=d))
        max_fev = self.max_fev or 10 * (d + 1)

        best_x, best_f = None, np.inf
        for x0 in starts:
            x0 = np.clip(x0, lo, hi)
            res = minimize(self._objective, x0, args=(D, Fm, ys, iu), method="Nelder-Mead",
                           bounds=[(lo, hi)] * d,
                           options={"maxfev": max_fev, "xatol": 1e-3, "fatol": 1e-6})
            if res.fun < best_f:
                best_x, best_f = res.x, res.fun
        if not np.isfinite(best_f) or best_f >= 1e20:
            raise LinAlgError("correlation matrix is not positive definite for any theta")

        self.theta_ = 10.0 ** best_x
        C, beta, resid, sigma2 = self._factor(self.theta_, D, Fm, ys, iu)
        self.X_train_ = X
        self.beta_ = beta
        self.gamma_ = solve_triangular(C, resid, lower=True, trans="T", check_finite=False)
        self.sigma2_ = sigma2 * self.y_std_ ** 2
        self.neg_log_likelihood_ = best_f
        self._chol = C
        return self

    def predict(self, X):
        check_is_fitted(self, "theta_")
        X = validate_data(self, X, reset=False)
        if len(X) == 0:
            return np.empty(0)
        d2 = ((X[:, None, :] - self.X_train_[None, :, :]) ** 2) @ self.theta_
        r = np.exp(-d2)
        ys = _regression_matrix(X, self.regression) @ self.beta_ + r @ self.gamma_
        return ys * self.y_std_ + self.y_mean_

    def correlation_matrix(self):
        """Correlation matrix of the training designs (nugget included)."""
        check_is_fitted(self, "theta_")
        C = self._chol
        return C @ C.T

