"""Radial basis function interpolation as a scikit-learn regressor."""

import warnings

import numpy as np
from scipy.interpolate import RBFInterpolator
from scipy.linalg import LinAlgError
from scipy.spatial.distance import pdist, squareform
from sklearn.base import BaseEstimator, RegressorMixin
from sklearn.utils.validation import check_is_fitted, validate_data

_KERNELS = {"cubic": "cubic", "gaussian": "gaussian", "thin_plate": "thin_plate_spline"}


def _default_epsilon(X):
    if len(X) < 2:
        return 1.0
    D = squareform(pdist(X))
    mean_pair = max(float(D.sum() / (len(X) * (len(X) - 1))), 1e-12)
    D[D == 0] = np.inf
    nn = D.min(axis=1)
    nn = nn[np.isfinite(nn)]
    mean_nn = max(float(nn.mean()), 1e-12) if len(nn) else mean_pair
    return max(1.0 / mean_pair, 0.5 / mean_nn)


class RBF(RegressorMixin, BaseEstimator):
    """RBF interpolant with an optional polynomial tail.

    Parameters
    ----------
    kernel : {"cubic", "gaussian", "thin_plate"}
    tail : {0, 1}
        Degree of the polynomial tail (constant or linear).
    reg : float, default 1e-10
        Ridge term added to the kernel diagonal when the exact interpolation
        system is singular or solved inaccurately (e.g. duplicated designs).
    epsilon : float or None
        Gaussian shape parameter; ``None`` uses the larger of the inverse
        mean pairwise distance and half the inverse mean nearest-neighbour
        distance, which keeps the kernel matrix well conditioned for dense
        designs.
    """

    def __init__(self, kernel="cubic", tail=1, reg=1e-10, epsilon=None):
        self.kernel = kernel
        self.tail = tail
        self.reg = reg
        self.epsilon = epsilon

    def fit(self, X, y):
        X, y = validate_data(self, X, y, y_numeric=True)
        if self.kernel not in _KERNELS:
            raise ValueError(f"unknown kernel {self.kernel!r}")
        if self.tail not in (0, 1):
            raise ValueError("tail must be 0 or 1")
        eps = self.epsilon if self.epsilon is not None else _default_epsilon(X)
        tol = 1e-9 * (1.0 + np.max(np.abs(y)))
        self.interpolator_ = None
        try:
            exact = self._solve(X, y, eps, 0.0)
            if np.max(np.abs(exact(X) - y)) <= tol:
                self.interpolator_ = exact
        except (LinAlgError, ValueError):
            pass
        if self.interpolator_ is None:
            self.interpolator_ = self._solve(X, y, eps, self.reg)
        self.epsilon_ = eps
        return self

    def _solve(self, X, y, eps, smoothing):
        with warnings.catch_warnings():
            # cubic and thin-plate kernels with a constant tail are only
            # conditionally positive definite
            warnings.simplefilter("ignore", UserWarning)
            return RBFInterpolator(X, y, kernel=_KERNELS[self.kernel], degree=self.tail,
                                   smoothing=smoothing, epsilon=eps)

    def predict(self, X):
        check_is_fitted(self, "interpolator_")
        X = validate_data(self, X, reset=False)
        return self.interpolator_(X)
