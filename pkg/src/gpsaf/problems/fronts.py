"""Reference Pareto fronts."""

from importlib import resources

import numpy as np
from scipy.stats import qmc

from ..exceptions import ConfigurationError, UnsupportedFrontError
from .indicators import non_dominated
from .multi import c2_constraint

DATA_FRONTS = ("BNH", "SRN", "TNK", "OSY")


def _pick_evenly(F, n_points):
    """``n_points`` rows spread along the first objective (all rows if fewer)."""
    F = F[np.lexsort(F.T[::-1])]
    if n_points >= len(F):
        return F
    idx = np.unique(np.round(np.linspace(0, len(F) - 1, n_points)).astype(int))
    return F[idx]


def _unit_samples(n_points, dim):
    if dim == 1:
        return np.linspace(0.0, 1.0, n_points)[:, None]
    return qmc.Halton(d=dim, scramble=False).random(n_points)


def _zdt3(n_points):
    n_dense = max(20000, 20 * n_points)
    f1 = np.linspace(0.0, 1.0, n_dense)
    F = np.column_stack([f1, 1.0 - np.sqrt(f1) - f1 * np.sin(10.0 * np.pi * f1)])
    return _pick_evenly(F[non_dominated(F)], n_points)


def _sphere(U):
    theta = U * np.pi / 2
    M = theta.shape[1] + 1
    F = np.ones((len(U), M))
    for i in range(M):
        F[:, i] *= np.prod(np.cos(theta[:, : M - 1 - i]), axis=1)
        if i > 0:
            F[:, i] *= np.sin(theta[:, M - 1 - i])
    return F


def _simplex(U):
    M = U.shape[1] + 1
    F = np.full((len(U), M), 0.5)
    for i in range(M):
        F[:, i] *= np.prod(U[:, : M - 1 - i], axis=1)
        if i > 0:
            F[:, i] *= 1.0 - U[:, M - 1 - i]
    return F


def _degenerate(n_points, M):
    u = np.linspace(0.0, 1.0, n_points)
    theta = np.full((n_points, M - 1), 0.5)
    theta[:, 0] = u
    theta = theta * np.pi / 2
    F = np.ones((n_points, M))
    for i in range(M):
        F[:, i] *= np.prod(np.cos(theta[:, : M - 1 - i]), axis=1)
        if i > 0:
            F[:, i] *= np.sin(theta[:, M - 1 - i])
    return F


def _dtlz7(n_points, M):
    side = 2000 if M == 2 else max(60, int(np.ceil(np.sqrt(12 * n_points))))
    axes = np.meshgrid(*[np.linspace(0.0, 1.0, side)] * (M - 1), indexing="ij")
    P = np.column_stack([a.ravel() for a in axes])
    h = M - (P / 2.0 * (1.0 + np.sin(3.0 * np.pi * P))).sum(1)
    F = np.column_stack([P, 2.0 * h])
    return _pick_evenly(F[non_dominated(F)], n_points)


def _c2dtlz2(n_points, M):
    n_dense = 40 * n_points
    F = _sphere(_unit_samples(n_dense, M - 1))
    F = F[c2_constraint(F) <= 0]
    return _pick_evenly(F, n_points)


def load_front_data(name):
    text = resources.files("gpsaf.problems").joinpath(f"data/{name}.csv").read_text()
    return np.loadtxt(text.splitlines(), delimiter=",", ndmin=2)


def reference_front(name, n_points=500, n_obj=None):
    """Sample of the true Pareto front of problem ``name``.

    Analytic fronts return exactly ``n_points`` vectors. Fronts stored as
    data files return an evenly thinned subset, or every stored point when
    fewer than ``n_points`` exist.
    """
    if n_points < 1:
        raise ConfigurationError("n_points must be positive")
    M = 3 if n_obj is None else int(n_obj)
    if name in ("ZDT1", "ZDT4"):
        f1 = np.linspace(0.0, 1.0, n_points)
        return np.column_stack([f1, 1.0 - np.sqrt(f1)])
    if name == "ZDT2":
        f1 = np.linspace(0.0, 1.0, n_points)
        return np.column_stack([f1, 1.0 - f1 ** 2])
    if name == "ZDT6":
        f1 = np.linspace(0.2807753191, 1.0, n_points)
        return np.column_stack([f1, 1.0 - f1 ** 2])
    if name == "ZDT3":
        return _zdt3(n_points)
    if name == "DTLZ1":
        return _simplex(_unit_samples(n_points, M - 1))
    if name in ("DTLZ2", "DTLZ3", "DTLZ4"):
        return _sphere(_unit_samples(n_points, M - 1))
    if name in ("DTLZ5", "DTLZ6"):
        return _degenerate(n_points, M)
    if name == "DTLZ7":
        return _dtlz7(n_points, M)
    if name == "C2-DTLZ2":
        return _c2dtlz2(n_points, M)
    if name in DATA_FRONTS:
        return _pick_evenly(load_front_data(name), n_points)
    raise UnsupportedFrontError(f"no reference front available for {name!r}")


def default_ref_point(front):
    """Hypervolume reference point: the front's nadir pushed out by 10 %."""
    nadir = np.max(np.asarray(front, dtype=float), axis=0)
    return nadir + 0.1 * np.abs(nadir) + np.where(nadir == 0, 0.1, 0.0)
