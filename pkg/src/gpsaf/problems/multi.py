"""Multi-objective test problems: ZDT, DTLZ, constrained classics, C2-DTLZ2."""

from functools import partial

import numpy as np

from .single import FunctionProblem


def _unconstrained(F):
    return F, np.empty((len(F), 0))


def zdt1(X):
    f1 = X[:, 0]
    g = 1.0 + 9.0 / (X.shape[1] - 1) * X[:, 1:].sum(1)
    return _unconstrained(np.column_stack([f1, g * (1.0 - np.sqrt(f1 / g))]))


def zdt2(X):
    f1 = X[:, 0]
    g = 1.0 + 9.0 / (X.shape[1] - 1) * X[:, 1:].sum(1)
    return _unconstrained(np.column_stack([f1, g * (1.0 - (f1 / g) ** 2)]))


def zdt3(X):
    f1 = X[:, 0]
    g = 1.0 + 9.0 / (X.shape[1] - 1) * X[:, 1:].sum(1)
    h = 1.0 - np.sqrt(f1 / g) - (f1 / g) * np.sin(10.0 * np.pi * f1)
    return _unconstrained(np.column_stack([f1, g * h]))


def zdt4(X):
    f1 = X[:, 0]
    rest = X[:, 1:]
    g = 1.0 + 10.0 * rest.shape[1] + (rest ** 2 - 10.0 * np.cos(4.0 * np.pi * rest)).sum(1)
    return _unconstrained(np.column_stack([f1, g * (1.0 - np.sqrt(f1 / g))]))


def zdt6(X):
    x1 = X[:, 0]
    f1 = 1.0 - np.exp(-4.0 * x1) * np.sin(6.0 * np.pi * x1) ** 6
    g = 1.0 + 9.0 * (X[:, 1:].sum(1) / (X.shape[1] - 1)) ** 0.25
    return _unconstrained(np.column_stack([f1, g * (1.0 - (f1 / g) ** 2)]))


def _zdt_bounds(name, n_var):
    if name == "ZDT4":
        return np.r_[0.0, np.full(n_var - 1, -5.0)], np.r_[1.0, np.full(n_var - 1, 5.0)]
    return np.zeros(n_var), np.ones(n_var)


ZDT = {"ZDT1": zdt1, "ZDT2": zdt2, "ZDT3": zdt3, "ZDT4": zdt4, "ZDT6": zdt6}


def make_zdt(name, n_var):
    lo, up = _zdt_bounds(name, n_var)
    return FunctionProblem(name, n_var, 2, 0, lo, up, ZDT[name])


def _g_multimodal(Xm):
    k = Xm.shape[1]
    return 100.0 * (k + ((Xm - 0.5) ** 2 - np.cos(20.0 * np.pi * (Xm - 0.5))).sum(1))


def _g_sphere(Xm):
    return ((Xm - 0.5) ** 2).sum(1)


def _linear_shape(Xp, g):
    """DTLZ1 front shape scaled by 0.5 (1 + g)."""
    n, m1 = Xp.shape
    M = m1 + 1
    F = np.empty((n, M))
    for i in range(M):
        f = 0.5 * (1.0 + g)
        f = f * np.prod(Xp[:, : M - 1 - i], axis=1)
        if i > 0:
            f = f * (1.0 - Xp[:, M - 1 - i])
        F[:, i] = f
    return F


def _spherical_shape(theta, g):
    """Unit-sphere shape with angles ``theta`` (already in radians)."""
    n, m1 = theta.shape
    M = m1 + 1
    F = np.empty((n, M))
    for i in range(M):
        f = 1.0 + g
        f = f * np.prod(np.cos(theta[:, : M - 1 - i]), axis=1)
        if i > 0:
            f = f * np.sin(theta[:, M - 1 - i])
        F[:, i] = f
    return F


def dtlz1(M, X):
    Xp, Xm = X[:, : M - 1], X[:, M - 1:]
    return _unconstrained(_linear_shape(Xp, _g_multimodal(Xm)))


def dtlz2(M, X):
    Xp, Xm = X[:, : M - 1], X[:, M - 1:]
    return _unconstrained(_spherical_shape(Xp * np.pi / 2, _g_sphere(Xm)))


def dtlz3(M, X):
    Xp, Xm = X[:, : M - 1], X[:, M - 1:]
    return _unconstrained(_spherical_shape(Xp * np.pi / 2, _g_multimodal(Xm)))


def dtlz4(M, X):
    Xp, Xm = X[:, : M - 1], X[:, M - 1:]
    return _unconstrained(_spherical_shape(Xp ** 100.0 * np.pi / 2, _g_sphere(Xm)))


def _dtlz5_like(M, X, g):
    Xp = X[:, : M - 1]
    theta = np.empty_like(Xp)
    theta[:, 0] = Xp[:, 0] * np.pi / 2
    if M > 2:
        theta[:, 1:] = np.pi / (4.0 * (1.0 + g[:, None])) * (1.0 + 2.0 * g[:, None] * Xp[:, 1:])
    return _unconstrained(_spherical_shape(theta, g))


def dtlz5(M, X):
    return _dtlz5_like(M, X, _g_sphere(X[:, M - 1:]))


def dtlz6(M, X):
    return _dtlz5_like(M, X, (X[:, M - 1:] ** 0.1).sum(1))


def dtlz7(M, X):
    Xp, Xm = X[:, : M - 1], X[:, M - 1:]
    g = 1.0 + 9.0 / Xm.shape[1] * Xm.sum(1)
    h = M - (Xp / (1.0 + g[:, None]) * (1.0 + np.sin(3.0 * np.pi * Xp))).sum(1)
    return _unconstrained(np.column_stack([Xp, (1.0 + g) * h]))


_DTLZ_FUNCS = {"DTLZ1": dtlz1, "DTLZ2": dtlz2, "DTLZ3": dtlz3, "DTLZ4": dtlz4,
               "DTLZ5": dtlz5, "DTLZ6": dtlz6, "DTLZ7": dtlz7}


def make_dtlz_func(name, n_obj):
    """Vectorized DTLZ evaluator ``X -> (F, G)`` for ``n_obj`` objectives."""
    return partial(_DTLZ_FUNCS[name], n_obj)


DTLZ = tuple(f"DTLZ{i}" for i in range(1, 8))


def make_dtlz(name, n_var, n_obj=3):
    return FunctionProblem(name, n_var, n_obj, 0, 0.0, 1.0, make_dtlz_func(name, n_obj))


def c2_radius(n_obj):
    return 0.4 if n_obj == 3 else 0.5


def c2_constraint(F):
    """C2-DTLZ2 violation: the front survives only near the corners and centre."""
    M = F.shape[1]
    r = c2_radius(M)
    sq = F ** 2
    total = sq.sum(1)
    corner = ((F - 1.0) ** 2 + (total[:, None] - sq) - r ** 2).min(1)
    centre = ((F - 1.0 / np.sqrt(M)) ** 2).sum(1) - r ** 2
    return np.minimum(corner, centre)


def c2dtlz2(M, X):
    F, _ = dtlz2(M, X)
    return F, c2_constraint(F)[:, None]


def make_c2dtlz2(n_var, n_obj=3):
    return FunctionProblem("C2-DTLZ2", n_var, n_obj, 1, 0.0, 1.0, partial(c2dtlz2, n_obj))


def bnh(X):
    x1, x2 = X.T
    F = np.column_stack([4 * x1 ** 2 + 4 * x2 ** 2, (x1 - 5) ** 2 + (x2 - 5) ** 2])
    G = np.column_stack([(x1 - 5) ** 2 + x2 ** 2 - 25, 7.7 - (x1 - 8) ** 2 - (x2 + 3) ** 2])
    return F, G


def srn(X):
    x1, x2 = X.T
    F = np.column_stack([2 + (x1 - 2) ** 2 + (x2 - 1) ** 2, 9 * x1 - (x2 - 1) ** 2])
    G = np.column_stack([x1 ** 2 + x2 ** 2 - 225, x1 - 3 * x2 + 10])
    return F, G


def tnk(X):
    x1, x2 = X.T
    F = np.column_stack([x1, x2])
    G = np.column_stack([
        -x1 ** 2 - x2 ** 2 + 1 + 0.1 * np.cos(16 * np.arctan2(x1, x2)),
        (x1 - 0.5) ** 2 + (x2 - 0.5) ** 2 - 0.5,
    ])
    return F, G


def osy(X):
    x1, x2, x3, x4, x5, x6 = X.T
    f1 = -(25 * (x1 - 2) ** 2 + (x2 - 2) ** 2 + (x3 - 1) ** 2 + (x4 - 4) ** 2 + (x5 - 1) ** 2)
    f2 = (X ** 2).sum(1)
    G = np.column_stack([
        2 - x1 - x2,
        x1 + x2 - 6,
        x2 - x1 - 2,
        x1 - 3 * x2 - 2,
        (x3 - 3) ** 2 + x4 - 4,
        4 - (x5 - 3) ** 2 - x6,
    ])
    return np.column_stack([f1, f2]), G


CLASSIC = {
    "BNH": (bnh, 2, 2, [0.0, 0.0], [5.0, 3.0]),
    "SRN": (srn, 2, 2, [-20.0, -20.0], [20.0, 20.0]),
    "TNK": (tnk, 2, 2, [0.0, 0.0], [np.pi, np.pi]),
    "OSY": (osy, 6, 6, [0.0, 0.0, 1.0, 0.0, 1.0, 0.0], [10.0, 10.0, 5.0, 6.0, 5.0, 10.0]),
}


def make_classic(name):
    f, n, m, lo, up = CLASSIC[name]
    return FunctionProblem(name, n, 2, m, lo, up, f, scalable=False)
