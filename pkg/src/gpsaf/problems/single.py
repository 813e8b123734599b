"""Unconstrained and inequality-constrained single-objective test problems."""

from functools import partial

import numpy as np

from ..core import Problem


class FunctionProblem(Problem):
    """Problem defined by a vectorized function ``X -> (F, G)``."""

    def __init__(self, name, n_var, n_obj, n_constr, lower, upper, func,
                 known_optimum_f=None, optimum_x=None, scalable=True):
        super().__init__(n_var, n_obj, n_constr, lower, upper)
        self.name = name
        self._func = func
        self.known_optimum_f = known_optimum_f
        self.optimum_x = None if optimum_x is None else np.asarray(optimum_x, dtype=float)
        self.scalable = scalable

    def _evaluate(self, X):
        return self._func(X)


def _scalar_objective(f, X):
    return f(X)[:, None], np.empty((len(X), 0))


def _no_constraints(f):
    return partial(_scalar_objective, f)


def sphere(X):
    return np.sum(X ** 2, axis=1)


def rastrigin(X):
    return 10.0 * X.shape[1] + np.sum(X ** 2 - 10.0 * np.cos(2.0 * np.pi * X), axis=1)


def rosenbrock(X):
    return np.sum(100.0 * (X[:, 1:] - X[:, :-1] ** 2) ** 2 + (1.0 - X[:, :-1]) ** 2, axis=1)


def ackley(X):
    d = X.shape[1]
    a = -20.0 * np.exp(-0.2 * np.sqrt(np.sum(X ** 2, axis=1) / d))
    b = -np.exp(np.sum(np.cos(2.0 * np.pi * X), axis=1) / d)
    return a + b + 20.0 + np.e


def griewank(X):
    i = np.sqrt(np.arange(1, X.shape[1] + 1))
    return 1.0 + np.sum(X ** 2, axis=1) / 4000.0 - np.prod(np.cos(X / i), axis=1)


UNCONSTRAINED = {
    # name: (function, lower, upper, optimum design builder)
    "sphere": (sphere, -5.12, 5.12, lambda n: np.zeros(n)),
    "rastrigin": (rastrigin, -5.12, 5.12, lambda n: np.zeros(n)),
    "rosenbrock": (rosenbrock, -2.048, 2.048, lambda n: np.ones(n)),
    "ackley": (ackley, -32.768, 32.768, lambda n: np.zeros(n)),
    "griewank": (griewank, -600.0, 600.0, lambda n: np.zeros(n)),
}


def make_unconstrained(name, n_var):
    f, lo, up, xopt = UNCONSTRAINED[name]
    return FunctionProblem(name, n_var, 1, 0, lo, up, _no_constraints(f),
                           known_optimum_f=0.0, optimum_x=xopt(n_var))


# G-problems with inequality constraints only (g <= 0 feasible).

def g01(X):
    x = X.T
    f = 5.0 * x[:4].sum(0) - 5.0 * (x[:4] ** 2).sum(0) - x[4:13].sum(0)
    G = np.stack([
        2 * x[0] + 2 * x[1] + x[9] + x[10] - 10,
        2 * x[0] + 2 * x[2] + x[9] + x[11] - 10,
        2 * x[1] + 2 * x[2] + x[10] + x[11] - 10,
        -8 * x[0] + x[9],
        -8 * x[1] + x[10],
        -8 * x[2] + x[11],
        -2 * x[3] - x[4] + x[9],
        -2 * x[5] - x[6] + x[10],
        -2 * x[7] - x[8] + x[11],
    ], axis=1)
    return f[:, None], G


def g04(X):
    x1, x2, x3, x4, x5 = X.T
    f = 5.3578547 * x3 ** 2 + 0.8356891 * x1 * x5 + 37.293239 * x1 - 40792.141
    u = 85.334407 + 0.0056858 * x2 * x5 + 0.0006262 * x1 * x4 - 0.0022053 * x3 * x5
    v = 80.51249 + 0.0071317 * x2 * x5 + 0.0029955 * x1 * x2 + 0.0021813 * x3 ** 2
    w = 9.300961 + 0.0047026 * x3 * x5 + 0.0012547 * x1 * x3 + 0.0019085 * x3 * x4
    G = np.stack([u - 92, -u, v - 110, -v + 90, w - 25, -w + 20], axis=1)
    return f[:, None], G


def g06(X):
    x1, x2 = X.T
    f = (x1 - 10) ** 3 + (x2 - 20) ** 3
    G = np.stack([
        -(x1 - 5) ** 2 - (x2 - 5) ** 2 + 100,
        (x1 - 6) ** 2 + (x2 - 5) ** 2 - 82.81,
    ], axis=1)
    return f[:, None], G


def g07(X):
    x = X.T
    f = (x[0] ** 2 + x[1] ** 2 + x[0] * x[1] - 14 * x[0] - 16 * x[1] + (x[2] - 10) ** 2
         + 4 * (x[3] - 5) ** 2 + (x[4] - 3) ** 2 + 2 * (x[5] - 1) ** 2 + 5 * x[6] ** 2
         + 7 * (x[7] - 11) ** 2 + 2 * (x[8] - 10) ** 2 + (x[9] - 7) ** 2 + 45)
    G = np.stack([
        -105 + 4 * x[0] + 5 * x[1] - 3 * x[6] + 9 * x[7],
        10 * x[0] - 8 * x[1] - 17 * x[6] + 2 * x[7],
        -8 * x[0] + 2 * x[1] + 5 * x[8] - 2 * x[9] - 12,
        3 * (x[0] - 2) ** 2 + 4 * (x[1] - 3) ** 2 + 2 * x[2] ** 2 - 7 * x[3] - 120,
        5 * x[0] ** 2 + 8 * x[1] + (x[2] - 6) ** 2 - 2 * x[3] - 40,
        x[0] ** 2 + 2 * (x[1] - 2) ** 2 - 2 * x[0] * x[1] + 14 * x[4] - 6 * x[5],
        0.5 * (x[0] - 8) ** 2 + 2 * (x[1] - 4) ** 2 + 3 * x[4] ** 2 - x[5] - 30,
        -3 * x[0] + 6 * x[1] + 12 * (x[8] - 8) ** 2 - 7 * x[9],
    ], axis=1)
    return f[:, None], G


def g08(X):
    x1, x2 = X.T
    # the objective has a finite limit at x1 = 0 but the formula divides by it
    x1s = np.maximum(x1, 1e-12)
    f = -(np.sin(2 * np.pi * x1s) ** 3) * np.sin(2 * np.pi * x2) / (x1s ** 3 * (x1s + x2))
    G = np.stack([x1 ** 2 - x2 + 1, 1 - x1 + (x2 - 4) ** 2], axis=1)
    return f[:, None], G


def g09(X):
    x = X.T
    f = ((x[0] - 10) ** 2 + 5 * (x[1] - 12) ** 2 + x[2] ** 4 + 3 * (x[3] - 11) ** 2
         + 10 * x[4] ** 6 + 7 * x[5] ** 2 + x[6] ** 4 - 4 * x[5] * x[6] - 10 * x[5] - 8 * x[6])
    G = np.stack([
        -127 + 2 * x[0] ** 2 + 3 * x[1] ** 4 + x[2] + 4 * x[3] ** 2 + 5 * x[4],
        -282 + 7 * x[0] + 3 * x[1] + 10 * x[2] ** 2 + x[3] - x[4],
        -196 + 23 * x[0] + x[1] ** 2 + 6 * x[5] ** 2 - 8 * x[6],
        4 * x[0] ** 2 + x[1] ** 2 - 3 * x[0] * x[1] + 2 * x[2] ** 2 + 5 * x[5] - 11 * x[6],
    ], axis=1)
    return f[:, None], G


def g24(X):
    x1, x2 = X.T
    f = -x1 - x2
    G = np.stack([
        -2 * x1 ** 4 + 8 * x1 ** 3 - 8 * x1 ** 2 + x2 - 2,
        -4 * x1 ** 4 + 32 * x1 ** 3 - 88 * x1 ** 2 + 96 * x1 + x2 - 36,
    ], axis=1)
    return f[:, None], G


_G1_UPPER = np.array([1.0] * 9 + [100.0] * 3 + [1.0])

G_PROBLEMS = {
    # name: (function, n_var, n_constr, lower, upper, best known f, best known x)
    "G1": (g01, 13, 9, 0.0, _G1_UPPER, -15.0, [1.0] * 9 + [3.0] * 3 + [1.0]),
    "G4": (g04, 5, 6, [78.0, 33.0, 27.0, 27.0, 27.0], [102.0, 45.0, 45.0, 45.0, 45.0],
           -30665.538671783317,
           [78.0, 33.0, 29.9952560256815985, 45.0, 36.7758129057882073]),
    "G6": (g06, 2, 2, [13.0, 0.0], [100.0, 100.0], -6961.81387558015,
           [14.09500000000000064, 0.8429607892154795668]),
    "G7": (g07, 10, 8, -10.0, 10.0, 24.30620906818,
           [2.17199634142692, 2.3636830416034, 8.77392573913157, 5.09598443745173,
            0.990654756560493, 1.43057392853463, 1.32164415364306, 9.82872576524495,
            8.2800915887356, 8.3759266477347]),
    "G8": (g08, 2, 2, 0.0, 10.0, -0.0958250414180359,
           [1.22797135260752599, 4.24537336612274885]),
    "G9": (g09, 7, 4, -10.0, 10.0, 680.630057374402,
           [2.33049935147405174, 1.95137236847114592, -0.477541399510615805,
            4.36572624923625874, -0.624486959100388983, 1.03813099410962173,
            1.5942266780671519]),
    "G24": (g24, 2, 2, [0.0, 0.0], [3.0, 4.0], -5.50801327159536,
            [2.329520197477623, 3.17849307411774]),
}


def make_g_problem(name):
    f, n, m, lo, up, fopt, xopt = G_PROBLEMS[name]
    return FunctionProblem(name, n, 1, m, lo, up, f, known_optimum_f=fopt,
                           optimum_x=xopt, scalable=False)
