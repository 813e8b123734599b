"""Problem and solution model, the ask/tell contract and the baseline run loop."""

from __future__ import annotations

import copy
import enum
import zlib
from dataclasses import dataclass, field

import numpy as np
from sklearn.base import BaseEstimator

from .exceptions import (
    BudgetError,
    ContractViolation,
    MissingValuesError,
    StalledAlgorithmError,
)

__all__ = [
    "Algorithm",
    "Archive",
    "Budget",
    "Ordering",
    "Problem",
    "Solution",
    "compare",
    "constraint_violation",
    "fork_rng",
    "run_baseline",
    "violation",
]


def fork_rng(seed, label):
    """Return a generator for the child stream ``label`` of ``seed``.

    Streams with different labels are statistically independent, so adding a
    consumer never perturbs the draws of another.
    """
    if seed is None:
        return np.random.default_rng()
    return np.random.default_rng([int(seed), zlib.crc32(label.encode())])


class Problem:
    """Box-constrained problem with ``g <= 0`` inequality constraints.

    Subclasses implement ``_evaluate`` on a 2-D array of designs and return
    ``(F, G)`` with shapes ``(n, n_obj)`` and ``(n, n_constr)``.
    """

    name = "problem"
    known_optimum_f = None

    def __init__(self, n_var, n_obj, n_constr, lower, upper):
        lower = np.broadcast_to(np.asarray(lower, dtype=float), (n_var,)).copy()
        upper = np.broadcast_to(np.asarray(upper, dtype=float), (n_var,)).copy()
        if n_var < 1 or n_obj < 1 or n_constr < 0:
            raise ContractViolation("n_var, n_obj must be positive and n_constr non-negative")
        if np.any(lower >= upper):
            raise ContractViolation("lower bounds must be strictly below upper bounds")
        self.n_var = int(n_var)
        self.n_obj = int(n_obj)
        self.n_constr = int(n_constr)
        self.lower = lower
        self.upper = upper
        self.lower.flags.writeable = False
        self.upper.flags.writeable = False

    def __repr__(self):
        return (
            f"{type(self).__name__}(name={self.name!r}, n_var={self.n_var}, "
            f"n_obj={self.n_obj}, n_constr={self.n_constr})"
        )

    def evaluate(self, X):
        """Evaluate one design (1-D) or a batch of designs (2-D)."""
        X = np.asarray(X, dtype=float)
        single = X.ndim == 1
        X2 = np.atleast_2d(X)
        if X2.shape[1] != self.n_var:
            raise ContractViolation(f"expected {self.n_var} variables, got {X2.shape[1]}")
        if len(X2) == 0:
            return np.empty((0, self.n_obj)), np.empty((0, self.n_constr))
        F, G = self._evaluate(X2)
        F = np.asarray(F, dtype=float).reshape(len(X2), self.n_obj)
        G = np.asarray(G, dtype=float).reshape(len(X2), self.n_constr)
        if single:
            return F[0], G[0]
        return F, G

    def _evaluate(self, X):
        raise NotImplementedError

    def clip(self, X):
        return np.clip(X, self.lower, self.upper)

    def normalize(self, X):
        return (np.asarray(X, dtype=float) - self.lower) / (self.upper - self.lower)


@dataclass
class Solution:
    """A design with true and/or surrogate-predicted values."""

    x: np.ndarray
    f: np.ndarray | None = None
    g: np.ndarray | None = None
    f_hat: np.ndarray | None = None
    g_hat: np.ndarray | None = None
    meta: dict = field(default_factory=dict, compare=False)

    def values(self, use_predicted=False):
        if use_predicted:
            f, g, what = self.f_hat, self.g_hat, "predicted"
        else:
            f, g, what = self.f, self.g, "true"
        if f is None:
            raise MissingValuesError(f"solution has no {what} objective values")
        if g is None:
            g = np.empty(0)
        return np.asarray(f, dtype=float), np.asarray(g, dtype=float)


class Ordering(enum.Enum):
    A_WINS = 1
    B_WINS = -1
    TIE = 0


def constraint_violation(G, scale=None):
    """Row-wise sum of positive constraint values; 0 means feasible."""
    G = np.asarray(G, dtype=float)
    if G.ndim == 1:
        G = G[None, :]
        squeeze = True
    else:
        squeeze = False
    if G.shape[1] == 0:
        cv = np.zeros(len(G))
    else:
        pos = np.maximum(G, 0.0)
        if scale is not None:
            pos = pos / np.asarray(scale, dtype=float)
        cv = pos.sum(axis=1)
    return cv[0] if squeeze else cv


def violation(s, use_predicted=False, scale=None):
    """Constraint violation of a single solution.

    ``scale`` optionally divides each constraint before summation; the default
    sums raw positive parts.
    """
    g = s.g_hat if use_predicted else s.g
    if g is None:
        raise MissingValuesError("solution has no constraint values")
    return float(constraint_violation(np.asarray(g, dtype=float), scale))


def _dominance(fa, fb):
    """+1 if fa dominates fb, -1 if fb dominates fa, 0 otherwise."""
    a_le = np.all(fa <= fb)
    b_le = np.all(fb <= fa)
    if a_le and not b_le:
        return 1
    if b_le and not a_le:
        return -1
    return 0


def compare(a, b, use_predicted=False):
    """Feasibility-first comparison of two solutions.

    Both infeasible: the smaller violation wins. One feasible: it wins. Both
    feasible: Pareto dominance on the objectives. Otherwise a tie; breaking
    ties randomly is left to the caller.
    """
    fa, ga = a.values(use_predicted)
    fb, gb = b.values(use_predicted)
    if fa.shape != fb.shape or ga.shape != gb.shape:
        raise ContractViolation("solutions have mismatched objective/constraint dimensions")
    return _compare_values(fa, ga, fb, gb)


def _compare_values(fa, ga, fb, gb):
    cva = float(np.maximum(ga, 0.0).sum()) if ga.size else 0.0
    cvb = float(np.maximum(gb, 0.0).sum()) if gb.size else 0.0
    if cva > 0.0 or cvb > 0.0:
        if cva < cvb:
            return Ordering.A_WINS
        if cvb < cva:
            return Ordering.B_WINS
        return Ordering.TIE
    d = _dominance(fa, fb)
    if d > 0:
        return Ordering.A_WINS
    if d < 0:
        return Ordering.B_WINS
    return Ordering.TIE


class Archive:
    """Insertion-ordered store of truly evaluated solutions."""

    def __init__(self, n_var, n_obj, n_constr):
        self.n_var, self.n_obj, self.n_constr = n_var, n_obj, n_constr
        self._X = np.empty((0, n_var))
        self._F = np.empty((0, n_obj))
        self._G = np.empty((0, n_constr))

    @classmethod
    def for_problem(cls, problem):
        return cls(problem.n_var, problem.n_obj, problem.n_constr)

    def extend(self, X, F, G):
        X = np.atleast_2d(np.asarray(X, dtype=float))
        F = np.asarray(F, dtype=float).reshape(len(X), self.n_obj)
        G = np.asarray(G, dtype=float).reshape(len(X), self.n_constr)
        if X.shape[1] != self.n_var:
            raise ContractViolation("design dimension does not match the archive")
        self._X = np.vstack([self._X, X])
        self._F = np.vstack([self._F, F])
        self._G = np.vstack([self._G, G])

    @property
    def X(self):
        return self._X.copy()

    @property
    def F(self):
        return self._F.copy()

    @property
    def G(self):
        return self._G.copy()

    @property
    def CV(self):
        return constraint_violation(self._G)

    def __len__(self):
        return len(self._X)

    def __getitem__(self, i):
        return Solution(x=self._X[i].copy(), f=self._F[i].copy(), g=self._G[i].copy())

    def __iter__(self):
        for i in range(len(self)):
            yield self[i]

    def __eq__(self, other):
        if not isinstance(other, Archive):
            return NotImplemented
        return (
            np.array_equal(self._X, other._X)
            and np.array_equal(self._F, other._F)
            and np.array_equal(self._G, other._G)
        )

    def __repr__(self):
        return f"Archive(size={len(self)})"


@dataclass
class Budget:
    max_evaluations: int
    used: int = 0

    def __post_init__(self):
        if self.max_evaluations < 0 or self.used < 0:
            raise BudgetError("budget values must be non-negative")
        if self.used > self.max_evaluations:
            raise BudgetError("used evaluations exceed the maximum")

    @property
    def remaining(self):
        return self.max_evaluations - self.used

    def consume(self, n):
        if n > self.remaining:
            raise BudgetError(f"cannot consume {n} evaluations, {self.remaining} remaining")
        self.used += n


class Algorithm(BaseEstimator):
    """Population-based optimizer exposing ``infill``/``advance``.

    Hyperparameters are constructor arguments (``get_params`` works as for
    any scikit-learn estimator); run state lives in trailing-underscore
    attributes created by :meth:`setup`. The first ``infill`` of a fresh
    algorithm returns a space-filling initial population drawn from the
    ``"doe"`` child stream of the seed; the first ``advance`` initializes the
    population from whatever designs it receives.
    """

    def setup(self, problem, seed=None):
        self._validate(problem)
        self.problem_ = problem
        self.seed_ = seed
        self.rng_ = fork_rng(seed, "algorithm")
        self.doe_rng_ = fork_rng(seed, "doe")
        self.initialized_ = False
        self.n_gen_ = 0
        return self

    def _validate(self, problem):
        pass

    @property
    def initial_size(self):
        raise NotImplementedError

    def infill(self):
        from .sampling import sample_doe

        self._check_setup()
        if not self.initialized_:
            return sample_doe(self.problem_, self.initial_size, self.doe_rng_)
        return self._infill()

    def advance(self, X, F, G=None):
        self._check_setup()
        p = self.problem_
        X = np.atleast_2d(np.asarray(X, dtype=float))
        F = np.asarray(F, dtype=float)
        if G is None:
            G = np.empty((len(X), 0))
        G = np.asarray(G, dtype=float)
        if X.shape[1] != p.n_var or F.reshape(len(X), -1).shape[1] != p.n_obj:
            raise ContractViolation("advance received designs or objectives of the wrong size")
        F = F.reshape(len(X), p.n_obj)
        if G.size != len(X) * p.n_constr:
            raise ContractViolation("advance received constraints of the wrong size")
        G = G.reshape(len(X), p.n_constr)
        if len(X) == 0:
            return self
        if not self.initialized_:
            self._initialize(X, F, G)
            self.initialized_ = True
        else:
            self._advance(X, F, G)
        self.n_gen_ += 1
        return self

    def snapshot(self, rng=None):
        """Independent deep copy, optionally re-seeded with ``rng``."""
        clone = copy.deepcopy(self)
        if rng is not None:
            clone.rng_ = rng
        return clone

    def _check_setup(self):
        if not hasattr(self, "problem_"):
            raise RuntimeError(f"{type(self).__name__}.setup(problem, seed) must be called first")

    def _initialize(self, X, F, G):
        raise NotImplementedError

    def _infill(self):
        raise NotImplementedError

    def _advance(self, X, F, G):
        raise NotImplementedError


def run_baseline(alg, problem, budget, seed=None):
    """Plain ask/tell loop until the budget is exhausted.

    The last batch is cut to its first ``remaining`` designs so the budget is
    never exceeded.
    """
    if isinstance(budget, int):
        budget = Budget(budget)
    alg.setup(problem, seed)
    archive = Archive.for_problem(problem)
    while budget.remaining > 0:
        X = np.atleast_2d(alg.infill())
        if X.size == 0:
            raise StalledAlgorithmError(f"{type(alg).__name__}.infill returned no designs")
        X = problem.clip(X[: budget.remaining])
        F, G = problem.evaluate(X)
        budget.consume(len(X))
        archive.extend(X, F, G)
        alg.advance(X, F, G)
    return archive
