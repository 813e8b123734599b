"""Differential evolution, DE/rand/1/bin with one-to-one replacement."""

import numpy as np

from ..core import Algorithm, Ordering, _compare_values
from ..exceptions import ConfigurationError
from ._operators import feasibility_first_order


class DE(Algorithm):
    """DE/rand/1/bin.

    Every generation draws a random permutation of the population; slot ``j``
    of every ``infill`` call until the next ``advance`` targets member
    ``perm[j]``, so repeated infills stay aligned slot by slot.

    Parameters
    ----------
    pop_size : int, default 20
    F : float, default 0.5
        Scale factor of the difference vector.
    CR : float, default 0.9
        Binomial crossover rate.
    n_offspring : int, default 10
        Trial vectors per ``infill``; at most ``pop_size``.
    """

    def __init__(self, pop_size=20, F=0.5, CR=0.9, n_offspring=10):
        self.pop_size = pop_size
        self.F = F
        self.CR = CR
        self.n_offspring = n_offspring

    def _validate(self, problem):
        if problem.n_obj != 1:
            raise ConfigurationError("DE is single-objective")
        if self.pop_size < 4:
            raise ConfigurationError("DE needs pop_size >= 4 (target plus three donors)")
        if not 0.0 <= self.F <= 2.0:
            raise ConfigurationError("F must lie in [0, 2]")
        if not 0.0 <= self.CR <= 1.0:
            raise ConfigurationError("CR must lie in [0, 1]")
        if not 1 <= self.n_offspring <= self.pop_size:
            raise ConfigurationError("n_offspring must lie in [1, pop_size]")

    @property
    def initial_size(self):
        return self.pop_size

    @property
    def best_(self):
        i = feasibility_first_order(self.F_, self.G_)[0]
        return self.X_[i], self.F_[i], self.G_[i]

    def _initialize(self, X, F, G):
        order = feasibility_first_order(F, G)[: self.pop_size]
        self.X_, self.F_, self.G_ = X[order], F[order], G[order]
        self.targets_ = None

    def _infill(self):
        p, rng = self.problem_, self.rng_
        n = len(self.X_)
        if n < 4:
            raise ConfigurationError("DE population fell below four members")
        if self.targets_ is None:
            self.targets_ = rng.permutation(n)[: min(self.n_offspring, n)]
        trials = np.empty((len(self.targets_), p.n_var))
        for j, t in enumerate(self.targets_):
            r1, r2, r3 = rng.choice(np.delete(np.arange(n), t), size=3, replace=False)
            mutant = self.X_[r1] + self.F * (self.X_[r2] - self.X_[r3])
            cross = rng.random(p.n_var) < self.CR
            cross[rng.integers(p.n_var)] = True
            trials[j] = np.where(cross, mutant, self.X_[t])
        return np.clip(trials, p.lower, p.upper)

    def _advance(self, X, F, G):
        if self.targets_ is None:
            self.targets_ = self.rng_.permutation(len(self.X_))[: self.n_offspring]
        for j in range(min(len(X), len(self.targets_))):
            t = self.targets_[j]
            if _compare_values(F[j], G[j], self.F_[t], self.G_[t]) is Ordering.A_WINS:
                self.X_[t], self.F_[t], self.G_[t] = X[j], F[j], G[j]
        self.targets_ = None
