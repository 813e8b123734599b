"""Real-coded genetic algorithm with (mu + lambda) survival."""

import numpy as np

from ..core import Algorithm, Ordering, _compare_values
from ..exceptions import ConfigurationError
from ._operators import feasibility_first_order, polynomial_mutation, sbx


def tournament(F, G, rng, size=2):
    """Index of the winner of one tournament under feasibility-first comparison."""
    n = len(F)
    competitors = rng.choice(n, size=min(size, n), replace=False)
    winner = competitors[0]
    for c in competitors[1:]:
        o = _compare_values(F[c], G[c], F[winner], G[winner])
        if o is Ordering.A_WINS or (o is Ordering.TIE and rng.random() < 0.5):
            winner = c
    return winner


class GA(Algorithm):
    """Genetic algorithm: binary tournament, SBX, polynomial mutation.

    Parameters
    ----------
    pop_size : int, default 20
        Number of survivors kept after each generation.
    n_offspring : int, default 10
        Children returned by each ``infill`` call.
    sbx_eta, sbx_prob : float
        Distribution index and probability of simulated binary crossover.
    pm_eta : float
        Distribution index of polynomial mutation.
    pm_prob : float or None
        Per-variable mutation probability; ``None`` means ``1 / n_var``.
    tournament_size : int, default 2
    """

    def __init__(self, pop_size=20, n_offspring=10, sbx_eta=15.0, sbx_prob=0.9,
                 pm_eta=20.0, pm_prob=None, tournament_size=2):
        self.pop_size = pop_size
        self.n_offspring = n_offspring
        self.sbx_eta = sbx_eta
        self.sbx_prob = sbx_prob
        self.pm_eta = pm_eta
        self.pm_prob = pm_prob
        self.tournament_size = tournament_size

    def _validate(self, problem):
        if problem.n_obj != 1:
            raise ConfigurationError("GA is single-objective; use NSGA2 for several objectives")
        self._check_params()

    def _check_params(self):
        if self.pop_size < 2 or self.n_offspring < 1:
            raise ConfigurationError("pop_size must be >= 2 and n_offspring >= 1")
        if not 0.0 < self.sbx_prob <= 1.0:
            raise ConfigurationError("sbx_prob must lie in (0, 1]")
        if self.pm_prob is not None and not 0.0 < self.pm_prob <= 1.0:
            raise ConfigurationError("pm_prob must lie in (0, 1]")
        if self.tournament_size < 2:
            raise ConfigurationError("tournament_size must be >= 2")

    @property
    def initial_size(self):
        return self.pop_size

    @property
    def best_(self):
        return self.X_[0], self.F_[0], self.G_[0]

    def _mutation_prob(self):
        return 1.0 / self.problem_.n_var if self.pm_prob is None else self.pm_prob

    def _select_parent(self):
        return tournament(self.F_, self.G_, self.rng_, self.tournament_size)

    def _infill(self):
        p, rng = self.problem_, self.rng_
        children = []
        while len(children) < self.n_offspring:
            a, b = self._select_parent(), self._select_parent()
            c1, c2 = sbx(self.X_[a], self.X_[b], p.lower, p.upper, self.sbx_eta, self.sbx_prob, rng)
            for c in (c1, c2):
                children.append(polynomial_mutation(c, p.lower, p.upper, self.pm_eta,
                                                    self._mutation_prob(), rng))
        return np.clip(np.asarray(children[: self.n_offspring]), p.lower, p.upper)

    def _survive(self, X, F, G):
        order = feasibility_first_order(F, G)[: self.pop_size]
        self.X_, self.F_, self.G_ = X[order], F[order], G[order]

    def _initialize(self, X, F, G):
        self._survive(X, F, G)

    def _advance(self, X, F, G):
        self._survive(np.vstack([self.X_, X]), np.vstack([self.F_, F]), np.vstack([self.G_, G]))
