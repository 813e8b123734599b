"""NSGA-II with constrained non-dominated sorting."""

import numpy as np

from ..exceptions import ConfigurationError
from ._operators import rank_and_crowding
from .ga import GA


class NSGA2(GA):
    """Elitist non-dominated sorting GA.

    Mating uses binary tournaments on (violation, rank, crowding distance);
    survival keeps whole fronts and truncates the last one by crowding
    distance. Parameters are those of :class:`GA`.
    """

    def _validate(self, problem):
        if problem.n_obj < 2:
            raise ConfigurationError("NSGA2 needs at least two objectives; use GA instead")
        self._check_params()

    def _select_parent(self):
        rng = self.rng_
        a, b = rng.choice(len(self.X_), size=2, replace=False)
        cva, cvb = self.cv_[a], self.cv_[b]
        if cva > 0 or cvb > 0:
            if cva != cvb:
                return a if cva < cvb else b
        elif self.rank_[a] != self.rank_[b]:
            return a if self.rank_[a] < self.rank_[b] else b
        elif self.crowding_[a] != self.crowding_[b]:
            return a if self.crowding_[a] > self.crowding_[b] else b
        return a if rng.random() < 0.5 else b

    def _survive(self, X, F, G):
        idx, rank, crowd = rank_and_crowding(F, G, self.pop_size)
        self.X_, self.F_, self.G_ = X[idx], F[idx], G[idx]
        self.rank_, self.crowding_ = rank, crowd
        self.cv_ = np.maximum(self.G_, 0.0).sum(axis=1) if self.G_.shape[1] else np.zeros(len(idx))
