"""Particle swarm optimization with feasibility-first personal/global bests."""

import numpy as np

from ..core import Algorithm, Ordering, _compare_values
from ..exceptions import ConfigurationError
from ._operators import feasibility_first_order


class PSO(Algorithm):
    """Global-best PSO that emits the whole swarm on every ``infill``.

    Parameters
    ----------
    swarm_size : int, default 20
    w : float, default 0.7
        Inertia weight.
    c1, c2 : float, default 1.5
        Cognitive and social acceleration coefficients.
    v_max : float, default 0.2
        Velocity clamp as a fraction of each variable's range.
    """

    def __init__(self, swarm_size=20, w=0.7, c1=1.5, c2=1.5, v_max=0.2):
        self.swarm_size = swarm_size
        self.w = w
        self.c1 = c1
        self.c2 = c2
        self.v_max = v_max

    def _validate(self, problem):
        if problem.n_obj != 1:
            raise ConfigurationError("PSO is single-objective")
        if self.swarm_size < 1:
            raise ConfigurationError("swarm_size must be positive")
        if not 0.0 <= self.w < 1.0:
            raise ConfigurationError("w must lie in [0, 1)")
        if self.c1 <= 0 or self.c2 <= 0:
            raise ConfigurationError("c1 and c2 must be positive")
        if self.v_max <= 0:
            raise ConfigurationError("v_max must be positive")

    @property
    def initial_size(self):
        return self.swarm_size

    @property
    def best_(self):
        return self.pbest_X_[self.gbest_], self.pbest_F_[self.gbest_], self.pbest_G_[self.gbest_]

    def _initialize(self, X, F, G):
        if len(X) > self.swarm_size:
            order = feasibility_first_order(F, G)[: self.swarm_size]
            X, F, G = X[order], F[order], G[order]
        self.X_ = X.copy()
        self.V_ = np.zeros_like(X)
        self.pbest_X_, self.pbest_F_, self.pbest_G_ = X.copy(), F.copy(), G.copy()
        self._update_gbest()

    def _update_gbest(self):
        best = 0
        for i in range(1, len(self.pbest_X_)):
            o = _compare_values(self.pbest_F_[i], self.pbest_G_[i],
                                self.pbest_F_[best], self.pbest_G_[best])
            if o is Ordering.A_WINS:
                best = i
        self.gbest_ = best

    def _infill(self):
        p, rng = self.problem_, self.rng_
        n, d = self.X_.shape
        r1, r2 = rng.random((n, d)), rng.random((n, d))
        vmax = self.v_max * (p.upper - p.lower)
        V = (self.w * self.V_
             + self.c1 * r1 * (self.pbest_X_ - self.X_)
             + self.c2 * r2 * (self.pbest_X_[self.gbest_] - self.X_))
        V = np.clip(V, -vmax, vmax)
        return np.clip(self.X_ + V, p.lower, p.upper)

    def _advance(self, X, F, G):
        # slot j belongs to particle j; the velocity is the realised move
        for j in range(min(len(X), len(self.X_))):
            self.V_[j] = X[j] - self.X_[j]
            self.X_[j] = X[j]
            o = _compare_values(F[j], G[j], self.pbest_F_[j], self.pbest_G_[j])
            if o is Ordering.A_WINS:
                self.pbest_X_[j], self.pbest_F_[j], self.pbest_G_[j] = X[j], F[j], G[j]
        self._update_gbest()
