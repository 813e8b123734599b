"""Latin hypercube designs."""

import numpy as np
from scipy.spatial.distance import pdist

from .exceptions import BudgetError, ConfigurationError


def lhs(n_samples, n_dim, rng):
    """Latin hypercube sample in the unit cube.

    Each column has exactly one point in each of the ``n_samples`` equal
    strata of [0, 1].
    """
    u = rng.random((n_samples, n_dim))
    strata = np.argsort(rng.random((n_samples, n_dim)), axis=0)
    return (strata + u) / n_samples


def maximin_lhs(n_samples, n_dim, rng, n_restarts=100):
    """Best of ``n_restarts`` hypercubes by minimal pairwise distance.

    The first candidate consumes the generator exactly like :func:`lhs`, so
    the result is never worse than a plain hypercube from the same seed.
    """
    best, best_d = None, -np.inf
    for _ in range(max(1, n_restarts)):
        cand = lhs(n_samples, n_dim, rng)
        d = pdist(cand).min() if n_samples > 1 else np.inf
        if d > best_d:
            best, best_d = cand, d
    return best


def sample_doe(problem, n_samples, rng, n_restarts=100, budget=None):
    """Space-filling initial design scaled to the problem bounds."""
    if n_samples < 1:
        raise ConfigurationError("the design must contain at least one point")
    if budget is not None and n_samples > budget.remaining:
        raise BudgetError(
            f"design of {n_samples} points exceeds the remaining budget of {budget.remaining}"
        )
    U = maximin_lhs(n_samples, problem.n_var, rng, n_restarts)
    return problem.lower + U * (problem.upper - problem.lower)
