"""Variation and survival operators shared by the baseline algorithms."""

import numpy as np

from ..core import constraint_violation


def sbx(p1, p2, lower, upper, eta, prob, rng):
    """Simulated binary crossover on a pair of parents (bounded variant)."""
    c1, c2 = p1.copy(), p2.copy()
    if rng.random() > prob:
        return c1, c2
    n = len(p1)
    do = rng.random(n) <= 0.5
    do &= np.abs(p1 - p2) > 1e-14
    for i in np.flatnonzero(do):
        y1, y2 = min(p1[i], p2[i]), max(p1[i], p2[i])
        lb, ub = lower[i], upper[i]
        r = rng.random()
        delta = y2 - y1

        beta = 1.0 + 2.0 * (y1 - lb) / delta
        alpha = 2.0 - beta ** -(eta + 1.0)
        betaq = (r * alpha) ** (1.0 / (eta + 1.0)) if r <= 1.0 / alpha else (
            1.0 / (2.0 - r * alpha)) ** (1.0 / (eta + 1.0))
        a = 0.5 * ((y1 + y2) - betaq * delta)

        beta = 1.0 + 2.0 * (ub - y2) / delta
        alpha = 2.0 - beta ** -(eta + 1.0)
        betaq = (r * alpha) ** (1.0 / (eta + 1.0)) if r <= 1.0 / alpha else (
            1.0 / (2.0 - r * alpha)) ** (1.0 / (eta + 1.0))
        b = 0.5 * ((y1 + y2) + betaq * delta)

        a, b = min(max(a, lb), ub), min(max(b, lb), ub)
        if rng.random() <= 0.5:
            a, b = b, a
        c1[i], c2[i] = a, b
    return c1, c2


def polynomial_mutation(x, lower, upper, eta, prob, rng):
    """Bounded polynomial mutation applied per variable with probability ``prob``."""
    y = x.copy()
    for i in np.flatnonzero(rng.random(len(x)) < prob):
        lb, ub = lower[i], upper[i]
        delta1 = (y[i] - lb) / (ub - lb)
        delta2 = (ub - y[i]) / (ub - lb)
        r = rng.random()
        mut_pow = 1.0 / (eta + 1.0)
        if r < 0.5:
            xy = 1.0 - delta1
            val = 2.0 * r + (1.0 - 2.0 * r) * xy ** (eta + 1.0)
            deltaq = val ** mut_pow - 1.0
        else:
            xy = 1.0 - delta2
            val = 2.0 * (1.0 - r) + 2.0 * (r - 0.5) * xy ** (eta + 1.0)
            deltaq = 1.0 - val ** mut_pow
        y[i] = min(max(y[i] + deltaq * (ub - lb), lb), ub)
    return y


def feasibility_first_order(F, G):
    """Stable ranking for single-objective survival.

    Feasible solutions first by objective, then infeasible ones by violation;
    equal keys keep their input order.
    """
    cv = constraint_violation(G)
    infeasible = cv > 0
    key2 = np.where(infeasible, cv, F[:, 0])
    return np.lexsort((key2, infeasible))


def dominance_matrix(F):
    """``D[i, j]`` is True when row ``i`` Pareto-dominates row ``j``."""
    le = np.all(F[:, None, :] <= F[None, :, :], axis=2)
    lt = np.any(F[:, None, :] < F[None, :, :], axis=2)
    return le & lt


def non_dominated_sort(F):
    """Partition row indices into fronts; front 0 is non-dominated."""
    n = len(F)
    if n == 0:
        return []
    D = dominance_matrix(F)
    n_dominators = D.sum(axis=0)
    fronts = []
    current = np.flatnonzero(n_dominators == 0)
    assigned = np.zeros(n, dtype=bool)
    while current.size:
        fronts.append(current)
        assigned[current] = True
        n_dominators = n_dominators - D[current].sum(axis=0)
        current = np.flatnonzero((n_dominators == 0) & ~assigned)
    return fronts


def crowding_distance(F):
    """Crowding distance; boundary points get infinity."""
    n, m = F.shape
    if n <= 2:
        return np.full(n, np.inf)
    cd = np.zeros(n)
    for k in range(m):
        order = np.argsort(F[:, k], kind="stable")
        fk = F[order, k]
        span = fk[-1] - fk[0]
        cd[order[0]] = cd[order[-1]] = np.inf
        if span <= 0:
            continue
        cd[order[1:-1]] += (fk[2:] - fk[:-2]) / span
    return cd


def rank_and_crowding(F, G, n_survive):
    """Constrained NSGA-II survival.

    Returns the indices of the ``n_survive`` survivors plus the rank and
    crowding distance of every survivor (infeasible solutions get ranks after
    all feasible fronts, ordered by violation).
    """
    cv = constraint_violation(G)
    feas = np.flatnonzero(cv <= 0)
    infeas = np.flatnonzero(cv > 0)
    survivors, ranks, crowd = [], [], []
    rank = 0
    for front in non_dominated_sort(F[feas]):
        idx = feas[front]
        cd = crowding_distance(F[idx])
        if len(survivors) + len(idx) > n_survive:
            k = n_survive - len(survivors)
            # descending crowding; equal values keep index order
            keep = np.argsort(-cd, kind="stable")[:k]
            idx, cd = idx[keep], cd[keep]
        survivors.extend(idx)
        ranks.extend([rank] * len(idx))
        crowd.extend(cd)
        rank += 1
        if len(survivors) >= n_survive:
            break
    if len(survivors) < n_survive and infeas.size:
        order = infeas[np.argsort(cv[infeas], kind="stable")]
        for i in order[: n_survive - len(survivors)]:
            survivors.append(i)
            ranks.append(rank)
            crowd.append(0.0)
            rank += 1
    return np.asarray(survivors, dtype=int), np.asarray(ranks, dtype=int), np.asarray(crowd)
