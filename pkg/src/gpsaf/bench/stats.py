"""One-sided rank-sum tests and domination-count ranking."""

import numpy as np
from scipy.special import comb
from scipy.stats import norm, rankdata

from ..exceptions import ConfigurationError

EXACT_MAX_TOTAL = 22


def ranksum_counts(n, N):
    """Number of ``n``-subsets of ``{1..N}`` with each possible rank sum.

    Index ``s`` of the result holds the count for sum ``s``.
    """
    max_sum = n * (2 * N - n + 1) // 2
    c = np.zeros((n + 1, max_sum + 1), dtype=object)
    c[0, 0] = 1
    for r in range(1, N + 1):
        for k in range(min(r, n), 0, -1):
            c[k, r:] = c[k, r:] + c[k - 1, : max_sum + 1 - r]
    return c[n]


def _exact_p_less(w, n, N):
    counts = ranksum_counts(n, N)
    return float(sum(counts[: int(w) + 1]) / comb(N, n, exact=True))


def _normal_p_less(w, ranks, n, m):
    N = n + m
    _, t = np.unique(ranks, return_counts=True)
    var = n * m / 12.0 * ((N + 1) - np.sum(t ** 3 - t) / (N * (N - 1)))
    if var <= 0:
        return 1.0
    mean = n * (N + 1) / 2.0
    z = (w - mean + 0.5) / np.sqrt(var)
    return float(min(1.0, norm.cdf(z)))


def wilcoxon_ranksum_less(x, y, alpha=0.05):
    """One-sided rank-sum test of "``x`` tends to be smaller than ``y``".

    The exact null distribution is used for tie-free samples of total size
    at most 22; otherwise a normal approximation with tie and continuity
    corrections. Samples that are all equal give ``p = 1``.

    Returns
    -------
    (p, reject) with ``reject = p < alpha``.
    """
    x = np.asarray(x, dtype=float).ravel()
    y = np.asarray(y, dtype=float).ravel()
    n, m = len(x), len(y)
    if n < 2 or m < 2:
        raise ConfigurationError("both samples need at least two values")
    if np.any(np.isnan(x)) or np.any(np.isnan(y)):
        raise ConfigurationError("samples must not contain NaN")
    pooled = np.concatenate([x, y])
    if np.all(pooled == pooled[0]):
        return 1.0, False
    ranks = rankdata(pooled)
    w = ranks[:n].sum()
    ties = len(np.unique(pooled)) < len(pooled)
    if n + m <= EXACT_MAX_TOTAL and not ties:
        p = _exact_p_less(w, n, n + m)
    else:
        p = _normal_p_less(w, ranks, n, m)
    return p, bool(p < alpha)


def _average_ranks(keys, offset=0):
    """Ranks ``offset+1..offset+len`` by ascending key, equal keys averaged."""
    return rankdata(keys, method="average") + offset if len(keys) else np.empty(0)


def failed_sample(values):
    """True when a sample cannot enter the tests: fewer than two finite runs."""
    v = np.asarray(values, dtype=float)
    return np.isfinite(v).sum() < 2


def domination_ranks(samples, alpha=0.05):
    """Rank algorithms by how many others are significantly better.

    ``samples`` maps algorithm name to its per-run indicator values
    (smaller is better). ``dominators[A]`` counts algorithms whose values
    are significantly smaller than A's. Algorithms are ranked by that count
    with ties sharing the average of their ranks. Algorithms with fewer than
    two finite runs are not tested and share the worst ranks.

    Returns
    -------
    dict name -> {"dominators": int or None, "rank": float}
    """
    names = list(samples)
    if len(names) < 2:
        raise ConfigurationError("ranking needs at least two algorithms")
    ok = [a for a in names if not failed_sample(samples[a])]
    failed = [a for a in names if a not in ok]
    count = {a: 0 for a in ok}
    for a in ok:
        for b in ok:
            if a != b and wilcoxon_ranksum_less(samples[b], samples[a], alpha)[1]:
                count[a] += 1
    out = {}
    ranks_ok = _average_ranks([count[a] for a in ok])
    for a, r in zip(ok, ranks_ok):
        out[a] = {"dominators": count[a], "rank": float(r)}
    ranks_failed = _average_ranks(np.zeros(len(failed)), offset=len(ok))
    for a, r in zip(failed, ranks_failed):
        out[a] = {"dominators": None, "rank": float(r)}
    return {a: out[a] for a in names}
