import itertools
from math import comb

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from gpsaf.bench.stats import domination_ranks, ranksum_counts, wilcoxon_ranksum_less
from gpsaf.exceptions import ConfigurationError


def brute_force_p(x, y):
    """P(W <= w_obs) by enumerating every assignment of ranks to the first sample."""
    pooled = np.concatenate([x, y])
    ranks = np.argsort(np.argsort(pooled)) + 1
    w = ranks[: len(x)].sum()
    N = len(pooled)
    hits = sum(1 for c in itertools.combinations(range(1, N + 1), len(x)) if sum(c) <= w)
    return hits / comb(N, len(x))


def test_exact_example():
    p, reject = wilcoxon_ranksum_less([1, 2, 3], [4, 5, 6])
    assert p == pytest.approx(1 / 20)
    assert not reject


def test_identical_samples():
    p, reject = wilcoxon_ranksum_less([1, 2, 3], [1, 2, 3])
    assert not reject
    assert wilcoxon_ranksum_less([2, 2, 2], [2, 2, 2]) == (1.0, False)


def test_separated_eleven():
    p, reject = wilcoxon_ranksum_less(range(1, 12), range(12, 23))
    assert reject
    assert p == pytest.approx(1 / comb(22, 11))


def test_exact_matches_enumeration():
    rng = np.random.default_rng(0)
    pairs = [(n, m) for n in range(2, 11) for m in range(2, 11) if n + m <= 12]
    for trial in range(200):
        n, m = pairs[trial % len(pairs)]
        x, y = rng.random(n), rng.random(m)
        assert wilcoxon_ranksum_less(x, y)[0] == pytest.approx(brute_force_p(x, y), abs=1e-12)


def test_count_distribution_sums():
    for n, N in [(3, 6), (5, 12), (11, 22)]:
        assert sum(ranksum_counts(n, N)) == comb(N, n)


def test_normal_branch_with_ties():
    from scipy.stats import mannwhitneyu
    x = [1, 1, 2, 3, 3, 3, 4]
    y = [2, 3, 4, 4, 5, 5, 6]
    p, _ = wilcoxon_ranksum_less(x, y)
    ref = mannwhitneyu(x, y, alternative="less", method="asymptotic", use_continuity=True).pvalue
    assert p == pytest.approx(ref, rel=1e-10)


def test_normal_branch_large_sample():
    from scipy.stats import mannwhitneyu
    rng = np.random.default_rng(5)
    x, y = rng.random(15), rng.random(14) + 0.3
    ref = mannwhitneyu(x, y, alternative="less", method="asymptotic").pvalue
    assert wilcoxon_ranksum_less(x, y)[0] == pytest.approx(ref, rel=1e-10)


def test_infinite_values_rank_last():
    p, reject = wilcoxon_ranksum_less(np.arange(11.0), np.full(11, np.inf))
    assert reject


def test_small_sample_error():
    with pytest.raises(ConfigurationError):
        wilcoxon_ranksum_less([1], [1, 2])


@given(st.lists(st.floats(-10, 10), min_size=2, max_size=11),
       st.lists(st.floats(-10, 10), min_size=2, max_size=11))
def test_one_sided_tests_not_both_significant(x, y):
    assert not (wilcoxon_ranksum_less(x, y)[1] and wilcoxon_ranksum_less(y, x)[1])


def test_worked_example_ranks():
    base = np.arange(11, dtype=float)
    samples = {"A": base, "B": base + 30, "C": base + 30.5, "D": base + 31, "E": base + 100}
    ranks = domination_ranks(samples)
    assert [ranks[k]["rank"] for k in "ABCDE"] == [1, 3, 3, 3, 5]
    assert [ranks[k]["dominators"] for k in "ABCDE"] == [0, 1, 1, 1, 4]


def test_all_indistinct():
    rng = np.random.default_rng(0)
    s = rng.random(11)
    ranks = domination_ranks({k: s for k in "ABCDE"})
    assert all(r["rank"] == 3 for r in ranks.values())


def test_rank_sums_conserved():
    rng = np.random.default_rng(1)
    for _ in range(100):
        m = int(rng.integers(2, 7))
        samples = {f"a{i}": rng.normal(rng.normal(scale=2), 1, 11) for i in range(m)}
        if rng.random() < 0.2:
            samples["a0"] = np.full(11, np.inf)
        ranks = domination_ranks(samples)
        assert sum(r["rank"] for r in ranks.values()) == pytest.approx(m * (m + 1) / 2)


def test_failed_algorithm_gets_max_rank():
    base = np.arange(11, dtype=float)
    samples = {"A": base, "B": base + 5, "F": np.full(11, np.inf)}
    ranks = domination_ranks(samples)
    assert ranks["F"]["rank"] == 3 and ranks["F"]["dominators"] is None
    two_failed = domination_ranks({"A": base, "F": np.full(11, np.inf), "G": [1.0] + [np.inf] * 10})
    assert two_failed["F"]["rank"] == two_failed["G"]["rank"] == 2.5
