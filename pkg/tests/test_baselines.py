import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from gpsaf.baselines import DE, GA, NSGA2, PSO, crowding_distance, make_baseline, non_dominated_sort
from gpsaf.baselines._operators import dominance_matrix, rank_and_crowding
from gpsaf.baselines.ga import tournament
from gpsaf.core import Budget, run_baseline
from gpsaf.exceptions import ConfigurationError, ContractViolation
from gpsaf.problems import make_problem


def started(alg, problem, seed=0):
    alg.setup(problem, seed)
    X = alg.infill()
    alg.advance(X, *problem.evaluate(X))
    return alg


@pytest.mark.parametrize("alg,name", [(GA(), "G6"), (DE(), "G24"), (PSO(), "rastrigin"), (NSGA2(), "BNH")])
def test_infill_within_bounds(alg, name):
    p = make_problem(name)
    started(alg, p)
    for _ in range(5):
        X = alg.infill()
        assert np.all(X >= p.lower) and np.all(X <= p.upper)
        alg.advance(X, *p.evaluate(X))


def test_ga_first_infill_size():
    p = make_problem("sphere", n_var=2)
    X = GA(pop_size=20).setup(p, 0).infill()
    assert X.shape == (20, 2)
    assert np.all(X >= p.lower) and np.all(X <= p.upper)


def test_ga_repeated_infill_differs():
    alg = started(GA(), make_problem("sphere"))
    assert alg.infill().shape == (10, 10)
    assert not np.array_equal(alg.infill(), alg.infill())


def test_tournament_favors_dominator():
    rng = np.random.default_rng(0)
    F = np.arange(20, dtype=float)[:, None] + 1
    F[7] = -100
    G = np.empty((20, 0))
    wins = sum(tournament(F, G, rng) == 7 for _ in range(1000))
    assert wins > 1000 / 20 * 1.5


def test_ga_survival_elitism():
    p = make_problem("sphere", n_var=3)
    alg = started(GA(), p)
    before = alg.X_.copy()
    worse = np.full((10, 3), 5.0)
    alg.advance(worse, *p.evaluate(worse))
    assert np.array_equal(alg.X_, before)
    best = np.zeros((1, 3))
    alg.advance(best, *p.evaluate(best))
    assert np.array_equal(alg.X_[0], best[0])


def test_ga_all_infeasible_keeps_smallest_violation():
    p = make_problem("G6")
    alg = GA().setup(p, 0)
    rng = np.random.default_rng(1)
    X = rng.uniform(p.lower, p.upper, (30, 2))
    F = rng.random((30, 1))
    G = rng.uniform(0.1, 5, (30, 2))
    alg.advance(X, F, G)
    cv = G.sum(1)
    assert sorted(np.round(alg.G_.sum(1), 12)) == sorted(np.round(np.sort(cv)[:20], 12))


def test_ga_config_errors():
    p = make_problem("sphere")
    for bad in (dict(pop_size=1), dict(sbx_prob=0.0), dict(pm_prob=1.5)):
        with pytest.raises(ConfigurationError):
            GA(**bad).setup(p, 0)
    with pytest.raises(ConfigurationError):
        GA().setup(make_problem("ZDT1"), 0)


def test_de_degenerate_scale_copies_donor():
    p = make_problem("sphere", n_var=4)
    alg = started(DE(F=0.0, CR=1.0), p)
    trials = alg.infill()
    assert all(any(np.array_equal(t, x) for x in alg.X_) for t in trials)


def test_de_keeps_target_when_trial_worse():
    p = make_problem("sphere", n_var=4)
    alg = started(DE(), p)
    before = alg.X_.copy()
    trials = alg.infill()
    alg.advance(trials, np.full((len(trials), 1), 1e9), np.empty((len(trials), 0)))
    assert np.array_equal(alg.X_, before)


def test_de_targets_fixed_until_advance():
    alg = started(DE(), make_problem("sphere"))
    alg.infill()
    t = alg.targets_.copy()
    alg.infill()
    assert np.array_equal(t, alg.targets_)


def test_de_monotone_best():
    p = make_problem("sphere", n_var=5)
    alg = DE().setup(p, 3)
    running = []
    while len(running) < 29:
        X = alg.infill()
        alg.advance(X, *p.evaluate(X))
        running.append(alg.best_[1][0])
    assert np.all(np.diff(running) <= 0)


def test_de_config_errors():
    p = make_problem("sphere")
    with pytest.raises(ConfigurationError):
        DE(pop_size=3).setup(p, 0)
    with pytest.raises(ConfigurationError):
        DE(F=2.5).setup(p, 0)
    with pytest.raises(ConfigurationError):
        DE(CR=1.5).setup(p, 0)


def test_pso_fixed_point():
    p = make_problem("sphere", n_var=3)
    alg = PSO(swarm_size=5, w=0.0).setup(p, 0)
    X = np.ones((5, 3))
    alg.advance(X, *p.evaluate(X))
    assert np.array_equal(alg.infill(), X)


def test_pso_pbest_update():
    p = make_problem("sphere", n_var=3)
    alg = started(PSO(), p)
    X = alg.X_.copy()
    X[4] = 0.0
    alg.advance(X, *p.evaluate(X))
    assert np.array_equal(alg.pbest_X_[4], np.zeros(3))
    assert alg.gbest_ == 4


def test_pso_pbest_is_best_reported():
    p = make_problem("rastrigin", n_var=4)
    alg = started(PSO(swarm_size=8), p, seed=5)
    seen = [[f] for f in alg.pbest_F_[:, 0]]
    gbest = [alg.pbest_F_[alg.gbest_, 0]]
    for _ in range(15):
        X = alg.infill()
        F, G = p.evaluate(X)
        for j in range(8):
            seen[j].append(F[j, 0])
        alg.advance(X, F, G)
        gbest.append(alg.pbest_F_[alg.gbest_, 0])
    assert np.allclose(alg.pbest_F_[:, 0], [min(s) for s in seen])
    assert np.all(np.diff(gbest) <= 0)


def test_pso_config_errors():
    p = make_problem("sphere")
    for bad in (dict(w=1.0), dict(c1=0.0), dict(c2=-1.0)):
        with pytest.raises(ConfigurationError):
            PSO(**bad).setup(p, 0)


def test_nsga2_requires_multiple_objectives():
    with pytest.raises(ConfigurationError):
        NSGA2().setup(make_problem("sphere"), 0)


def test_nsga2_identity_survival():
    t = np.linspace(0, 1, 20)
    F = np.column_stack([t, 1 - t])
    idx, rank, _ = rank_and_crowding(F, np.empty((20, 0)), 20)
    assert sorted(idx) == list(range(20)) and np.all(rank == 0)


def test_nsga2_first_front_fits_exactly():
    t = np.linspace(0, 1, 10)
    F = np.vstack([np.column_stack([t, 1 - t]), np.column_stack([t, 1 - t]) + 1])
    idx, _, _ = rank_and_crowding(F, np.empty((20, 0)), 10)
    assert sorted(idx) == list(range(10))


def test_nsga2_crowding_truncation():
    rng = np.random.default_rng(2)
    t = np.sort(rng.random(22))
    F = np.column_stack([t, 1 - np.sqrt(t)])
    cd = crowding_distance(F)
    idx, _, _ = rank_and_crowding(F, np.empty((22, 0)), 20)
    dropped = set(range(22)) - set(idx)
    assert dropped == set(np.argsort(cd)[:2])
    assert {0, 21} <= set(idx)


def test_crowding_boundary_infinite():
    F = np.array([[0.0, 1.0], [0.5, 0.5], [1.0, 0.0]])
    cd = crowding_distance(F)
    assert np.isinf(cd[0]) and np.isinf(cd[2]) and cd[1] == pytest.approx(2.0)


def test_infeasible_ranked_after_feasible():
    F = np.array([[0.0, 0.0], [5.0, 5.0], [1.0, 1.0]])
    G = np.array([[1.0], [-1.0], [0.5]])
    idx, _, _ = rank_and_crowding(F, G, 3)
    assert list(idx) == [1, 2, 0]


@given(arrays(float, (25, 2), elements=st.integers(0, 6).map(float)))
def test_non_dominated_sort_partitions(F):
    fronts = non_dominated_sort(F)
    flat = np.concatenate(fronts)
    assert sorted(flat) == list(range(len(F)))
    D = dominance_matrix(F)
    for k in range(1, len(fronts)):
        for j in fronts[k]:
            assert D[fronts[k - 1], j].any()
    for front in fronts:
        assert not D[np.ix_(front, front)].any()


@pytest.mark.parametrize("alg,name", [(GA(), "sphere"), (DE(), "sphere")])
def test_elitist_best_never_worsens(alg, name):
    p = make_problem(name)
    started(alg, p, seed=7)
    best = [alg.best_[1][0]]
    for _ in range(20):
        X = alg.infill()
        alg.advance(X, *p.evaluate(X))
        best.append(alg.best_[1][0])
    assert np.all(np.diff(best) <= 0)


def test_make_baseline():
    assert isinstance(make_baseline("NSGA-II"), NSGA2)
    assert make_baseline("GA", pop_size=30).get_params()["pop_size"] == 30
    with pytest.raises(KeyError):
        make_baseline("CMAES")


def test_advance_dimension_mismatch():
    alg = started(GA(), make_problem("sphere"))
    with pytest.raises(ContractViolation):
        alg.advance(np.zeros((2, 10)), np.zeros((2, 2)))


def test_budget_object_reused_in_loop():
    b = Budget(45)
    run_baseline(PSO(), make_problem("sphere"), b, seed=0)
    assert b.used == 45
