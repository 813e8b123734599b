import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from gpsaf.baselines import DE, GA, NSGA2, PSO
from gpsaf.core import (
    Archive,
    Budget,
    Ordering,
    Problem,
    Solution,
    compare,
    constraint_violation,
    fork_rng,
    run_baseline,
    violation,
)
from gpsaf.exceptions import (
    BudgetError,
    ContractViolation,
    MissingValuesError,
    StalledAlgorithmError,
)
from gpsaf.problems import make_problem


def sol(f, g=()):
    return Solution(x=np.zeros(1), f=np.atleast_1d(np.asarray(f, float)), g=np.asarray(g, float))


class CountingSphere(Problem):
    name = "counting"

    def __init__(self, n_var=2):
        super().__init__(n_var, 1, 0, -1.0, 1.0)
        self.calls = 0

    def _evaluate(self, X):
        self.calls += len(X)
        return (X ** 2).sum(1), np.empty((len(X), 0))


class Stalled(GA):
    def _infill(self):
        return np.empty((0, self.problem_.n_var))


def test_compare_examples():
    assert compare(sol([1.0]), sol([2.0])) is Ordering.A_WINS
    assert compare(sol([0.0], [0.5]), sol([9.0], [0.2])) is Ordering.B_WINS
    assert compare(sol([1, 2]), sol([2, 1])) is Ordering.TIE


def test_compare_feasible_beats_infeasible():
    assert compare(sol([100.0], [-1.0]), sol([0.0], [0.1])) is Ordering.A_WINS
    assert compare(sol([0.0], [0.1]), sol([100.0], [0.0])) is Ordering.B_WINS


def test_compare_equal_violation_is_tie():
    assert compare(sol([0.0], [0.5, -1]), sol([5.0], [0.25, 0.25])) is Ordering.TIE


def test_compare_uses_predictions():
    a = Solution(x=np.zeros(1), f=np.array([5.0]), f_hat=np.array([0.0]))
    b = Solution(x=np.zeros(1), f=np.array([0.0]), f_hat=np.array([5.0]))
    assert compare(a, b) is Ordering.B_WINS
    assert compare(a, b, use_predicted=True) is Ordering.A_WINS


def test_compare_errors():
    with pytest.raises(ContractViolation):
        compare(sol([1.0]), sol([1.0, 2.0]))
    with pytest.raises(MissingValuesError):
        compare(Solution(x=np.zeros(1)), sol([1.0]))
    with pytest.raises(MissingValuesError):
        compare(sol([1.0]), sol([1.0]), use_predicted=True)


def test_violation_examples():
    assert violation(sol([0], [-1, -2])) == 0.0
    assert violation(sol([0], [0.5, -1])) == 0.5
    assert violation(sol([0], [0.5, 0.25])) == 0.75
    with pytest.raises(MissingValuesError):
        violation(Solution(x=np.zeros(1), f=np.zeros(1)))


def test_violation_scale_flag():
    assert violation(sol([0], [0.5, 0.5]), scale=[0.5, 1.0]) == 1.5
    assert constraint_violation(np.array([[1.0, 2.0]]), scale=[2.0, 4.0])[0] == 1.0


vectors = arrays(float, 3, elements=st.floats(-10, 10, allow_nan=False))


@given(vectors, vectors, vectors, vectors)
def test_compare_antisymmetric(fa, fb, ga, gb):
    ab = compare(sol(fa, ga), sol(fb, gb))
    ba = compare(sol(fb, gb), sol(fa, ga))
    assert ab.value == -ba.value


@given(vectors, vectors)
def test_compare_irreflexive(f, g):
    assert compare(sol(f, g), sol(f, g)) is Ordering.TIE


@given(st.floats(-5, 5), st.floats(-5, 5), st.floats(-5, 5))
def test_scalar_wins_are_transitive(a, b, c):
    sa, sb, sc = sol([a]), sol([b]), sol([c])
    if compare(sa, sb) is Ordering.A_WINS and compare(sb, sc) is Ordering.A_WINS:
        assert compare(sa, sc) is Ordering.A_WINS


@given(vectors, st.floats(0.01, 5), vectors)
def test_feasible_dominates_infeasible(f, excess, fb):
    feasible = sol(f, [-1.0, 0.0])
    infeasible = sol(fb, [excess, -1.0])
    assert compare(feasible, infeasible) is Ordering.A_WINS


def test_fork_rng_labels_are_independent():
    a = fork_rng(1, "algorithm").random(5)
    assert np.array_equal(a, fork_rng(1, "algorithm").random(5))
    assert not np.array_equal(a, fork_rng(1, "doe").random(5))
    assert not np.array_equal(a, fork_rng(2, "algorithm").random(5))


def test_problem_validation_and_shapes():
    with pytest.raises(ContractViolation):
        CountingSphere.__bases__[0](2, 1, 0, [0, 1], [1, 1])
    p = CountingSphere(3)
    F, G = p.evaluate(np.zeros(3))
    assert F.shape == (1,) and G.shape == (0,)
    F, G = p.evaluate(np.zeros((4, 3)))
    assert F.shape == (4, 1) and G.shape == (4, 0)
    with pytest.raises(ContractViolation):
        p.evaluate(np.zeros((2, 2)))
    with pytest.raises(ValueError):
        p.lower[0] = 5.0


def test_archive_roundtrip():
    a = Archive(2, 1, 1)
    a.extend([[0, 1], [1, 0]], [1.0, 2.0], [[-1.0], [0.5]])
    assert len(a) == 2
    assert np.array_equal(a.CV, [0.0, 0.5])
    s = a[1]
    assert np.array_equal(s.x, [1, 0]) and s.f[0] == 2.0
    assert [t.f[0] for t in a] == [1.0, 2.0]
    X = a.X
    X[0, 0] = 99
    assert a.X[0, 0] == 0


def test_budget():
    b = Budget(5)
    b.consume(3)
    assert b.remaining == 2
    with pytest.raises(BudgetError):
        b.consume(3)
    with pytest.raises(BudgetError):
        Budget(2, used=3)


def test_run_baseline_budget_accounting():
    archive = run_baseline(GA(pop_size=20, n_offspring=10), make_problem("sphere", n_var=2), Budget(30), seed=0)
    assert len(archive) == 30


def test_run_baseline_truncates_last_batch():
    b = Budget(35)
    archive = run_baseline(GA(), make_problem("sphere", n_var=2), b, seed=0)
    assert len(archive) == 35 and b.used == 35


def test_run_baseline_zero_budget():
    p = CountingSphere()
    archive = run_baseline(GA(), p, Budget(0), seed=0)
    assert len(archive) == 0 and p.calls == 0


@pytest.mark.parametrize("alg,name", [(GA, "sphere"), (DE, "G6"), (PSO, "ackley"), (NSGA2, "ZDT2")])
def test_run_baseline_deterministic(alg, name):
    p = make_problem(name)
    assert run_baseline(alg(), p, 80, seed=4) == run_baseline(alg(), p, 80, seed=4)
    assert not run_baseline(alg(), p, 80, seed=4) == run_baseline(alg(), p, 80, seed=5)


def test_run_baseline_stalled():
    with pytest.raises(StalledAlgorithmError):
        run_baseline(Stalled(), make_problem("sphere", n_var=2), 50, seed=0)


def test_infill_before_setup():
    with pytest.raises(RuntimeError):
        GA().infill()


def test_advance_shape_checks():
    alg = GA().setup(make_problem("sphere", n_var=2), 0)
    with pytest.raises(ContractViolation):
        alg.advance(np.zeros((3, 3)), np.zeros(3))
    with pytest.raises(ContractViolation):
        alg.advance(np.zeros((3, 2)), np.zeros(3), np.zeros((3, 1)))


def test_advance_accepts_foreign_designs():
    p = make_problem("sphere", n_var=2)
    alg = GA().setup(p, 0)
    X = np.random.default_rng(0).uniform(-1, 1, (25, 2))
    F, G = p.evaluate(X)
    alg.advance(X, F, G)
    assert len(alg.X_) == 20
    assert alg.infill().shape == (10, 2)


@pytest.mark.parametrize("alg,name", [(GA, "sphere"), (DE, "sphere"), (PSO, "sphere"), (NSGA2, "ZDT1")])
def test_snapshot_independence(alg, name):
    p = make_problem(name)
    a = alg().setup(p, 1)
    X = a.infill()
    a.advance(X, *p.evaluate(X))
    reference = a.snapshot()
    copy = a.snapshot(rng=np.random.default_rng(9))
    for _ in range(3):
        Xc = copy.infill()
        copy.advance(Xc, *p.evaluate(Xc))
    assert np.array_equal(a.infill(), reference.infill())
