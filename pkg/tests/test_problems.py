import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from gpsaf.core import constraint_violation
from gpsaf.exceptions import ConfigurationError, UnknownProblemError, UnsupportedFrontError
from gpsaf.problems import list_problems, make_problem, non_dominated, reference_front
from gpsaf.problems.fronts import default_ref_point

# best known values of the G-problems from the benchmark literature
G_OPTIMA = {
    "G1": -15.0,
    "G4": -30665.538671783,
    "G6": -6961.8138755802,
    "G7": 24.306209068179,
    "G8": -0.095825041418,
    "G9": 680.63005737440,
    "G24": -5.5080132715953,
}


def test_registry_contents():
    names = list_problems()
    for name in ["sphere", "rastrigin", "rosenbrock", "ackley", "griewank", "G1", "G4", "G6", "G7",
                 "G8", "G9", "G24", "ZDT1", "ZDT2", "ZDT3", "ZDT4", "ZDT6", "BNH", "SRN", "TNK",
                 "OSY", "C2-DTLZ2"] + [f"DTLZ{i}" for i in range(1, 8)]:
        assert name in names
        p = make_problem(name)
        F, G = p.evaluate((p.lower + p.upper) / 2)
        assert F.shape == (p.n_obj,) and G.shape == (p.n_constr,)


def test_default_dimensions():
    assert make_problem("sphere").n_var == 10
    assert make_problem("ZDT1").n_var == 10
    assert make_problem("ZDT4").n_var == 5
    assert make_problem("DTLZ2").n_obj == 3
    assert make_problem("rastrigin", n_var=4).n_var == 4


def test_registry_errors():
    with pytest.raises(UnknownProblemError):
        make_problem("nope")
    with pytest.raises(ConfigurationError):
        make_problem("G6", n_var=5)
    with pytest.raises(ConfigurationError):
        make_problem("BNH", n_var=3)


def test_unconstrained_optima():
    for name in ["sphere", "rastrigin", "ackley", "griewank"]:
        p = make_problem(name)
        assert p.evaluate(np.zeros(10))[0][0] == pytest.approx(0.0, abs=1e-12)
    assert make_problem("rosenbrock").evaluate(np.ones(10))[0][0] == 0.0


@given(st.integers(0, 9), st.floats(-5.12, 5.12))
def test_rastrigin_unit_coordinate(k, v):
    p = make_problem("rastrigin")
    x = np.full(10, v)
    x[k] = 1.0
    assert p.evaluate(x)[0][0] >= 1.0 - 1e-12


def test_rastrigin_formula():
    x = np.array([0.5, -1.0, 2.0])
    expected = 10 * 3 + np.sum(x ** 2 - 10 * np.cos(2 * np.pi * x))
    assert make_problem("rastrigin", n_var=3).evaluate(x)[0][0] == pytest.approx(expected)


def test_zdt1_origin():
    F, _ = make_problem("ZDT1").evaluate(np.zeros(10))
    assert np.allclose(F, [0.0, 1.0])


@pytest.mark.parametrize("name", sorted(G_OPTIMA))
def test_g_problem_optimum_fixture(name):
    p = make_problem(name)
    F, G = p.evaluate(p.optimum_x)
    assert F[0] == pytest.approx(G_OPTIMA[name], abs=1e-4)
    assert p.known_optimum_f == pytest.approx(G_OPTIMA[name], abs=1e-4)
    assert constraint_violation(G) <= 1e-6


@pytest.mark.parametrize("name", sorted(G_OPTIMA) + ["sphere", "rastrigin", "ackley"])
def test_random_samples_never_beat_optimum(name):
    p = make_problem(name)
    rng = np.random.default_rng(0)
    best = np.inf
    for _ in range(10):
        X = rng.uniform(p.lower, p.upper, (100_000, p.n_var))
        F, G = p.evaluate(X)
        feasible = constraint_violation(G) <= 0
        if feasible.any():
            best = min(best, F[feasible, 0].min())
    assert best >= p.known_optimum_f - 1e-9


@pytest.mark.parametrize("name", ["DTLZ1", "DTLZ2", "DTLZ3", "DTLZ4"])
def test_dtlz_optimal_designs_on_front(name):
    p = make_problem(name)
    rng = np.random.default_rng(0)
    X = np.full((50, 10), 0.5)
    X[:, :2] = rng.random((50, 2))
    F, _ = p.evaluate(X)
    if name == "DTLZ1":
        assert np.allclose(F.sum(1), 0.5)
    else:
        assert np.allclose((F ** 2).sum(1), 1.0)


def test_reference_front_zdt1_three_points():
    R = reference_front("ZDT1", 3)
    assert np.allclose(R, [[0, 1], [0.5, 1 - np.sqrt(0.5)], [1, 0]])


def test_reference_front_shapes():
    R = reference_front("DTLZ2", 200)
    assert R.shape == (200, 3)
    assert np.all(np.abs((R ** 2).sum(1) - 1.0) <= 1e-12)
    assert np.allclose(reference_front("DTLZ1", 100).sum(1), 0.5)


@pytest.mark.parametrize("name", ["ZDT1", "ZDT2", "ZDT3", "ZDT4", "ZDT6", "DTLZ1", "DTLZ2",
                                  "DTLZ5", "DTLZ7", "BNH", "SRN", "TNK", "OSY", "C2-DTLZ2"])
def test_reference_fronts_non_dominated(name):
    R = reference_front(name, 300)
    assert 0 < len(R) <= 300
    assert non_dominated(R).all()


@pytest.mark.parametrize("name", ["BNH", "SRN", "TNK", "OSY"])
def test_stored_fronts_are_feasible_images(name):
    # every stored point must be attainable: no random feasible design dominates it strictly
    p = make_problem(name)
    R = reference_front(name, 2000)
    rng = np.random.default_rng(0)
    X = rng.uniform(p.lower, p.upper, (20000, p.n_var))
    F, G = p.evaluate(X)
    F = F[constraint_violation(G) <= 0]
    margin = 1e-3 * (R.max(0) - R.min(0))
    dominated = np.zeros(len(R), dtype=bool)
    for f in F:
        dominated |= np.all(f < R - margin, axis=1)
    assert dominated.mean() < 0.01


def test_reference_front_unsupported():
    with pytest.raises(UnsupportedFrontError):
        reference_front("sphere")


def test_default_ref_point():
    assert np.allclose(default_ref_point([[1.0, 0.0], [0.0, 2.0]]), [1.1, 2.2])
