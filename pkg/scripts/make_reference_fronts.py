"""Regenerate the stored Pareto fronts of BNH, SRN, TNK and OSY.

Each front is the non-dominated feasible subset of a dense sample: a fine
grid over the two-variable problems, known optimal segments, and for OSY
the final populations of long NSGA-II runs. Output goes to
``src/gpsaf/problems/data/<name>.csv`` (``%.12g``, no header).

    python scripts/make_reference_fronts.py
"""

from pathlib import Path

import numpy as np

from gpsaf.baselines import NSGA2
from gpsaf.core import Budget, constraint_violation, run_baseline
from gpsaf.problems import make_problem, non_dominated

OUT = Path(__file__).resolve().parents[1] / "src" / "gpsaf" / "problems" / "data"
MAX_POINTS = 2000


def grid(problem, side=1500):
    a = np.linspace(problem.lower[0], problem.upper[0], side)
    b = np.linspace(problem.lower[1], problem.upper[1], side)
    A, B = np.meshgrid(a, b, indexing="ij")
    return np.column_stack([A.ravel(), B.ravel()])


def nd_2d(F):
    """Non-dominated rows of a bi-objective set by sort-and-sweep."""
    order = np.lexsort((F[:, 1], F[:, 0]))
    keep, best = [], np.inf
    for i in order:
        if F[i, 1] < best:
            keep.append(i)
            best = F[i, 1]
    return F[keep]


def known_segments(name, n=4000):
    t = np.linspace(0.0, 1.0, n)
    if name == "BNH":
        s1 = np.column_stack([3 * t, 3 * t])
        s2 = np.column_stack([3 + 2 * t, np.full(n, 3.0)])
        return np.vstack([s1, s2])
    if name == "SRN":
        return np.column_stack([np.full(n, -2.5), -14.79 + (2.5 + 14.79) * t])
    if name == "TNK":
        phi = t * np.pi / 2
        r = np.sqrt(1.0 + 0.1 * np.cos(16.0 * phi)) + 1e-12
        return np.column_stack([r * np.sin(phi), r * np.cos(phi)])
    if name == "OSY":
        z, o = np.zeros(n), np.ones(n)
        segs = [
            np.column_stack([5 * o, o, 1 + 4 * t, z, 5 * o, z]),
            np.column_stack([5 * o, o, 1 + 4 * t, z, o, z]),
            np.column_stack([4.056 + 0.944 * t, (4.056 + 0.944 * t - 2) / 3, o, z, o, z]),
            np.column_stack([z, 2 * o, 1 + 2.732 * t, z, o, z]),
            np.column_stack([t, 2 - t, o, z, o, z]),
        ]
        return np.vstack(segs)
    return np.empty((0, 2))


def osy_runs(problem, n_runs=5, evals=100_000):
    X = []
    for seed in range(n_runs):
        alg = NSGA2(pop_size=200, n_offspring=200)
        archive = run_baseline(alg, problem, Budget(evals), seed=seed)
        X.append(alg.X_)
        print(f"  OSY run {seed}: {len(archive)} evaluations")
    return np.vstack(X)


def thin(F, n):
    F = F[np.lexsort(F.T[::-1])]
    if len(F) <= n:
        return F
    return F[np.unique(np.round(np.linspace(0, len(F) - 1, n)).astype(int))]


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    for name in ("BNH", "SRN", "TNK", "OSY"):
        problem = make_problem(name)
        X = known_segments(name)
        if problem.n_var == 2:
            X = np.vstack([X, grid(problem)])
        else:
            X = np.vstack([X, osy_runs(problem)])
        X = problem.clip(X)
        F, G = problem.evaluate(X)
        F = F[constraint_violation(G) <= 0]
        F = nd_2d(F)
        F = F[non_dominated(F)]
        F = thin(F, MAX_POINTS)
        np.savetxt(OUT / f"{name}.csv", F, fmt="%.12g", delimiter=",")
        print(f"{name}: {len(F)} points")


if __name__ == "__main__":
    main()
