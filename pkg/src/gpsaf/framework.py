"""Surrogate-assisted wrapper around any ask/tell population optimizer.

Each iteration fits one surrogate per objective and constraint, then

1. draws ``alpha`` infill batches from the wrapped algorithm and keeps,
   slot by slot, the better predicted candidate;
2. lets a copy of the algorithm run ``beta`` further generations on
   predictions alone and groups the designs it visits around the nearest
   kept candidate;
3. picks a representative of every group by a knockout tournament whose
   comparisons are blurred by the tracked prediction error;
4. swaps each kept candidate for its group representative with a
   probability that grows with the group size.

Only the final batch is truly evaluated and handed to the wrapped
algorithm. With ``alpha=1`` and ``beta=0`` nothing is changed and the run
reproduces the bare algorithm exactly.
"""

import json

import numpy as np
from scipy.spatial.distance import cdist
from sklearn.base import BaseEstimator

from .core import Archive, Budget, Ordering, Solution, _compare_values, constraint_violation, fork_rng
from .exceptions import BudgetError, ConfigurationError, ContractViolation
from .sampling import sample_doe
from .surrogates.ensemble import SurrogateEnsemble
from .surrogates.metrics import ErrorEstimate

__all__ = [
    "GPSAF",
    "alpha_phase",
    "beta_phase",
    "compare_noisy",
    "prob_knockout_tournament",
    "replacement_phase",
    "replacement_probability",
    "run_gpsaf",
]


def _predicted_solutions(X, F_hat, G_hat):
    return [Solution(x=X[j], f_hat=F_hat[j], g_hat=G_hat[j]) for j in range(len(X))]


def _error_vector(e):
    e = np.asarray(getattr(e, "e", e), dtype=float)
    if np.any(e < 0):
        raise ContractViolation("error estimates must be non-negative")
    return e


def compare_noisy(a, b, e, rng):
    """Winner of ``a`` vs ``b`` after adding Gaussian noise to predictions.

    Every objective and constraint of each solution gets an independent
    ``Normal(0, e_i)`` perturbation; the stored predictions stay untouched.
    Ties are broken by a fair coin.
    """
    fa, ga = a.values(use_predicted=True)
    fb, gb = b.values(use_predicted=True)
    e = _error_vector(e)
    n_obj = len(fa)
    if len(e) != n_obj + len(ga):
        raise ContractViolation("error vector does not match the number of functions")
    na = rng.normal(0.0, e)
    nb = rng.normal(0.0, e)
    o = _compare_values(fa + na[:n_obj], ga + na[n_obj:], fb + nb[:n_obj], gb + nb[n_obj:])
    if o is Ordering.TIE:
        o = Ordering.A_WINS if rng.random() < 0.5 else Ordering.B_WINS
    return a if o is Ordering.A_WINS else b


def prob_knockout_tournament(C, e, k, rng):
    """Select ``min(k, len(C))`` distinct members of ``C`` by noisy knockout.

    The field is shuffled and halved by pairwise :func:`compare_noisy` until
    at most ``k`` remain. An odd field gets one random participant a second
    match. If the last round leaves fewer than ``k`` distinct winners, random
    losers of that round fill the gap.
    """
    if k < 1:
        raise ConfigurationError("k must be at least 1")
    C = list(C)
    if not C:
        return []
    if len(C) <= k:
        return C
    alive = list(rng.permutation(len(C)))
    previous = alive
    while len(alive) > k:
        previous = alive
        field = list(alive)
        if len(field) % 2:
            field.append(field[rng.integers(len(field))])
        winners = []
        for i in range(0, len(field), 2):
            a, b = field[i], field[i + 1]
            w = a if compare_noisy(C[a], C[b], e, rng) is C[a] else b
            if w not in winners:
                winners.append(w)
        alive = winners
    if len(alive) < k:
        losers = [i for i in previous if i not in alive]
        alive += list(rng.choice(losers, size=k - len(alive), replace=False))
    return [C[i] for i in alive]


def replacement_probability(sizes, gamma):
    """``(|U_j| / max |U|) ** gamma``; empty clusters get 0."""
    sizes = np.asarray(sizes, dtype=float)
    if gamma <= 0:
        raise ConfigurationError("gamma must be positive")
    if sizes.size == 0 or sizes.max() <= 0:
        return np.zeros(sizes.shape)
    rho = (sizes / sizes.max()) ** gamma
    rho[sizes == 0] = 0.0
    return rho


def replacement_phase(P, U, V, gamma, rng):
    """Swap ``P[j]`` for ``V[j]`` with probability ``rho_j``; returns a new list."""
    rho = replacement_probability([len(u) for u in U], gamma)
    out = list(P)
    for j, u in enumerate(U):
        if len(u) and rng.random() < rho[j]:
            if V[j] is None:
                raise ContractViolation(f"cluster {j} is non-empty but has no representative")
            out[j] = V[j]
    return out


def alpha_phase(baseline, ensemble, alpha, rng):
    """Slot-wise tournament among ``alpha`` infill batches, refereed by predictions."""
    if alpha < 1:
        raise ConfigurationError("alpha must be at least 1")
    X = np.array(baseline.infill(), dtype=float, ndmin=2)
    F, G = ensemble.predict(X)
    for _ in range(alpha - 1):
        Xq = np.atleast_2d(baseline.infill())
        if Xq.shape != X.shape:
            raise ContractViolation("infill batch size changed between calls")
        Fq, Gq = ensemble.predict(Xq)
        for j in range(len(X)):
            o = _compare_values(F[j], G[j], Fq[j], Gq[j])
            if o is Ordering.B_WINS or (o is Ordering.TIE and rng.random() < 0.5):
                X[j], F[j], G[j] = Xq[j], Fq[j], Gq[j]
    return _predicted_solutions(X, F, G)


def assign_clusters(P_X, Q_X, lower, upper):
    """Index of the nearest row of ``P_X`` for every row of ``Q_X`` in the unit box."""
    span = np.asarray(upper, dtype=float) - np.asarray(lower, dtype=float)
    P = (np.atleast_2d(P_X) - lower) / span
    Q = (np.atleast_2d(Q_X) - lower) / span
    return np.argmin(cdist(Q, P), axis=1)


def beta_phase(baseline, ensemble, P, beta, rng):
    """Clusters of the designs a prediction-driven copy of ``baseline`` visits.

    The copy draws from a child stream of ``rng`` and is discarded, so the
    real algorithm state is never touched.
    """
    U = [[] for _ in P]
    if beta <= 0 or not P:
        return U
    shadow = baseline.snapshot(rng=rng.spawn(1)[0])
    trace = []
    for _ in range(beta):
        X = np.atleast_2d(shadow.infill())
        F, G = ensemble.predict(X)
        shadow.advance(X, F, G)
        trace += _predicted_solutions(X, F, G)
    if not trace:
        return U
    p = baseline.problem_
    nearest = assign_clusters([s.x for s in P], [s.x for s in trace], p.lower, p.upper)
    for s, j in zip(trace, nearest):
        U[j].append(s)
    return U


class GPSAF(BaseEstimator):
    """Settings of a surrogate-assisted run.

    Parameters
    ----------
    alpha : int, default 30
        Infill batches competing per iteration (1 disables the tournament).
    beta : int, default 5
        Look-ahead generations on predictions (0 disables the look-ahead).
    gamma : float, default 0.5
        Exponent tempering the cluster-size replacement probability.
    doe_size : int, default 20
    se_max : int, default 300
        Total number of true evaluations.
    n_starts : int, default 3
        Likelihood-search starts of cold Kriging fits.
    seed : int or None
    """

    def __init__(self, alpha=30, beta=5, gamma=0.5, doe_size=20, se_max=300, n_starts=3,
                 seed=None):
        self.alpha = alpha
        self.beta = beta
        self.gamma = gamma
        self.doe_size = doe_size
        self.se_max = se_max
        self.n_starts = n_starts
        self.seed = seed

    def validate(self, problem=None):
        if int(self.alpha) != self.alpha or self.alpha < 1:
            raise ConfigurationError("alpha must be an integer >= 1")
        if int(self.beta) != self.beta or self.beta < 0:
            raise ConfigurationError("beta must be an integer >= 0")
        if not self.gamma > 0:
            raise ConfigurationError("gamma must be positive")
        if self.doe_size > self.se_max:
            raise BudgetError("doe_size exceeds se_max")
        if problem is not None and self.doe_size < problem.n_var + 2:
            raise ConfigurationError("doe_size must be at least n_var + 2")
        return self

    def run(self, baseline, problem, seed=None, trace=None, indicator=None):
        return run_gpsaf(baseline, problem, self, seed=seed, trace=trace, indicator=indicator)


def best_feasible_f(archive):
    """Smallest feasible first objective, or ``inf`` when nothing is feasible."""
    feasible = archive.CV <= 0
    return float(archive.F[feasible, 0].min()) if feasible.any() else float("inf")


def _json_float(v):
    v = float(v)
    return v if np.isfinite(v) else str(v)


def run_gpsaf(baseline, problem, config=None, seed=None, trace=None, indicator=None):
    """Optimize ``problem`` with ``baseline`` under surrogate assistance.

    Parameters
    ----------
    baseline : Algorithm
        Fresh algorithm; it is set up here with ``seed``.
    config : GPSAF, optional
    seed : int, optional
        Overrides ``config.seed``.
    trace : str, path or writable text stream, optional
        Receives one JSON object per iteration.
    indicator : callable, optional
        ``archive -> float`` logged as the best-so-far value; defaults to the
        best feasible first objective.

    Returns
    -------
    Archive
        Exactly ``config.se_max`` truly evaluated solutions.
    """
    config = GPSAF() if config is None else config
    config.validate(problem)
    seed = config.seed if seed is None else seed
    indicator = best_feasible_f if indicator is None else indicator

    budget = Budget(config.se_max)
    baseline.setup(problem, seed)
    rng = fork_rng(seed, "gpsaf")
    archive = Archive.for_problem(problem)

    X = sample_doe(problem, config.doe_size, fork_rng(seed, "doe"), budget=budget)
    F, G = problem.evaluate(X)
    budget.consume(len(X))
    archive.extend(X, F, G)
    baseline.advance(X, F, G)

    surrogate_seed = int(fork_rng(seed, "surrogate").integers(2**31 - 1))
    ensemble = SurrogateEnsemble.for_problem(problem, n_starts=config.n_starts,
                                             random_state=surrogate_seed)
    error = ErrorEstimate(problem.n_obj + problem.n_constr)
    assisted = config.alpha > 1 or config.beta > 0

    stream, close = None, False
    if trace is not None:
        if hasattr(trace, "write"):
            stream = trace
        else:
            stream, close = open(trace, "w", encoding="utf-8"), True
    try:
        iteration = 0
        while budget.remaining > 0:
            if assisted:
                ensemble.fit(archive.X, archive.F, archive.G)
                if iteration == 0:
                    for i, v in enumerate(ensemble.selected_cv_error()):
                        if np.isfinite(v):
                            error.push(i, v)
                P = alpha_phase(baseline, ensemble, config.alpha, rng)
                U = beta_phase(baseline, ensemble, P, config.beta, rng)
                V = [prob_knockout_tournament(u, error.e, 1, rng)[0] if u else None for u in U]
                rho = replacement_probability([len(u) for u in U], config.gamma)
                P = replacement_phase(P, U, V, config.gamma, rng)[: budget.remaining]
            else:
                # predictions could not change the batch, so skip the surrogates
                P = [Solution(x=x) for x in np.atleast_2d(baseline.infill())]
                U, rho = [[] for _ in P], np.zeros(len(P))
                P = P[: budget.remaining]

            X = problem.clip(np.array([s.x for s in P]))
            F, G = problem.evaluate(X)
            budget.consume(len(X))
            archive.extend(X, F, G)
            baseline.advance(X, F, G)

            if assisted:
                F_hat = np.array([s.f_hat for s in P])
                G_hat = np.array([s.g_hat for s in P]).reshape(len(P), problem.n_constr)
                error.update(np.hstack([F, G]), np.hstack([F_hat, G_hat]))
                ensemble.update_metrics(X, F, G)

            if stream is not None:
                record = {
                    "iteration": iteration,
                    "n_evaluations": len(archive),
                    "batch_size": len(P),
                    "cluster_sizes": [len(u) for u in U],
                    "rho": [float(r) for r in rho],
                    "models": ensemble.selected_names,
                    "error": [float(v) for v in error.e],
                    "best": _json_float(indicator(archive)),
                    "n_feasible": int((constraint_violation(archive.G) <= 0).sum()),
                }
                stream.write(json.dumps(record) + "\n")
            iteration += 1
    finally:
        if close:
            stream.close()
    return archive
