"""Seeded experiment grids, run records and rank tables."""

import csv
import io
import json
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from pathlib import Path

import numpy as np

from ..baselines import BASELINES, make_baseline
from ..core import constraint_violation, run_baseline
from ..exceptions import ConfigurationError, UnknownProblemError, UnsupportedFrontError
from ..framework import GPSAF, run_gpsaf
from ..problems import hypervolume, igd, make_problem, non_dominated, reference_front
from .stats import domination_ranks

log = logging.getLogger(__name__)

_FRONT_CACHE = {}


def _front(problem):
    key = (problem.name, problem.n_obj)
    if key not in _FRONT_CACHE:
        _FRONT_CACHE[key] = reference_front(problem.name, n_obj=problem.n_obj)
    return _FRONT_CACHE[key]


def feasible_front(F, G):
    """Non-dominated objective vectors among the feasible rows."""
    F = np.asarray(F, dtype=float)
    F = F[constraint_violation(G) <= 0]
    return F[non_dominated(F)] if len(F) else F


def indicator_name(problem, ref_point=None):
    if problem.n_obj == 1:
        return "gap" if problem.known_optimum_f is not None else "best_f"
    try:
        _front(problem)
        return "igd"
    except UnsupportedFrontError:
        return "neg_hv"


def indicator(problem, F, G, ref_point=None):
    """Performance of an evaluated set; smaller is better, ``inf`` if nothing is feasible.

    Single objective: best feasible value minus the known optimum (or the
    raw best value when no optimum is known). Several objectives: IGD of the
    feasible non-dominated set to the reference front, or the negated
    hypervolume w.r.t. ``ref_point`` when no front is available.
    """
    F = np.atleast_2d(np.asarray(F, dtype=float))
    feasible = constraint_violation(G) <= 0
    if not feasible.any():
        return float("inf")
    if problem.n_obj == 1:
        best = float(F[feasible, 0].min())
        return best - problem.known_optimum_f if problem.known_optimum_f is not None else best
    front = feasible_front(F, G)
    try:
        return igd(front, _front(problem))
    except UnsupportedFrontError:
        if ref_point is None:
            raise ConfigurationError(
                f"{problem.name} has no reference front; a hypervolume ref_point is required"
            ) from None
        return -hypervolume(front, ref_point)


def best_so_far(problem, F, G, ref_point=None):
    """Running minimum of the indicator after each evaluation."""
    F = np.atleast_2d(np.asarray(F, dtype=float))
    G = np.asarray(G, dtype=float).reshape(len(F), -1)
    if problem.n_obj == 1:
        f = np.where(constraint_violation(G) <= 0, F[:, 0], np.inf)
        if problem.known_optimum_f is not None:
            f = f - problem.known_optimum_f
        return np.minimum.accumulate(f)
    values = np.array([indicator(problem, F[: i + 1], G[: i + 1], ref_point)
                       for i in range(len(F))])
    return np.minimum.accumulate(values)


@dataclass
class AlgorithmSpec:
    baseline: str
    gpsaf: bool = False
    params: dict = field(default_factory=dict)
    gpsaf_params: dict = field(default_factory=dict)
    name: str = None

    def __post_init__(self):
        if self.baseline not in BASELINES:
            raise ConfigurationError(f"unknown baseline {self.baseline!r}")
        if self.name is None:
            self.name = f"GPSAF-{self.baseline}" if self.gpsaf else self.baseline


@dataclass
class ProblemSpec:
    name: str
    n_var: int = None
    n_obj: int = None
    se_max: int = None
    ref_point: list = None

    def build(self):
        return make_problem(self.name, n_var=self.n_var, n_obj=self.n_obj)


@dataclass
class ExperimentConfig:
    """An algorithm x problem x seed grid.

    ``problems`` entries are names or mappings with ``name`` and optional
    ``n_var``, ``n_obj``, ``se_max`` and ``ref_point``. ``algorithms``
    entries are baseline names or mappings with ``baseline``, ``gpsaf``,
    ``params``, ``gpsaf_params`` and ``name``. Run ``i`` uses seed
    ``base_seed + i``.
    """

    problems: list
    algorithms: list
    n_runs: int = 11
    se_max: int = 300
    base_seed: int = 0
    trace: bool = False

    def __post_init__(self):
        self.problems = [p if isinstance(p, ProblemSpec)
                         else ProblemSpec(p) if isinstance(p, str) else ProblemSpec(**p)
                         for p in self.problems]
        self.algorithms = [a if isinstance(a, AlgorithmSpec)
                           else AlgorithmSpec(a) if isinstance(a, str) else AlgorithmSpec(**a)
                           for a in self.algorithms]

    @classmethod
    def from_dict(cls, d):
        d = dict(d)
        if "runs" in d:
            d["n_runs"] = d.pop("runs")
        if "budget" in d:
            d["se_max"] = d.pop("budget")
        unknown = set(d) - {"problems", "algorithms", "n_runs", "se_max", "base_seed", "trace"}
        if unknown:
            raise ConfigurationError(f"unknown configuration keys: {sorted(unknown)}")
        try:
            return cls(**d)
        except TypeError as exc:
            raise ConfigurationError(str(exc)) from None

    def validate(self):
        """Fail fast on anything that would break a cell."""
        if not self.problems or not self.algorithms:
            raise ConfigurationError("problems and algorithms must be non-empty")
        if self.n_runs < 2:
            raise ConfigurationError("n_runs must be at least 2")
        names = [a.name for a in self.algorithms]
        if len(set(names)) != len(names):
            raise ConfigurationError("algorithm names must be unique")
        for p in self.problems:
            try:
                problem = p.build()
            except (UnknownProblemError, KeyError) as exc:
                raise ConfigurationError(str(exc)) from None
            budget = p.se_max or self.se_max
            if problem.n_obj > 1 and indicator_name(problem) == "neg_hv" and p.ref_point is None:
                raise ConfigurationError(f"{p.name} needs a ref_point")
            for a in self.algorithms:
                try:
                    alg = make_baseline(a.baseline, **a.params)
                    alg.setup(problem, 0)
                    if a.gpsaf:
                        GPSAF(se_max=budget, **a.gpsaf_params).validate(problem)
                except TypeError as exc:
                    raise ConfigurationError(f"{a.name}: {exc}") from None
        return self

    def cells(self):
        for p in self.problems:
            for a in self.algorithms:
                for i in range(self.n_runs):
                    yield {
                        "problem": asdict(p),
                        "algorithm": asdict(a),
                        "seed": self.base_seed + i,
                        "se_max": p.se_max or self.se_max,
                    }


def _label(problem_spec):
    label = problem_spec["name"]
    if problem_spec.get("n_var"):
        label += f"-{problem_spec['n_var']}"
    if problem_spec.get("n_obj"):
        label += f"-m{problem_spec['n_obj']}"
    return label


def run_cell(cell, trace_dir=None):
    """Run one grid cell; failures become an ``inf`` record with the error."""
    pspec = ProblemSpec(**cell["problem"])
    aspec = AlgorithmSpec(**cell["algorithm"])
    seed, se_max = cell["seed"], cell["se_max"]
    record = {"problem": _label(cell["problem"]), "algorithm": aspec.name, "seed": seed,
              "se_max": se_max, "indicator": None, "value": float("inf"), "trace": [],
              "front": [], "wall_time": 0.0, "error": None}
    start = time.perf_counter()
    try:
        problem = pspec.build()
        record["indicator"] = indicator_name(problem)
        alg = make_baseline(aspec.baseline, **aspec.params)
        if aspec.gpsaf:
            config = GPSAF(se_max=se_max, **aspec.gpsaf_params)
            trace = None
            if trace_dir is not None:
                trace = str(Path(trace_dir) / f"{record['problem']}__{aspec.name}__{seed}.jsonl")
            archive = run_gpsaf(alg, problem, config, seed=seed, trace=trace)
        else:
            archive = run_baseline(alg, problem, se_max, seed=seed)
        F, G = archive.F, archive.G
        record["value"] = indicator(problem, F, G, pspec.ref_point)
        record["trace"] = best_so_far(problem, F, G, pspec.ref_point).tolist()
        record["front"] = feasible_front(F, G).tolist()
    except Exception as exc:  # noqa: BLE001 - a failed cell must not stop the grid
        log.warning("cell %s/%s/%s failed: %s", record["problem"], aspec.name, seed, exc)
        record["error"] = f"{type(exc).__name__}: {exc}"
        record["value"] = float("inf")
    record["wall_time"] = time.perf_counter() - start
    return record


def _finite_or_none(v):
    return v if np.isfinite(v) else None


def dump_record(record):
    r = dict(record)
    r["value"] = _finite_or_none(r["value"])
    r["trace"] = [_finite_or_none(v) for v in r["trace"]]
    return json.dumps(r)


def load_records(path):
    """Read run records; ``null`` values come back as ``inf``."""
    out = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            if not line.strip():
                continue
            r = json.loads(line)
            r["value"] = float("inf") if r["value"] is None else float(r["value"])
            r["trace"] = [float("inf") if v is None else float(v) for v in r["trace"]]
            out.append(r)
    return out


def rank_table(records, alpha=0.05):
    """Rows ``(problem, algorithm, n_runs, median, dominators, rank)`` plus suite means."""
    problems, algorithms, samples = [], [], {}
    for r in records:
        if r["problem"] not in problems:
            problems.append(r["problem"])
        if r["algorithm"] not in algorithms:
            algorithms.append(r["algorithm"])
        samples.setdefault(r["problem"], {}).setdefault(r["algorithm"], []).append(r["value"])
    rows = []
    totals = {a: [] for a in algorithms}
    for p in problems:
        ranks = domination_ranks(samples[p], alpha) if len(samples[p]) > 1 else {
            a: {"dominators": 0, "rank": 1.0} for a in samples[p]}
        for a in algorithms:
            if a not in samples[p]:
                continue
            v = np.asarray(samples[p][a], dtype=float)
            rows.append({"problem": p, "algorithm": a, "n_runs": len(v),
                         "median": float(np.median(v)),
                         "dominators": ranks[a]["dominators"], "rank": ranks[a]["rank"]})
            totals[a].append(ranks[a]["rank"])
    for a in algorithms:
        rows.append({"problem": "mean", "algorithm": a, "n_runs": "", "median": "",
                     "dominators": "", "rank": float(np.mean(totals[a]))})
    return rows


def _fmt(v):
    if v is None or v == "":
        return ""
    if isinstance(v, float):
        return "%.12g" % v
    return str(v)


def write_rank_csv(rows, path):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["problem", "algorithm", "n_runs", "median", "dominators", "rank"])
    for r in rows:
        w.writerow([_fmt(r[k]) for k in ("problem", "algorithm", "n_runs", "median",
                                         "dominators", "rank")])
    Path(path).write_text(buf.getvalue(), encoding="utf-8")


def format_rank_table(rows):
    """Plain-text table of ranks; ``*`` marks the best rank in each row group."""
    algorithms = list(dict.fromkeys(r["algorithm"] for r in rows))
    problems = list(dict.fromkeys(r["problem"] for r in rows))
    cell = {(r["problem"], r["algorithm"]): r["rank"] for r in rows}
    width = max(8, *(len(a) for a in algorithms)) + 2
    pw = max(8, *(len(p) for p in problems)) + 2
    lines = ["problem".ljust(pw) + "".join(a.rjust(width) for a in algorithms)]
    for p in problems:
        vals = [cell.get((p, a)) for a in algorithms]
        best = min(v for v in vals if v is not None)
        parts = []
        for v in vals:
            s = "" if v is None else f"{v:.2f}" + ("*" if v == best else " ")
            parts.append(s.rjust(width))
        lines.append(p.ljust(pw) + "".join(parts))
    return "\n".join(lines) + "\n"


def write_front(front, path):
    front = np.asarray(front, dtype=float)
    if front.size == 0:
        Path(path).write_text("", encoding="utf-8")
        return
    np.savetxt(path, front.reshape(len(front), -1), fmt="%.12g", delimiter=",")


def _run_cells(cells, jobs, trace_dir):
    if jobs <= 1:
        return [run_cell(c, trace_dir) for c in cells]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(run_cell, cells, [trace_dir] * len(cells)))


def run_experiment(config, out_dir, jobs=1):
    """Run every cell of ``config`` and write records, fronts and rank tables.

    Files in ``out_dir``: ``runs.jsonl`` (one record per cell, grid order),
    ``fronts/<problem>__<algorithm>__<seed>.csv``, ``ranks.csv`` and
    ``ranks.txt``; per-iteration traces go to ``traces/`` when enabled.
    Returns the list of records.
    """
    config.validate()
    out = Path(out_dir)
    (out / "fronts").mkdir(parents=True, exist_ok=True)
    trace_dir = None
    if config.trace:
        trace_dir = out / "traces"
        trace_dir.mkdir(exist_ok=True)
    cells = list(config.cells())
    records = _run_cells(cells, jobs, str(trace_dir) if trace_dir else None)
    with open(out / "runs.jsonl", "w", encoding="utf-8") as fh:
        for r in records:
            fh.write(dump_record(r) + "\n")
    for r in records:
        write_front(r["front"], out / "fronts" / f"{r['problem']}__{r['algorithm']}__{r['seed']}.csv")
    rows = rank_table(records)
    write_rank_csv(rows, out / "ranks.csv")
    (out / "ranks.txt").write_text(format_rank_table(rows), encoding="utf-8")
    return records
