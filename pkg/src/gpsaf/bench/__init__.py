"""Experiment harness, indicators and rank statistics."""

from .harness import (
    AlgorithmSpec,
    ExperimentConfig,
    ProblemSpec,
    best_so_far,
    feasible_front,
    indicator,
    load_records,
    rank_table,
    run_cell,
    run_experiment,
)
from .stats import domination_ranks, wilcoxon_ranksum_less

__all__ = [
    "AlgorithmSpec",
    "ExperimentConfig",
    "ProblemSpec",
    "best_so_far",
    "domination_ranks",
    "feasible_front",
    "indicator",
    "load_records",
    "rank_table",
    "run_cell",
    "run_experiment",
    "wilcoxon_ranksum_less",
]
