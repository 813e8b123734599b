"""Surrogate-assisted wrapping of population-based optimizers."""

from .baselines import DE, GA, NSGA2, PSO, make_baseline
from .core import Algorithm, Archive, Budget, Ordering, Problem, Solution, compare, run_baseline
from .framework import GPSAF, run_gpsaf
from .problems import make_problem
from .sampling import sample_doe
from .surrogates import SurrogateEnsemble

__version__ = "0.1.0"

__all__ = [
    "Algorithm",
    "Archive",
    "Budget",
    "DE",
    "GA",
    "GPSAF",
    "NSGA2",
    "Ordering",
    "PSO",
    "Problem",
    "Solution",
    "SurrogateEnsemble",
    "compare",
    "make_baseline",
    "make_problem",
    "run_baseline",
    "run_gpsaf",
    "sample_doe",
]
