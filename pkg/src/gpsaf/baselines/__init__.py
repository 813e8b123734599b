"""Population-based algorithms exposing the infill/advance contract."""

from ._operators import crowding_distance, non_dominated_sort, rank_and_crowding
from .de import DE
from .ga import GA
from .nsga2 import NSGA2
from .pso import PSO

BASELINES = {"GA": GA, "DE": DE, "PSO": PSO, "NSGA2": NSGA2, "NSGA-II": NSGA2}


def make_baseline(name, **params):
    try:
        cls = BASELINES[name]
    except KeyError:
        raise KeyError(f"unknown baseline {name!r}; choose from {sorted(BASELINES)}") from None
    return cls(**params)


__all__ = ["DE", "GA", "NSGA2", "PSO", "BASELINES", "make_baseline",
           "crowding_distance", "non_dominated_sort", "rank_and_crowding"]
