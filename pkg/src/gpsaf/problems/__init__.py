"""Analytic test problems, reference fronts and indicators."""

from ..exceptions import ConfigurationError, UnknownProblemError
from .fronts import default_ref_point, reference_front
from .indicators import hypervolume, igd, non_dominated
from .multi import CLASSIC, DTLZ, ZDT, make_c2dtlz2, make_classic, make_dtlz, make_zdt
from .single import G_PROBLEMS, UNCONSTRAINED, FunctionProblem, make_g_problem, make_unconstrained

DEFAULT_N_VAR = 10

PROBLEM_NAMES = (
    tuple(UNCONSTRAINED) + tuple(G_PROBLEMS) + tuple(ZDT) + DTLZ + tuple(CLASSIC) + ("C2-DTLZ2",)
)


def list_problems():
    return list(PROBLEM_NAMES)


def make_problem(name, n_var=None, n_obj=None):
    """Build a registered problem.

    Scalable problems default to 10 variables (ZDT4 to 5); DTLZ-type problems
    default to three objectives. Fixed-size problems reject ``n_var``.
    """
    if name in G_PROBLEMS or name in CLASSIC:
        fixed = G_PROBLEMS[name][1] if name in G_PROBLEMS else CLASSIC[name][1]
        if n_var is not None and n_var != fixed:
            raise ConfigurationError(f"{name} has a fixed dimension of {fixed}")
        if n_obj is not None and n_obj != (1 if name in G_PROBLEMS else 2):
            raise ConfigurationError(f"{name} has a fixed number of objectives")
        return make_g_problem(name) if name in G_PROBLEMS else make_classic(name)
    if name not in PROBLEM_NAMES:
        raise UnknownProblemError(f"unknown problem {name!r}")
    if n_var is None:
        n_var = 5 if name == "ZDT4" else DEFAULT_N_VAR
    if name in UNCONSTRAINED:
        if n_obj not in (None, 1):
            raise ConfigurationError(f"{name} is single-objective")
        if n_var < 1:
            raise ConfigurationError("n_var must be positive")
        return make_unconstrained(name, n_var)
    if name in ZDT:
        if n_obj not in (None, 2):
            raise ConfigurationError(f"{name} is bi-objective")
        if n_var < 2:
            raise ConfigurationError("ZDT problems need at least two variables")
        return make_zdt(name, n_var)
    M = 3 if n_obj is None else n_obj
    if M < 2 or n_var < M:
        raise ConfigurationError("DTLZ-type problems need n_obj >= 2 and n_var >= n_obj")
    if name == "C2-DTLZ2":
        return make_c2dtlz2(n_var, M)
    return make_dtlz(name, n_var, M)


__all__ = [
    "DEFAULT_N_VAR",
    "FunctionProblem",
    "PROBLEM_NAMES",
    "default_ref_point",
    "hypervolume",
    "igd",
    "list_problems",
    "make_problem",
    "non_dominated",
    "reference_front",
]
