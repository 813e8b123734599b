"""Exception types raised across the package."""

from sklearn.exceptions import NotFittedError

__all__ = [
    "BudgetError",
    "ConfigurationError",
    "ContractViolation",
    "EmptyInputError",
    "EnsembleFitError",
    "MissingValuesError",
    "NotFittedError",
    "NumericInputError",
    "StalledAlgorithmError",
    "UndefinedMetricError",
    "UnknownProblemError",
    "UnsupportedDimensionError",
    "UnsupportedFrontError",
]


class ContractViolation(ValueError):
    """Arguments disagree in shape or dimension."""


class MissingValuesError(ValueError):
    """A solution lacks the value set requested for a comparison."""


class ConfigurationError(ValueError):
    """Invalid hyperparameter or configuration value."""


class BudgetError(ValueError):
    """A request would exceed the evaluation budget."""


class StalledAlgorithmError(RuntimeError):
    """An algorithm produced no designs to evaluate."""


class UnknownProblemError(KeyError):
    """No problem is registered under the requested name."""

    def __str__(self):
        return str(self.args[0]) if self.args else ""


class UnsupportedFrontError(ValueError):
    """No reference front is available for the problem."""


class UnsupportedDimensionError(ValueError):
    """The number of objectives is not supported by the routine."""


class EmptyInputError(ValueError):
    """An indicator received an empty point set."""


class EnsembleFitError(RuntimeError):
    """Every surrogate candidate failed for some function."""


class UndefinedMetricError(ValueError):
    """A metric is undefined for the given input size."""


class NumericInputError(ValueError):
    """Non-finite value passed where a finite one is required."""
