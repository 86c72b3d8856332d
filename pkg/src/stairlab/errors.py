"""Exception types shared across the package.

Plain ValueError is used for local argument misuse (bad radius, region not
inside a window, ...).  The classes below mark conditions that callers are
expected to branch on: invalid experiment configuration, exceeded
enumeration budgets, and solver-level failures that must map to distinct
process exit codes in the CLI.
"""


class ConfigError(ValueError):
    """Experiment configuration is invalid (CLI exit code 2)."""


class BudgetError(RuntimeError):
    """An enumeration or problem-size budget was exceeded (CLI exit code 3)."""


class SolverError(RuntimeError):
    """Base class for numerical solver failures (CLI exit code 4)."""


class TruncationError(SolverError):
    """A certified truncation bound could not be met.

    Carries the radius (or parameter) that would be required.
    """

    def __init__(self, message, required=None):
        super().__init__(message)
        self.required = required


class ResonantEnergyError(SolverError):
    """The sampled energy is within the resonance floor of the spectrum.

    Semantically meaningful for cube classification: a resonant cube is
    singular.
    """


class ConvergenceError(SolverError):
    """An iterative solve did not converge; carries the best residual seen."""

    def __init__(self, message, best_residual=None):
        super().__init__(message)
        self.best_residual = best_residual
