"""stairlab: a desk-scale laboratory for lattice Anderson Hamiltonians.

Finite-volume operators H = -Delta + g*V + U on 1- and 2-particle cubes,
with a piecewise-constant ("staircase") long-range scatterer potential and
singular (Bernoulli / finite-atom) site-amplitude disorder.  The package
assembles operators, computes spectra and lattice Green functions, and runs
reproducible Monte Carlo / exact-enumeration experiments on characteristic
function decay, eigenvalue concentration, eigenvalue comparison, initial
length-scale bounds, multiscale cube classification, and localization
diagnostics.
"""

__version__ = "0.1.0"

from .errors import (
    BudgetError,
    ConfigError,
    ConvergenceError,
    ResonantEnergyError,
    SolverError,
    TruncationError,
)

__all__ = [
    "BudgetError",
    "ConfigError",
    "ConvergenceError",
    "ResonantEnergyError",
    "SolverError",
    "TruncationError",
    "__version__",
]
