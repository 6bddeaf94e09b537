"""Systems of quadratic Diophantine equations: normal form, bounded search and
modular refutation.
"""
from .system import (
    Equation,
    Inconclusive,
    NoSolutionWithinBound,
    QuadSystem,
    Solution,
    SolveOutcome,
    UnsatisfiableProof,
    evaluate,
    validate,
)
from .solver import (
    DEFAULT_BUDGET,
    DEFAULT_MODULUS_CAP,
    decide,
    modular_obstruction,
    solve_within_bound,
)
