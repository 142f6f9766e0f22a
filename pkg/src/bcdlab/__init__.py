"""Block coordinate descent laboratory.

A library of blocking strategies, block selection rules, and block update
rules for large-scale smooth and composite minimization, together with an
experiment harness (synthetic problem generators, solver loop, trace and
report emission) and a command line front end.
"""

from bcdlab.objectives import (
    Quadratic,
    LeastSquares,
    Logistic,
    MultiClassLogistic,
    GraphQuadratic,
    NonNegative,
    L1,
    NonNegativeL1,
    problem_from_dict,
)
from bcdlab.blocking import (
    Block,
    FixedPartition,
    DependencyGraph,
    ForestState,
    partition_fixed,
    sample_tau_nice,
    greedy_forest,
    random_forest,
    red_black_partition,
    tree_partition_lattice,
    level_sets,
)
from bcdlab.solver import SolverConfig, run

__all__ = [
    "Quadratic",
    "LeastSquares",
    "Logistic",
    "MultiClassLogistic",
    "GraphQuadratic",
    "NonNegative",
    "L1",
    "NonNegativeL1",
    "problem_from_dict",
    "Block",
    "FixedPartition",
    "DependencyGraph",
    "ForestState",
    "partition_fixed",
    "sample_tau_nice",
    "greedy_forest",
    "random_forest",
    "red_black_partition",
    "tree_partition_lattice",
    "level_sets",
    "SolverConfig",
    "run",
]

__version__ = "0.1.0"
