"""Weight-based many-objective fish school search (wmoFSS).

A decomposition-driven swarm optimizer for many-objective problems: the
school is split into clusters, one per reference line, and each cluster
minimizes a penalty-based boundary intersection score along its line. An
SBX-guided variant replaces the random individual move with a step toward
a crossover child of the fish and its cluster leader.

The package ships the DTLZ1-4 benchmarks, the IGD indicator, and a CLI
harness for seeded, reproducible multi-run experiments.
"""

__version__ = "0.1.0"

from .dtlz import ProblemSpec, evaluate, front_targets, ideal_point, make_problem, sample_true_pf
from .metrics import StatSummary, igd, kruskal_wallis, pareto_filter, summarize
from .refgeom import ReferenceLine, ReferenceSet, generate_simplex_lattice, generate_two_layer
from .scalarize import NormalizationState, PbiScore, normalize, pbi, theta_star_dominates, update_bounds
from .swarm import SwarmConfig, VariantConfig, run
from .harness import RunConfig, RunResult, run_experiment

__all__ = [
    "ProblemSpec",
    "evaluate",
    "front_targets",
    "ideal_point",
    "make_problem",
    "sample_true_pf",
    "StatSummary",
    "igd",
    "kruskal_wallis",
    "pareto_filter",
    "summarize",
    "ReferenceLine",
    "ReferenceSet",
    "generate_simplex_lattice",
    "generate_two_layer",
    "NormalizationState",
    "PbiScore",
    "normalize",
    "pbi",
    "theta_star_dominates",
    "update_bounds",
    "SwarmConfig",
    "VariantConfig",
    "run",
    "RunConfig",
    "RunResult",
    "run_experiment",
]
