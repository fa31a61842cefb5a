"""Exact 1.5D terrain guarding: visibility, covering LPs and approximation algorithms.

All rationals cross the Python boundary as canonical strings ("7/3"); convert
with fractions.Fraction when you need arithmetic on the Python side.
"""

from ._core import (
    CapExceededError,
    ContinuousRun,
    DiscreteRun,
    EssentialSegments,
    Feasibility,
    FractionalSolution,
    GreedyResult,
    GuardingInstance,
    InfeasibleError,
    OneSidedRun,
    ParseError,
    PointVisibility,
    Solution,
    Terrain,
    TerrainPoint,
    ValidationError,
    VisibilityMatrix,
    brute_force_optimum,
    build_matrix,
    continuous_four_approx,
    covering_lp_text,
    discrete_guarding,
    essential_segments,
    find_forbidden_submatrix,
    generate_random,
    is_integral,
    leftmost_seer,
    make_instance,
    one_sided_two_approx,
    parse_instance,
    parse_solution,
    render_svg,
    serialize_instance,
    serialize_solution,
    solve_covering_lp,
    sort_greedy_standard,
    two_separable_decompose,
    uniform_left_guarding,
    verify_feasible,
    visibility_sets,
    weighted_one_sided_optimal,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
