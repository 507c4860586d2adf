"""Exact winner determination for fully proportional representation
rules (Chamberlin-Courant and Monroe) on structured preference domains,
with brute-force oracles, domain recognizers, instance generators, and a
hardness-embedding instance transformation."""

from .core import (
    Aggregator,
    Assignment,
    Block,
    ContiguityReport,
    Dissatisfaction,
    DomainViolationError,
    Election,
    FprError,
    InvalidInputError,
    ParseError,
    Rule,
    SizeLimitError,
    SolveResult,
    ValidationReport,
    contiguity_report,
    score,
    validate_assignment,
)
from .domains import (
    ClonePartition,
    check_narcissistic,
    check_single_crossing,
    check_single_peaked_axis,
    compute_width_bruteforce,
    contract_clones,
    find_single_crossing_order,
    find_single_peaked_axis_bruteforce,
    verify_clone_partition,
)
from .cc_solver import CcDpTable, cc_dp_table, solve_cc, solve_cc_width
from .monroe_solver import (
    WorstPositionWindows,
    solve_monroe_contiguous,
    solve_monroe_egalitarian_sc_narcissistic,
)
from .oracle import (
    best_contiguous_bruteforce,
    optimal_balanced_assignment,
    solve_cc_bruteforce,
    solve_monroe_bruteforce,
)
from .reduction import (
    ReductionOutput,
    bracketed_adjustment_profile,
    build_adjustment_profile,
    build_monroe_reduction,
    build_rotation_profile,
    calibrate_offset,
    extract_original_committee,
    rotation_inverse,
)
from .instances import (
    SplitMix64,
    example_sp_axis,
    gen_example_narcissistic_util,
    gen_example_sc_gap,
    gen_example_sp,
    gen_random_sc_narcissistic,
    gen_random_single_crossing,
)
from .cli_io import parse_profile, result_document, run_cli, serialize_profile

__version__ = "0.1.0"

__all__ = [
    "Aggregator", "Assignment", "Block", "CcDpTable", "ClonePartition",
    "ContiguityReport", "Dissatisfaction", "DomainViolationError", "Election",
    "FprError", "InvalidInputError", "ParseError", "ReductionOutput", "Rule",
    "SizeLimitError", "SolveResult", "SplitMix64", "ValidationReport",
    "WorstPositionWindows", "best_contiguous_bruteforce",
    "bracketed_adjustment_profile", "build_adjustment_profile",
    "build_monroe_reduction", "build_rotation_profile", "calibrate_offset",
    "cc_dp_table", "check_narcissistic", "check_single_crossing",
    "check_single_peaked_axis", "compute_width_bruteforce",
    "contiguity_report", "contract_clones", "example_sp_axis",
    "extract_original_committee", "find_single_crossing_order",
    "find_single_peaked_axis_bruteforce", "gen_example_narcissistic_util",
    "gen_example_sc_gap", "gen_example_sp", "gen_random_sc_narcissistic",
    "gen_random_single_crossing", "optimal_balanced_assignment",
    "parse_profile", "result_document", "rotation_inverse", "run_cli",
    "score", "serialize_profile", "solve_cc", "solve_cc_bruteforce",
    "solve_cc_width", "solve_monroe_bruteforce", "solve_monroe_contiguous",
    "solve_monroe_egalitarian_sc_narcissistic", "validate_assignment",
    "verify_clone_partition",
]
