"""Exact matrix permanents, the function-class census behind them, and
product-rank (sums of products of linear forms) decompositions.

The package splits into:

* :mod:`permchow.permcore` - four exact permanent algorithms and the
  grid/Walsh-Hadamard evaluation pipeline,
* :mod:`permchow.monoid` - the transformation monoid of all functions
  on {0..n-1}, its two-sided symmetric-group action, and the partition
  census of its classes,
* :mod:`permchow.chow` - decomposition data model, Ryser/Glynn
  certificates, exact verification, and the bivariate quadratic split,
* :mod:`permchow.orbital` - coefficient-matching equation systems and
  the damped least-squares rank search,
* :mod:`permchow.serialization` / :mod:`permchow.cli` - JSON formats
  and the ``permchow`` executable.
"""

from .chow import (
    GeneralDecomposition,
    RowStructuredDecomposition,
    TargetSpec,
    VerificationReport,
    build_glynn,
    build_ryser,
    coefficient,
    decompose_bivariate_quadratic,
    evaluate,
    extract_all_coefficients,
    target_coefficient,
    verify_against_target,
)
from .errors import GuardError, InexactDivisionError
from .monoid import (
    ClassRecord,
    FunctionTable,
    SignPattern,
    act,
    all_functions,
    all_permutations,
    canonical_representative,
    compose,
    enumerate_classes,
    fiber_partition,
    hardy_ramanujan_estimate,
    lex_fun,
    lex_pair,
    lex_perm,
    orbit,
    partition_count,
    partitions,
    stabilizer_order,
    unrank_fun,
    unrank_perm,
)
from .orbital import (
    CoefficientEquation,
    SolveReport,
    SolverConfig,
    build_full_system,
    build_reduced_system,
    jacobian,
    orbital_exponent_table,
    residual,
    solve,
)
from .permcore import (
    EvaluationPoint,
    SquareMatrix,
    check_parity_dependence,
    eval_product_form,
    fwht,
    per_glynn,
    per_naive,
    per_ryser,
    per_via_hadamard,
    random_matrix,
)
from .serialization import (
    FormatError,
    decomposition_from_json,
    decomposition_to_json,
    dump_decomposition,
    dump_matrix,
    dump_solve_report,
    load_decomposition,
    load_matrix,
    load_sign_pattern,
    matrix_from_json,
    matrix_to_json,
    sign_pattern_from_json,
    sign_pattern_to_json,
    solve_report_to_json,
)

__version__ = "0.1.0"

__all__ = [
    "ClassRecord",
    "CoefficientEquation",
    "EvaluationPoint",
    "FormatError",
    "FunctionTable",
    "GeneralDecomposition",
    "GuardError",
    "InexactDivisionError",
    "RowStructuredDecomposition",
    "SignPattern",
    "SolveReport",
    "SolverConfig",
    "SquareMatrix",
    "TargetSpec",
    "VerificationReport",
    "act",
    "all_functions",
    "all_permutations",
    "build_full_system",
    "build_glynn",
    "build_reduced_system",
    "build_ryser",
    "canonical_representative",
    "check_parity_dependence",
    "coefficient",
    "compose",
    "decompose_bivariate_quadratic",
    "decomposition_from_json",
    "decomposition_to_json",
    "dump_decomposition",
    "dump_matrix",
    "dump_solve_report",
    "enumerate_classes",
    "eval_product_form",
    "evaluate",
    "extract_all_coefficients",
    "fiber_partition",
    "fwht",
    "hardy_ramanujan_estimate",
    "jacobian",
    "lex_fun",
    "lex_pair",
    "lex_perm",
    "load_decomposition",
    "load_matrix",
    "load_sign_pattern",
    "matrix_from_json",
    "matrix_to_json",
    "orbit",
    "orbital_exponent_table",
    "partition_count",
    "partitions",
    "per_glynn",
    "per_naive",
    "per_ryser",
    "per_via_hadamard",
    "random_matrix",
    "residual",
    "sign_pattern_from_json",
    "sign_pattern_to_json",
    "solve",
    "solve_report_to_json",
    "stabilizer_order",
    "target_coefficient",
    "unrank_fun",
    "unrank_perm",
    "verify_against_target",
]
