"""JSON file formats for matrices, decompositions, and sign patterns.

Shared conventions:

* matrix document:        {"n": int, "field": "int"|"rational"|"complex",
                           "entries": [n][n]}
* decomposition document: {"n": int, "rho": int, "field": "int"|"rational"
                           |"float"|"complex", "B": [rho][n][n]}
* sign-pattern document:  {"n": int, "omega": {"2+1": -1, ...}} with keys
                           the fiber partitions joined by "+",
                           descending, and values +1 or -1

Scalar encoding per field: rationals are "p/q" strings (plain integers
also accepted), complex values are [re, im] pairs, floats are JSON
numbers.  Integers are JSON numbers while exactly representable in a
double and decimal strings beyond that, so consumers that parse all
JSON numbers as doubles never silently round; both spellings are
accepted on input.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .chow import GeneralDecomposition, RowStructuredDecomposition
from .monoid import SignPattern, partitions
from .orbital import SolveReport
from .permcore import (
    FIELD_COMPLEX,
    FIELD_INT,
    FIELD_RATIONAL,
    Scalar,
    SquareMatrix,
)

FIELD_FLOAT = "float"

_SAFE_INT = 1 << 53


class FormatError(ValueError):
    """A JSON document does not match the expected schema."""


def _encode_int(v: int) -> Any:
    return v if abs(v) <= _SAFE_INT else str(v)


def _encode_scalar(v: Scalar, field: str) -> Any:
    if field == FIELD_INT:
        return _encode_int(v)
    if field == FIELD_RATIONAL:
        q = Fraction(v)
        return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"
    if field == FIELD_FLOAT:
        return float(v)
    if field == FIELD_COMPLEX:
        z = complex(v)
        return [z.real, z.imag]
    raise FormatError(f"unknown field kind {field!r}")


def _decode_scalar(v: Any, field: str) -> Scalar:
    try:
        if field == FIELD_INT:
            if isinstance(v, str):
                return int(v)
            if isinstance(v, int) and not isinstance(v, bool):
                return v
            raise FormatError(f"expected an integer, got {v!r}")
        if field == FIELD_RATIONAL:
            if isinstance(v, str):
                return Fraction(v)
            if isinstance(v, int) and not isinstance(v, bool):
                return Fraction(v)
            raise FormatError(f"expected an integer or 'p/q' string, got {v!r}")
        if field == FIELD_FLOAT:
            if isinstance(v, (int, float)) and not isinstance(v, bool):
                return float(v)
            if isinstance(v, str):
                return float(v)
            raise FormatError(f"expected a number, got {v!r}")
        if field == FIELD_COMPLEX:
            if isinstance(v, (list, tuple)) and len(v) == 2:
                re, im = v
                return complex(float(re), float(im))
            if isinstance(v, (int, float)) and not isinstance(v, bool):
                return complex(v)
            raise FormatError(f"expected an [re, im] pair, got {v!r}")
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise FormatError(f"bad {field} scalar {v!r}: {exc}") from exc
    raise FormatError(f"unknown field kind {field!r}")


def _require(doc: Any, key: str) -> Any:
    if not isinstance(doc, dict):
        raise FormatError(f"expected a JSON object, got {type(doc).__name__}")
    if key not in doc:
        raise FormatError(f"missing key {key!r}")
    return doc[key]


# ---------------------------------------------------------------------------
# Matrices


def matrix_to_json(A: SquareMatrix) -> dict:
    return {
        "n": A.n,
        "field": A.field_kind,
        "entries": [[_encode_scalar(v, A.field_kind) for v in row] for row in A.entries],
    }


def matrix_from_json(doc: Any) -> SquareMatrix:
    n = _require(doc, "n")
    field = _require(doc, "field")
    entries = _require(doc, "entries")
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise FormatError(f"bad dimension {n!r}")
    if field not in (FIELD_INT, FIELD_RATIONAL, FIELD_COMPLEX):
        raise FormatError(f"unknown matrix field {field!r}")
    if not isinstance(entries, list) or len(entries) != n:
        raise FormatError(f"entries must be an {n}x{n} array")
    rows = []
    for row in entries:
        if not isinstance(row, list) or len(row) != n:
            raise FormatError(f"entries must be an {n}x{n} array")
        rows.append([_decode_scalar(v, field) for v in row])
    return SquareMatrix.from_rows(rows, field_kind=field)


def load_matrix(path: str) -> SquareMatrix:
    with open(path, "r", encoding="utf-8") as handle:
        return matrix_from_json(json.load(handle))


def dump_matrix(A: SquareMatrix, path: str) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        json.dump(matrix_to_json(A), handle, indent=2)
        handle.write("\n")


# ---------------------------------------------------------------------------
# Decompositions


def _infer_field(values) -> str:
    kinds = {type(v) for v in values}
    if complex in kinds:
        return FIELD_COMPLEX
    if float in kinds:
        return FIELD_FLOAT
    if Fraction in kinds:
        return FIELD_RATIONAL
    return FIELD_INT


def decomposition_to_json(D: RowStructuredDecomposition) -> dict:
    field = _infer_field(v for term in D.coeffs for row in term for v in row)
    return {
        "n": D.n,
        "rho": D.rho,
        "field": field,
        "B": [
            [[_encode_scalar(v, field) for v in row] for row in term]
            for term in D.coeffs
        ],
    }


def decomposition_from_json(doc: Any) -> RowStructuredDecomposition:
    n = _require(doc, "n")
    rho = _require(doc, "rho")
    field = _require(doc, "field")
    B = _require(doc, "B")
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise FormatError(f"bad dimension {n!r}")
    if not isinstance(rho, int) or isinstance(rho, bool) or rho < 0:
        raise FormatError(f"bad rank {rho!r}")
    if field not in (FIELD_INT, FIELD_RATIONAL, FIELD_FLOAT, FIELD_COMPLEX):
        raise FormatError(f"unknown decomposition field {field!r}")
    if not isinstance(B, list) or len(B) != rho:
        raise FormatError(f"B must be a {rho}x{n}x{n} array")
    terms = []
    for term in B:
        if not isinstance(term, list) or len(term) != n:
            raise FormatError(f"B must be a {rho}x{n}x{n} array")
        rows = []
        for row in term:
            if not isinstance(row, list) or len(row) != n:
                raise FormatError(f"B must be a {rho}x{n}x{n} array")
            rows.append(tuple(_decode_scalar(v, field) for v in row))
        terms.append(tuple(rows))
    return RowStructuredDecomposition(rho=rho, n=n, coeffs=tuple(terms))


def load_decomposition(path: str) -> RowStructuredDecomposition:
    with open(path, "r", encoding="utf-8") as handle:
        return decomposition_from_json(json.load(handle))


def dump_decomposition(D: RowStructuredDecomposition, path: str) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        json.dump(decomposition_to_json(D), handle, indent=2)
        handle.write("\n")


# ---------------------------------------------------------------------------
# Sign patterns


def _partition_key(partition: tuple[int, ...]) -> str:
    return "+".join(str(part) for part in partition)


def _parse_partition_key(key: str) -> tuple[int, ...]:
    try:
        parts = tuple(int(piece) for piece in key.split("+"))
    except ValueError as exc:
        raise FormatError(f"bad partition key {key!r}") from exc
    if any(p < 1 for p in parts) or list(parts) != sorted(parts, reverse=True):
        raise FormatError(f"partition key must list parts descending: {key!r}")
    return parts


def sign_pattern_to_json(pattern: SignPattern) -> dict:
    return {
        "n": pattern.n,
        "omega": {
            _partition_key(part): pattern.omega[part] for part in partitions(pattern.n)
        },
    }


def sign_pattern_from_json(doc: Any) -> SignPattern:
    n = _require(doc, "n")
    omega_doc = _require(doc, "omega")
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise FormatError(f"bad dimension {n!r}")
    if not isinstance(omega_doc, dict):
        raise FormatError("omega must be an object")
    omega = {}
    for key, value in omega_doc.items():
        if value not in (1, -1) or isinstance(value, bool):
            raise FormatError(f"sign for {key!r} must be 1 or -1, got {value!r}")
        omega[_parse_partition_key(key)] = value
    try:
        return SignPattern(n=n, omega=omega)
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def load_sign_pattern(path: str) -> SignPattern:
    with open(path, "r", encoding="utf-8") as handle:
        return sign_pattern_from_json(json.load(handle))


# ---------------------------------------------------------------------------
# Solver reports


def solve_report_to_json(
    report: SolveReport,
    *,
    n: int,
    target_name: str,
    reduced_only: bool = False,
) -> dict:
    cfg = report.config
    return {
        "n": n,
        "target": target_name,
        "reduced_only": reduced_only,
        "config": {
            "rho": cfg.rho,
            "field": cfg.field,
            "seed": cfg.seed,
            "restarts": cfg.restarts,
            "max_iters": cfg.max_iters,
            "residual_tol": cfg.residual_tol,
            "damping_init": cfg.damping_init,
            "damping_increase": cfg.damping_increase,
            "damping_decrease": cfg.damping_decrease,
            "damping_max": cfg.damping_max,
            "stall_window": cfg.stall_window,
            "stop_on_converged": cfg.stop_on_converged,
        },
        "converged": report.converged,
        "best_residual": report.best_residual,
        "restart_index": report.restart_index,
        "iterations": report.iterations,
        "restarts_run": report.restarts_run,
        "residuals": list(report.residuals),
        "iteration_counts": list(report.iteration_counts),
        "decomposition": decomposition_to_json(report.decomposition),
    }


def dump_solve_report(
    report: SolveReport,
    path: str,
    *,
    n: int,
    target_name: str,
    reduced_only: bool = False,
) -> None:
    doc = solve_report_to_json(
        report, n=n, target_name=target_name, reduced_only=reduced_only
    )
    with open(path, "w", encoding="utf-8") as handle:
        json.dump(doc, handle, indent=2)
        handle.write("\n")


# ---------------------------------------------------------------------------
# General (affine) decompositions — used by the quadratic splitter


def general_decomposition_to_json(D: GeneralDecomposition) -> dict:
    return {
        "rho": D.rho,
        "degree": D.degree,
        "num_vars": D.num_vars,
        "field": FIELD_COMPLEX,
        "terms": [
            [[_encode_scalar(v, FIELD_COMPLEX) for v in form] for form in term]
            for term in D.coeffs
        ],
    }
