"""Exact matrix permanents.

Four routes to the same number:

* :func:`per_naive` sums over all n! permutations (the definition),
* :func:`per_ryser` uses inclusion-exclusion over column subsets with
  Gray-code row-sum updates, O(2^n * n),
* :func:`per_glynn` averages signed row sums over 2^(n-1) sign vectors,
* :func:`per_via_hadamard` evaluates the row-product polynomial
  F_A(x) = prod_i (sum_j a_ij x_j) on a {h,0}^n or {h,-h}^n grid,
  applies the 2^n Walsh-Hadamard transform and reads off one entry.

All four agree exactly over exact scalar fields (Python ints and
fractions.Fraction); the complex field uses ordinary double arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from typing import Iterable, Sequence, Union

from .errors import InexactDivisionError, check_guard

Scalar = Union[int, Fraction, float, complex]

FIELD_INT = "int"
FIELD_RATIONAL = "rational"
FIELD_COMPLEX = "complex"
FIELD_KINDS = (FIELD_INT, FIELD_RATIONAL, FIELD_COMPLEX)

NAIVE_GUARD = 10
POWER_GUARD = 30


def _coerce_entry(value: Scalar, field_kind: str) -> Scalar:
    if field_kind == FIELD_INT:
        if isinstance(value, bool) or not isinstance(value, int):
            raise TypeError(f"int field requires int entries, got {value!r}")
        return value
    if field_kind == FIELD_RATIONAL:
        if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
            return Fraction(value)
        raise TypeError(f"rational field requires int or Fraction entries, got {value!r}")
    if field_kind == FIELD_COMPLEX:
        if isinstance(value, (int, float, complex)) and not isinstance(value, bool):
            return complex(value)
        raise TypeError(f"complex field requires numeric entries, got {value!r}")
    raise ValueError(f"unknown field kind {field_kind!r}")


@dataclass(frozen=True)
class SquareMatrix:
    """An n-by-n matrix over one of the supported scalar fields.

    Entries are stored row-major; the (i, j) entry sits at flat position
    n*i + j, which is the indexing every transpose/permutation helper
    respects.
    """

    n: int
    entries: tuple[tuple[Scalar, ...], ...]
    field_kind: str = FIELD_INT

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("matrix dimension must be positive")
        if self.field_kind not in FIELD_KINDS:
            raise ValueError(f"unknown field kind {self.field_kind!r}")
        if len(self.entries) != self.n or any(len(row) != self.n for row in self.entries):
            raise ValueError(f"entries must form an {self.n}x{self.n} array")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Scalar]], field_kind: str = FIELD_INT) -> "SquareMatrix":
        n = len(rows)
        coerced = tuple(
            tuple(_coerce_entry(v, field_kind) for v in row) for row in rows
        )
        return cls(n=n, entries=coerced, field_kind=field_kind)

    def entry(self, i: int, j: int) -> Scalar:
        return self.entries[i][j]

    def row(self, i: int) -> tuple[Scalar, ...]:
        return self.entries[i]

    def transpose(self) -> "SquareMatrix":
        n = self.n
        rows = tuple(tuple(self.entries[j][i] for j in range(n)) for i in range(n))
        return SquareMatrix(n, rows, self.field_kind)

    def permute(self, row_perm: Sequence[int], col_perm: Sequence[int]) -> "SquareMatrix":
        """Return the matrix with rows/columns rearranged: new[i][j] = old[row_perm[i]][col_perm[j]]."""
        n = self.n
        rows = tuple(
            tuple(self.entries[row_perm[i]][col_perm[j]] for j in range(n))
            for i in range(n)
        )
        return SquareMatrix(n, rows, self.field_kind)

    def row_sums(self) -> list[Scalar]:
        return [sum(row) for row in self.entries]


@dataclass(frozen=True)
class EvaluationPoint:
    """A point (x_0, ..., x_{n-1}) plus the grid step h used by the
    finite-difference pipelines."""

    coords: tuple[Scalar, ...]
    step: Scalar = 1

    def __post_init__(self) -> None:
        if self.step == 0:
            raise ValueError("step must be nonzero")

    @classmethod
    def of(cls, coords: Iterable[Scalar], step: Scalar = 1) -> "EvaluationPoint":
        return cls(coords=tuple(coords), step=step)

    def negated(self) -> "EvaluationPoint":
        return EvaluationPoint(tuple(-c for c in self.coords), self.step)


def _coords_of(point: "EvaluationPoint | Sequence[Scalar]") -> Sequence[Scalar]:
    if isinstance(point, EvaluationPoint):
        return point.coords
    return point


def per_naive(A: SquareMatrix, max_n: int = NAIVE_GUARD) -> Scalar:
    """Permanent by the definition: sum over all permutations sigma of
    prod_i A[i, sigma(i)].  Factorial cost, guarded at ``max_n``."""
    check_guard(A.n, max_n, "per_naive")
    rows = A.entries
    total = 0
    for sigma in permutations(range(A.n)):
        term = 1
        for i, j in enumerate(sigma):
            term *= rows[i][j]
        total += term
    return total


def per_ryser(A: SquareMatrix) -> Scalar:
    """Permanent via inclusion-exclusion over nonempty column subsets S:

        Per(A) = sum_S (-1)^(n-|S|) prod_i (sum_{j in S} a_ij)

    Subsets are visited in Gray-code order so each step updates the n
    row sums by a single column, giving O(2^n * n) scalar operations.
    """
    check_guard(A.n, POWER_GUARD, "per_ryser")
    n = A.n
    columns = list(zip(*A.entries))
    prod = math.prod
    row_sums = [0] * n
    total = 0
    prev_gray = 0
    size = 0
    for m in range(1, 1 << n):
        gray = m ^ (m >> 1)
        flipped = gray ^ prev_gray
        column = columns[flipped.bit_length() - 1]
        if gray & flipped:
            for i in range(n):
                row_sums[i] += column[i]
            size += 1
        else:
            for i in range(n):
                row_sums[i] -= column[i]
            size -= 1
        term = prod(row_sums)
        total += term if (n - size) % 2 == 0 else -term
        prev_gray = gray
    return total


def _divide_exact(value: Scalar, denom: int, field_kind: str) -> Scalar:
    if field_kind == FIELD_INT:
        q, r = divmod(value, denom)
        if r != 0:
            raise InexactDivisionError(
                f"internal error: {value} not divisible by {denom}"
            )
        return q
    if field_kind == FIELD_RATIONAL:
        return Fraction(value, 1) / denom
    return value / denom


def per_glynn(A: SquareMatrix) -> Scalar:
    """Permanent via the 2^(n-1) sign-vector average

        Per(A) = 2^(1-n) * sum_{d in {+-1}^n, d_0=+1} (prod_k d_k) prod_i (sum_j d_j a_ij)

    Sign vectors are visited in Gray-code order.  Over the integer field
    the undivided sum is accumulated exactly and divided once at the end;
    a nonzero remainder there would be a bug, not bad input.
    """
    check_guard(A.n, POWER_GUARD, "per_glynn")
    n = A.n
    columns = list(zip(*A.entries))
    prod = math.prod
    # delta starts as all +1; bits 0..n-2 of the counter flip delta_1..delta_{n-1}
    row_sums = [sum(row) for row in A.entries]
    delta_sign = 1  # prod_k delta_k
    deltas = [1] * n
    total = prod(row_sums)
    prev_gray = 0
    for m in range(1, 1 << (n - 1)):
        gray = m ^ (m >> 1)
        flipped = gray ^ prev_gray
        j = flipped.bit_length()  # bit b toggles delta_{b+1}
        step = 2 * deltas[j]
        deltas[j] = -deltas[j]
        column = columns[j]
        for i in range(n):
            row_sums[i] -= step * column[i]
        delta_sign = -delta_sign
        total += delta_sign * prod(row_sums)
        prev_gray = gray
    return _divide_exact(total, 1 << (n - 1), A.field_kind)


def eval_product_form(A: SquareMatrix, point: "EvaluationPoint | Sequence[Scalar]") -> Scalar:
    """Evaluate F_A(x) = prod_i (sum_j a_ij x_j), the degree-n homogeneous
    product of the row linear forms."""
    coords = _coords_of(point)
    if len(coords) != A.n:
        raise ValueError(f"point has {len(coords)} coordinates, matrix needs {A.n}")
    result = 1
    for row in A.entries:
        acc = 0
        for a, x in zip(row, coords):
            acc += a * x
        result *= acc
    return result


def fwht(vector: Sequence[Scalar]) -> list[Scalar]:
    """Apply the 2^k-point Walsh-Hadamard transform ((1,1),(1,-1))^(x)k.

    Works over any scalar type that supports + and -; the input is not
    modified.  Length must be a power of two.
    """
    m = len(vector)
    if m == 0 or m & (m - 1):
        raise ValueError(f"length {m} is not a power of two")
    out = list(vector)
    h = 1
    while h < m:
        for start in range(0, m, 2 * h):
            for j in range(start, start + h):
                x, y = out[j], out[j + h]
                out[j] = x + y
                out[j + h] = x - y
        h *= 2
    return out


SCHEME_RYSER = "ryser01"
SCHEME_GLYNN = "glynn±"
_SCHEME_ALIASES = {SCHEME_RYSER: SCHEME_RYSER, SCHEME_GLYNN: SCHEME_GLYNN, "glynn": SCHEME_GLYNN}


def per_via_hadamard(A: SquareMatrix, scheme: str = SCHEME_RYSER, h: Scalar = 1) -> Scalar:
    """Permanent through the unified grid/transform pipeline.

    The 2^n grid values F_A(x) are laid out so that bit b of the flat
    index controls coordinate x_{n-1-b}: bit 0 means x = h, bit 1 means
    x = 0 (scheme ``ryser01``) or x = -h (scheme ``glynn±``).  Index 0 is
    therefore F_A(h,...,h) and index 2^n - 1 is F_A(0,...,0) resp.
    F_A(-h,...,-h).  After the Walsh-Hadamard transform, entry 2^n - 1
    divided by h^n (ryser01) or (2h)^n (glynn±) is Per(A), for every
    nonzero h: by degree-n homogeneity of F_A the step cancels.
    """
    if h == 0:
        raise ValueError("step h must be nonzero")
    scheme = _SCHEME_ALIASES.get(scheme)
    if scheme is None:
        raise ValueError("scheme must be 'ryser01' or 'glynn±'")
    check_guard(A.n, POWER_GUARD, "per_via_hadamard")
    n = A.n
    rows = A.entries
    low = 0 if scheme == SCHEME_RYSER else -h
    size = 1 << n
    grid = [0] * size
    for c in range(size):
        coords = [h if (c >> (n - 1 - j)) & 1 == 0 else low for j in range(n)]
        value = 1
        for row in rows:
            acc = 0
            for a, x in zip(row, coords):
                if x != 0:
                    acc += a * x
            value *= acc
            if value == 0:
                break
        grid[c] = value
    transformed = fwht(grid)
    pivot = transformed[size - 1]
    if scheme == SCHEME_RYSER:
        denom = h ** n
    else:
        denom = (2 * h) ** n
    if isinstance(denom, int):
        return _divide_exact(pivot, denom, A.field_kind)
    return pivot / denom


def check_parity_dependence(
    A: SquareMatrix,
    point: "EvaluationPoint | Sequence[Scalar]",
    tol: float = 1e-12,
) -> bool:
    """Check F_A(x) + (-1)^(n+1) F_A(-x) = 0.

    F_A is homogeneous of degree n, so F_A(-x) = (-1)^n F_A(x) and the
    combination cancels identically; this holds exactly over exact
    fields and within ``tol`` for complex doubles.
    """
    coords = _coords_of(point)
    value = eval_product_form(A, coords)
    mirrored = eval_product_form(A, [-c for c in coords])
    combo = value + (-1) ** (A.n + 1) * mirrored
    if A.field_kind == FIELD_COMPLEX:
        return abs(combo) < tol
    return combo == 0


def random_matrix(n: int, rng, low: int = -5, high: int = 5, field_kind: str = FIELD_INT) -> SquareMatrix:
    """Random matrix with integer entries in [low, high] (inclusive),
    coerced into the requested field.  ``rng`` is a numpy Generator or
    anything with an ``integers(low, high)`` method."""
    rows = [
        [int(rng.integers(low, high + 1)) for _ in range(n)] for _ in range(n)
    ]
    if field_kind == FIELD_RATIONAL:
        rows = [[Fraction(v) for v in row] for row in rows]
    elif field_kind == FIELD_COMPLEX:
        rows = [[complex(v) for v in row] for row in rows]
    return SquareMatrix.from_rows(rows, field_kind)


def factorial(n: int) -> int:
    return math.factorial(n)
