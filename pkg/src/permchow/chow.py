"""Sums of products of linear forms (product-rank decompositions).

Two shapes are supported:

* :class:`RowStructuredDecomposition` - homogeneous, degree n in the n^2
  entries of an n x n matrix, with the i-th factor of every term a
  linear form in row i only.  Coefficients live in a rho x n x n array:
  term u is  prod_i (sum_j coeffs[u][i][j] * a_ij).
* :class:`GeneralDecomposition` - arbitrary degree-d products of affine
  linear forms in N variables, coefficients in a rho x d x (N+1) array
  whose last slice holds the constant terms.

The monomial coefficients of a row-structured decomposition are indexed
by function tables f (monomial prod_i a_{i,f(i)}), which is what the
verifier compares against a target polynomial (the permanent, or a
signed class polynomial given by a SignPattern).
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import check_guard
from .monoid import FunctionTable, SignPattern, unrank_fun
from .permcore import Scalar, SquareMatrix

EXTRACT_GUARD = 7

_EXACT_TYPES = (int, Fraction)


@dataclass(frozen=True)
class RowStructuredDecomposition:
    """rho terms, each a product over rows i of the linear form
    sum_j coeffs[u][i][j] * a_ij."""

    rho: int
    n: int
    coeffs: tuple[tuple[tuple[Scalar, ...], ...], ...]

    def __post_init__(self) -> None:
        if self.rho < 0 or self.n < 1:
            raise ValueError("rho must be >= 0 and n >= 1")
        if len(self.coeffs) != self.rho:
            raise ValueError(f"expected {self.rho} terms, got {len(self.coeffs)}")
        for term in self.coeffs:
            if len(term) != self.n or any(len(row) != self.n for row in term):
                raise ValueError(f"each term must be an {self.n}x{self.n} array")

    @classmethod
    def from_array(cls, coeffs) -> "RowStructuredDecomposition":
        terms = tuple(tuple(tuple(row) for row in term) for term in coeffs)
        rho = len(terms)
        n = len(terms[0]) if rho else 0
        if rho == 0:
            raise ValueError("need at least one term to infer the dimension")
        return cls(rho=rho, n=n, coeffs=terms)

    def is_exact(self) -> bool:
        return all(
            isinstance(v, _EXACT_TYPES)
            for term in self.coeffs
            for row in term
            for v in row
        )

    def as_array(self, dtype=None):
        import numpy as np

        return np.array(self.coeffs, dtype=dtype if dtype is not None else float)


@dataclass(frozen=True)
class GeneralDecomposition:
    """rho terms, each a product of ``degree`` affine linear forms in
    ``num_vars`` variables; coeffs[u][v][num_vars] is the constant."""

    rho: int
    degree: int
    num_vars: int
    coeffs: tuple[tuple[tuple[Scalar, ...], ...], ...]

    def __post_init__(self) -> None:
        if len(self.coeffs) != self.rho:
            raise ValueError(f"expected {self.rho} terms, got {len(self.coeffs)}")
        for term in self.coeffs:
            if len(term) != self.degree or any(
                len(form) != self.num_vars + 1 for form in term
            ):
                raise ValueError(
                    f"each term needs {self.degree} forms of length {self.num_vars + 1}"
                )


Decomposition = Union[RowStructuredDecomposition, GeneralDecomposition]


@dataclass(frozen=True)
class TargetSpec:
    """What a decomposition is supposed to represent: the permanent, or
    the signed class polynomial of a SignPattern."""

    kind: str  # "permanent" | "signed"
    n: int
    sign_pattern: SignPattern | None = None

    def __post_init__(self) -> None:
        if self.kind not in ("permanent", "signed"):
            raise ValueError(f"unknown target kind {self.kind!r}")
        if self.kind == "signed":
            if self.sign_pattern is None or self.sign_pattern.n != self.n:
                raise ValueError("signed target needs a sign pattern of matching n")

    @classmethod
    def permanent(cls, n: int) -> "TargetSpec":
        return cls(kind="permanent", n=n)

    @classmethod
    def signed(cls, pattern: SignPattern) -> "TargetSpec":
        return cls(kind="signed", n=pattern.n, sign_pattern=pattern)


def target_coefficient(target: TargetSpec, f: FunctionTable) -> int:
    """Monomial coefficient of prod_i a_{i,f(i)} in the target polynomial."""
    if f.n != target.n:
        raise ValueError("dimension mismatch")
    if target.kind == "permanent":
        return 1 if f.is_bijective else 0
    return target.sign_pattern.value_for(f)


def coefficient(D: RowStructuredDecomposition, f: FunctionTable) -> Scalar:
    """Coefficient of the monomial prod_i a_{i,f(i)}:
    sum_u prod_i coeffs[u][i][f(i)]."""
    if f.n != D.n:
        raise ValueError("dimension mismatch")
    total = 0
    for term in D.coeffs:
        prod = 1
        for i, j in enumerate(f.values):
            prod *= term[i][j]
        total += prod
    return total


def evaluate(D: Decomposition, point) -> Scalar:
    """Numeric value of the represented polynomial.

    Row-structured decompositions evaluate at a matrix (SquareMatrix or
    nested rows); general decompositions at a coordinate sequence.
    """
    if isinstance(D, RowStructuredDecomposition):
        rows = point.entries if isinstance(point, SquareMatrix) else point
        if len(rows) != D.n:
            raise ValueError("dimension mismatch")
        total = 0
        for term in D.coeffs:
            prod = 1
            for i in range(D.n):
                acc = 0
                for j in range(D.n):
                    acc += term[i][j] * rows[i][j]
                prod *= acc
            total += prod
        return total
    coords = tuple(point)
    if len(coords) != D.num_vars:
        raise ValueError("dimension mismatch")
    total = 0
    for term in D.coeffs:
        prod = 1
        for form in term:
            acc = form[D.num_vars]
            for w, x in zip(form, coords):
                acc += w * x
            prod *= acc
        total += prod
    return total


def extract_all_coefficients(D: RowStructuredDecomposition) -> dict[int, Scalar]:
    """All n^n monomial coefficients, keyed by lex_fun index.

    Per term the coefficient table is the outer product of its n rows;
    building it digit by digit (most significant first, since lex_fun
    weights f(i) by n^i) costs O(n^n) multiplications per term instead
    of O(n^n * n).
    """
    check_guard(D.n, EXTRACT_GUARD, "extract_all_coefficients")
    n = D.n
    out = [0] * (n ** n)
    for term in D.coeffs:
        vec = [1]
        for i in range(n - 1, -1, -1):
            row = term[i]
            vec = [x * c for x in vec for c in row]
        for idx, v in enumerate(vec):
            out[idx] += v
    return dict(enumerate(out))


@dataclass(frozen=True)
class VerificationReport:
    passed: bool
    max_error: float
    violations: int
    checked: int
    tol: float


def verify_against_target(
    D: RowStructuredDecomposition,
    target: TargetSpec,
    tol: float | None = None,
) -> VerificationReport:
    """Compare every monomial coefficient of D against the target.

    ``tol=None`` picks 0 for exact coefficient arrays and 1e-9 for
    floating ones (all target coefficients are -1, 0 or +1, so an
    absolute tolerance is the right scale).
    """
    if D.n != target.n:
        raise ValueError("dimension mismatch")
    check_guard(D.n, EXTRACT_GUARD, "verify_against_target")
    if tol is None:
        tol = 0 if D.is_exact() else 1e-9
    coeffs = extract_all_coefficients(D)
    max_error = 0.0
    violations = 0
    exact_max: Scalar = 0
    for index in range(D.n ** D.n):
        f = unrank_fun(D.n, index)
        err = abs(coeffs[index] - target_coefficient(target, f))
        if err > exact_max:
            exact_max = err
        if err > tol:
            violations += 1
    max_error = float(exact_max)
    return VerificationReport(
        passed=violations == 0,
        max_error=max_error,
        violations=violations,
        checked=D.n ** D.n,
        tol=float(tol),
    )


def build_ryser(n: int) -> RowStructuredDecomposition:
    """The inclusion-exclusion certificate: one term per nonempty column
    subset S, factor i equal to sum_{j in S} a_ij, and the scalar
    (-1)^(n-|S|) folded into row 0.  rho = 2^n - 1; the empty subset
    evaluates to zero and is dropped."""
    if n < 1:
        raise ValueError("n must be positive")
    terms = []
    for mask in range(1, 1 << n):
        size = mask.bit_count()
        sign = 1 if (n - size) % 2 == 0 else -1
        indicator = [1 if (mask >> j) & 1 else 0 for j in range(n)]
        rows = [[sign * v for v in indicator]]
        rows.extend([list(indicator) for _ in range(n - 1)])
        terms.append(tuple(tuple(row) for row in rows))
    return RowStructuredDecomposition(rho=(1 << n) - 1, n=n, coeffs=tuple(terms))


def build_glynn(n: int) -> RowStructuredDecomposition:
    """The sign-vector certificate: one term per delta in {+-1}^n with
    delta_0 = +1, factor i equal to sum_j delta_j a_ij, and the scalar
    (prod_k delta_k) / 2^(n-1) folded into row 0.  rho = 2^(n-1)."""
    if n < 1:
        raise ValueError("n must be positive")
    denom = 1 << (n - 1)
    terms = []
    for mask in range(denom):
        deltas = [1] + [(-1 if (mask >> b) & 1 else 1) for b in range(n - 1)]
        sign = 1
        for d in deltas:
            sign *= d
        scale = Fraction(sign, denom)
        rows = [[scale * d for d in deltas]]
        rows.extend([list(deltas) for _ in range(n - 1)])
        terms.append(tuple(tuple(row) for row in rows))
    return RowStructuredDecomposition(rho=denom, n=n, coeffs=tuple(terms))


# ---------------------------------------------------------------------------
# Degree-2 decompositions in two variables


_PIVOT_EPS = 1e-12


def _quadratic_matrix(c00, c01, c10, c11, alpha):
    return ((c00, c01 + alpha), (c10 - alpha, c11))


def _rank_one_factors(M) -> tuple[tuple[complex, complex], tuple[complex, complex]] | None:
    """Factor a (numerically) singular 2x2 matrix as an outer product
    u * v^T, so that x^T M x = (u.x)(v.x).  None if M is ~zero."""
    flat = [abs(M[r][c]) for r in (0, 1) for c in (0, 1)]
    best = max(range(4), key=lambda k: flat[k])
    if flat[best] < _PIVOT_EPS:
        return None
    r, c = divmod(best, 2)
    pivot = M[r][c]
    u = (M[0][c], M[1][c])
    v = (M[r][0] / pivot, M[r][1] / pivot)
    return u, v


def decompose_bivariate_quadratic(
    a: complex, b0: complex, b1: complex,
    c00: complex, c01: complex, c10: complex, c11: complex,
) -> GeneralDecomposition:
    """Write  a + b0 x0 + b1 x1 + c00 x0^2 + (c01+c10) x0 x1 + c11 x1^2
    as at most two products of affine linear forms.

    Term one is the affine part times the constant form 1.  For the
    quadratic part, adding the antisymmetric matrix ((0, alpha), (-alpha, 0))
    leaves the polynomial unchanged; alpha is chosen to make the adjusted
    coefficient matrix singular, where it factors into two linear forms.
    The principal-branch "+" root is tried first and the "-" root is the
    fallback when the first pivot degenerates; if both degenerate the
    quadratic part is identically zero and only the affine term remains.
    """
    a, b0, b1 = complex(a), complex(b0), complex(b1)
    c00, c01, c10, c11 = complex(c00), complex(c01), complex(c10), complex(c11)
    terms = [((b0, b1, a), (0, 0, 1))]

    factors = None
    if max(abs(c00), abs(c11), abs(c01 + c10)) >= _PIVOT_EPS:
        disc = (c01 + c10) ** 2 - 4 * c00 * c11
        root = cmath.sqrt(disc)
        for alpha in ((c10 - c01 + root) / 2, (c10 - c01 - root) / 2):
            factors = _rank_one_factors(_quadratic_matrix(c00, c01, c10, c11, alpha))
            if factors is not None:
                break
    if factors is not None:
        (u0, u1), (v0, v1) = factors
        terms.append(((u0, u1, 0), (v0, v1, 0)))
    return GeneralDecomposition(
        rho=len(terms),
        degree=2,
        num_vars=2,
        coeffs=tuple(tuple(tuple(form) for form in term) for term in terms),
    )
