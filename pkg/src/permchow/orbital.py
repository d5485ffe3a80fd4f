"""Coefficient-matching equation systems and a numeric rank search.

A row-structured decomposition B represents the target polynomial iff
for every function table f the coefficient sum_u prod_i B[u,i,f(i)]
equals the target's monomial coefficient.  This module assembles that
system of n^n polynomial equations in the rho*n^2 unknowns, plus the
smaller class-symmetric variant (one orbit-sum equation and one
anchored-representative equation per equivalence class), and searches
for solutions with damped least squares under random restarts.

It also exposes the exponent table of the symbolic orbital matrix: for
each position (i, j), the multiset of (row, column, slice) exponents
contributed by every pair of permutations acting on a three-index
symbol array.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .chow import RowStructuredDecomposition, TargetSpec, target_coefficient
from .errors import check_guard
from .monoid import (
    all_permutations,
    enumerate_classes,
    lex_fun,
    lex_pair,
    orbit,
    unrank_fun,
)

SYSTEM_GUARD = 5
SOLVE_GUARD = 4
TABLE_GUARD = 4

_EQUATION_KINDS = ("full", "orbit-sum", "representative")


@dataclass(frozen=True)
class CoefficientEquation:
    """One equation: sum over ``functions`` of the B-coefficient of that
    monomial, minus ``rhs``.  ``functions`` holds lex_fun indices."""

    kind: str
    functions: tuple[int, ...]
    rhs: complex | float | int

    def __post_init__(self) -> None:
        if self.kind not in _EQUATION_KINDS:
            raise ValueError(f"unknown equation kind {self.kind!r}")
        if not self.functions:
            raise ValueError("an equation must reference at least one function")
        if self.kind in ("full", "representative") and len(self.functions) != 1:
            raise ValueError(f"{self.kind} equations reference exactly one function")
        if len(set(self.functions)) != len(self.functions):
            raise ValueError("repeated function index in one equation")


def build_full_system(n: int, target: TargetSpec) -> list[CoefficientEquation]:
    """One equation per function table, in lex_fun order."""
    check_guard(n, SYSTEM_GUARD, "build_full_system")
    if target.n != n:
        raise ValueError("target dimension mismatch")
    return [
        CoefficientEquation("full", (index,), target_coefficient(target, unrank_fun(n, index)))
        for index in range(n ** n)
    ]


def build_reduced_system(n: int, target: TargetSpec) -> list[CoefficientEquation]:
    """Class-symmetric system: per class (ascending fiber partition), an
    orbit-sum equation with rhs orbit_size * omega, then per class a
    representative equation with rhs omega.  2 * Pa(n) equations."""
    check_guard(n, SYSTEM_GUARD, "build_reduced_system")
    if target.n != n:
        raise ValueError("target dimension mismatch")
    orbit_eqs = []
    rep_eqs = []
    for record in enumerate_classes(n):
        omega = target_coefficient(target, record.representative)
        members = tuple(sorted(lex_fun(g) for g in orbit(record.representative)))
        orbit_eqs.append(
            CoefficientEquation("orbit-sum", members, record.orbit_size * omega)
        )
        rep_eqs.append(
            CoefficientEquation("representative", (lex_fun(record.representative),), omega)
        )
    return orbit_eqs + rep_eqs


# ---------------------------------------------------------------------------
# Residuals and derivatives


def _as_array(B) -> np.ndarray:
    if isinstance(B, RowStructuredDecomposition):
        B = B.coeffs
    arr = np.asarray(B)
    if arr.dtype == object:
        wants_complex = any(isinstance(v, complex) for v in arr.flat)
        arr = arr.astype(complex if wants_complex else float)
    elif not np.issubdtype(arr.dtype, np.complexfloating):
        arr = arr.astype(float)
    if arr.ndim != 3 or arr.shape[1] != arr.shape[2]:
        raise ValueError("B must have shape (rho, n, n)")
    return arr


def _compile_system(system: Sequence[CoefficientEquation], n: int):
    """Flatten a system into (digits, segment starts, rhs vector)."""
    indices: list[int] = []
    starts: list[int] = []
    rhs: list[complex | float | int] = []
    for eq in system:
        starts.append(len(indices))
        indices.extend(eq.functions)
        rhs.append(eq.rhs)
    digits = np.empty((len(indices), n), dtype=np.intp)
    for m, index in enumerate(indices):
        digits[m] = unrank_fun(n, index).values
    dtype = complex if any(isinstance(v, complex) for v in rhs) else float
    return digits, np.asarray(starts, dtype=np.intp), np.asarray(rhs, dtype=dtype)


def _factor_values(arr: np.ndarray, digits: np.ndarray) -> np.ndarray:
    """G[u, m, i] = arr[u, i, f_m(i)] for every referenced function."""
    n = arr.shape[1]
    return arr[:, np.arange(n)[None, :], digits]


def _residual_from(arr, digits, starts, rhs) -> np.ndarray:
    per_fun = _factor_values(arr, digits).prod(axis=2).sum(axis=0)
    return np.add.reduceat(per_fun, starts) - rhs


def _jacobian_from(arr, digits, starts) -> np.ndarray:
    rho, n = arr.shape[0], arr.shape[1]
    m_count = digits.shape[0]
    G = _factor_values(arr, digits)
    prefix = np.ones_like(G)
    suffix = np.ones_like(G)
    if n > 1:
        prefix[:, :, 1:] = np.cumprod(G[:, :, :-1], axis=2)
        suffix[:, :, :-1] = np.cumprod(G[:, :, :0:-1], axis=2)[:, :, ::-1]
    leave_one_out = prefix * suffix
    per_fun = np.zeros((m_count, rho, n, n), dtype=arr.dtype)
    u_idx = np.arange(rho)[:, None, None]
    m_idx = np.arange(m_count)[None, :, None]
    i_idx = np.arange(n)[None, None, :]
    # within one function the (u, i) slots address distinct parameters,
    # so plain assignment (no accumulation) is enough
    per_fun[m_idx, u_idx, i_idx, digits[None, :, :]] = leave_one_out
    flat = per_fun.reshape(m_count, rho * n * n)
    return np.add.reduceat(flat, starts, axis=0)


def residual(B, system: Sequence[CoefficientEquation]) -> np.ndarray:
    """Vector of equation residuals (LHS coefficient sum minus rhs)."""
    arr = _as_array(B)
    if not system:
        return np.zeros(0)
    digits, starts, rhs = _compile_system(system, arr.shape[1])
    return _residual_from(arr, digits, starts, rhs)


def jacobian(B, system: Sequence[CoefficientEquation]) -> np.ndarray:
    """Dense derivative of `residual` w.r.t. the flattened entries of B,
    parameter index u*n^2 + i*n + j."""
    arr = _as_array(B)
    if not system:
        return np.zeros((0, arr.size))
    digits, starts, _ = _compile_system(system, arr.shape[1])
    return _jacobian_from(arr, digits, starts)


# ---------------------------------------------------------------------------
# Damped least-squares search


@dataclass(frozen=True)
class SolverConfig:
    rho: int
    field: str = "real"  # "real" | "complex"
    seed: int = 0
    restarts: int = 1
    max_iters: int = 500
    residual_tol: float = 1e-10
    damping_init: float = 1e-3
    damping_increase: float = 2.0
    damping_decrease: float = 0.5
    damping_max: float = 1e12
    stall_window: int = 40
    stop_on_converged: bool = True

    def __post_init__(self) -> None:
        if self.rho < 1:
            raise ValueError("rho must be >= 1")
        if self.field not in ("real", "complex"):
            raise ValueError(f"unknown field {self.field!r}")
        if self.restarts < 1:
            raise ValueError("restarts must be >= 1")
        if self.residual_tol <= 0:
            raise ValueError("residual_tol must be positive")


@dataclass(frozen=True)
class SolveReport:
    converged: bool
    best_residual: float
    decomposition: RowStructuredDecomposition
    restart_index: int
    iterations: int
    restarts_run: int
    residuals: tuple[float, ...]
    iteration_counts: tuple[int, ...]
    config: SolverConfig


def _unpack(x: np.ndarray, rho: int, n: int, field: str) -> np.ndarray:
    if field == "complex":
        half = x.size // 2
        return (x[:half] + 1j * x[half:]).reshape(rho, n, n)
    return x.reshape(rho, n, n)


def _realify_residual(r: np.ndarray) -> np.ndarray:
    if np.iscomplexobj(r):
        return np.concatenate([r.real, r.imag])
    return r


def _realify_jacobian(J: np.ndarray, field: str) -> np.ndarray:
    if field == "complex":
        # params are [real parts, imaginary parts]; d r / d Im(B) = i * J
        return np.block([[J.real, -J.imag], [J.imag, J.real]])
    if np.iscomplexobj(J):
        return np.concatenate([J.real, J.imag])
    return J


def _lm_restart(
    x0: np.ndarray,
    eval_residual: Callable[[np.ndarray], np.ndarray],
    eval_jacobian: Callable[[np.ndarray], np.ndarray],
    cfg: SolverConfig,
) -> tuple[np.ndarray, float, int]:
    """One damped least-squares descent.  Returns (x, max-modulus
    residual, iterations used)."""
    x = x0
    r = eval_residual(x)
    conv = float(np.max(np.abs(r))) if r.size else 0.0
    r_real = _realify_residual(r)
    cost = float(r_real @ r_real)
    if conv < cfg.residual_tol:
        return x, conv, 0

    lam = cfg.damping_init
    normal = None
    gradient = None
    rejects_in_a_row = 0
    iters = 0
    for iters in range(1, cfg.max_iters + 1):
        if normal is None:
            J = _realify_jacobian(eval_jacobian(x), cfg.field)
            normal = J.T @ J
            gradient = J.T @ r_real
        accepted = False
        try:
            step = np.linalg.solve(normal + lam * np.eye(normal.shape[0]), -gradient)
        except np.linalg.LinAlgError:
            step = None
        if step is not None and np.all(np.isfinite(step)):
            x_new = x + step
            r_new = eval_residual(x_new)
            r_new_real = _realify_residual(r_new)
            cost_new = float(r_new_real @ r_new_real)
            if np.isfinite(cost_new) and cost_new < cost:
                x, r_real, cost = x_new, r_new_real, cost_new
                conv = float(np.max(np.abs(r_new)))
                accepted = True
        if accepted:
            lam *= cfg.damping_decrease
            normal = None  # jacobian is stale; recompute at the new point
            rejects_in_a_row = 0
            if conv < cfg.residual_tol:
                break
        else:
            lam *= cfg.damping_increase
            rejects_in_a_row += 1
        if lam > cfg.damping_max or rejects_in_a_row > cfg.stall_window:
            break
    return x, conv, iters


def solve(
    n: int,
    target: TargetSpec | None,
    config: SolverConfig,
    *,
    reduced_only: bool = False,
    system: Sequence[CoefficientEquation] | None = None,
) -> SolveReport:
    """Search for a rank-``config.rho`` decomposition of the target.

    By default the full coefficient system is minimized (the class-
    symmetric system is necessary but not sufficient); pass
    ``reduced_only=True`` to optimize only that smaller system, or
    ``system=`` to supply equations directly (e.g. planted instances).
    Deterministic for fixed (seed, restarts): restart k draws its start
    from a fresh generator seeded with seed + k, and the best restart is
    the first one attaining the minimal residual.
    """
    check_guard(n, SOLVE_GUARD, "solve")
    if system is None:
        if target is None:
            raise ValueError("need either a target or an explicit system")
        system = (
            build_reduced_system(n, target)
            if reduced_only
            else build_full_system(n, target)
        )
    digits, starts, rhs = _compile_system(system, n)
    rho = config.rho

    def eval_residual(x: np.ndarray) -> np.ndarray:
        return _residual_from(_unpack(x, rho, n, config.field), digits, starts, rhs)

    def eval_jacobian(x: np.ndarray) -> np.ndarray:
        return _jacobian_from(_unpack(x, rho, n, config.field), digits, starts)

    num_params = rho * n * n * (2 if config.field == "complex" else 1)
    residuals: list[float] = []
    iteration_counts: list[int] = []
    best: tuple[float, int, np.ndarray, int] | None = None
    for k in range(config.restarts):
        rng = np.random.default_rng(config.seed + k)
        x0 = rng.standard_normal(num_params)
        x, conv, iters = _lm_restart(x0, eval_residual, eval_jacobian, config)
        residuals.append(conv)
        iteration_counts.append(iters)
        if best is None or conv < best[0]:
            best = (conv, k, x, iters)
        if config.stop_on_converged and conv < config.residual_tol:
            break

    assert best is not None
    best_conv, best_index, best_x, best_iters = best
    B = _unpack(best_x, rho, n, config.field)
    caster = complex if config.field == "complex" else float
    coeffs = tuple(
        tuple(tuple(caster(v) for v in row) for row in term) for term in B
    )
    decomposition = RowStructuredDecomposition(rho=rho, n=n, coeffs=coeffs)
    return SolveReport(
        converged=best_conv < config.residual_tol,
        best_residual=best_conv,
        decomposition=decomposition,
        restart_index=best_index,
        iterations=best_iters,
        restarts_run=len(residuals),
        residuals=tuple(residuals),
        iteration_counts=tuple(iteration_counts),
        config=config,
    )


# ---------------------------------------------------------------------------
# Orbital exponent table


def orbital_exponent_table(
    n: int,
) -> dict[tuple[int, int], list[tuple[int, int, int]]]:
    """Exponent multiset of each entry of the symbolic orbital matrix.

    Entry (i, j) collects one (sigma(i), gamma(j), lex_pair(sigma, gamma))
    triple per permutation pair, in ascending slice order; the slice
    values within an entry are exactly 0 .. (n!)^2 - 1.
    """
    check_guard(n, TABLE_GUARD, "orbital_exponent_table")
    table: dict[tuple[int, int], list[tuple[int, int, int]]] = {
        (i, j): [] for i in range(n) for j in range(n)
    }
    for sigma in all_permutations(n):
        for gamma in all_permutations(n):
            slice_index = lex_pair(sigma, gamma)
            for i in range(n):
                s_i = sigma(i)
                for j in range(n):
                    table[(i, j)].append((s_i, gamma(j), slice_index))
    return table
