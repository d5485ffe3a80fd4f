"""Numerically hunting for low-rank product decompositions.

The coefficient constraints "hit omega(f) on every function f" form a
polynomial system in the rho * n^2 entries of a candidate decomposition.
This script runs the damped least-squares search three ways:

1. a planted instance (rhs manufactured from a known B*), which the
   solver should nail to machine precision;
2. the signed target at n=3 with rho = 3, where no restart gets below a
   residual of about 0.764;
3. the same target with rho = 4, which converges almost immediately.

The contrast between 2 and 3 is the interesting part: it is consistent
with (but does not prove) the minimal rank being 4 for this target.

Run with::

    python3 demos/05_rank_search.py
"""

import numpy as np

from permchow import (
    CoefficientEquation,
    RowStructuredDecomposition,
    SignPattern,
    SolverConfig,
    TargetSpec,
    build_full_system,
    extract_all_coefficients,
    solve,
)


def main() -> None:
    n = 3

    # --- 1. planted instance ---------------------------------------
    rho = 2
    rng = np.random.default_rng(5)
    b_star = RowStructuredDecomposition.from_array(
        rng.standard_normal((rho, n, n)).tolist()
    )
    coeffs = extract_all_coefficients(b_star)
    system = [
        CoefficientEquation(kind=eq.kind, functions=eq.functions,
                            rhs=coeffs[eq.functions[0]])
        for eq in build_full_system(n, TargetSpec.permanent(n))
    ]
    report = solve(n, None, SolverConfig(rho=rho, seed=11, restarts=20), system=system)
    print(f"planted rho={rho}: converged={report.converged} "
          f"residual={report.best_residual:.2e} "
          f"after restart {report.restart_index}")
    assert report.converged

    # --- 2. and 3. the signed target -------------------------------
    target = TargetSpec.signed(SignPattern.default_signed(n))
    for rho, restarts in ((3, 40), (4, 6)):
        cfg = SolverConfig(rho=rho, seed=0, restarts=restarts,
                           stop_on_converged=True)
        report = solve(n, target, cfg)
        spread = max(report.residuals) - min(report.residuals)
        print(f"signed rho={rho}: converged={report.converged} "
              f"best residual={report.best_residual:.4g} "
              f"({report.restarts_run} restarts, residual spread {spread:.1e})")


if __name__ == "__main__":
    main()
