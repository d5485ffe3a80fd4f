"""Compute one permanent five different ways and watch them agree.

The permanent looks like a determinant with all the minus signs deleted,
and that small edit destroys every fast elimination trick.  This script
walks through the algorithms the package ships:

* ``per_naive``     -- sum over all n! permutations (the definition)
* ``per_ryser``     -- inclusion-exclusion over column subsets, Gray-coded
* ``per_glynn``     -- average of +-1 signed row-sum products
* ``per_via_hadamard`` -- both of the above recast as a single
  Walsh-Hadamard transform of a product grid, in two flavours

Run it with::

    python3 demos/01_permanent_four_ways.py
"""

from fractions import Fraction

from permchow import (
    EvaluationPoint,
    SquareMatrix,
    check_parity_dependence,
    per_glynn,
    per_naive,
    per_ryser,
    per_via_hadamard,
    random_matrix,
)
import numpy as np


def main() -> None:
    rng = np.random.default_rng(2024)
    A = random_matrix(5, rng, low=-4, high=4)
    print("A random 5x5 integer matrix:")
    for row in A.entries:
        print("   ", row)

    results = {
        "naive": per_naive(A),
        "ryser": per_ryser(A),
        "glynn": per_glynn(A),
        "hadamard/ryser01": per_via_hadamard(A, scheme="ryser01"),
        "hadamard/glynn": per_via_hadamard(A, scheme="glynn"),
    }
    print("\nper(A) by five routes:")
    for name, value in results.items():
        print(f"    {name:18s} {value}")
    assert len(set(results.values())) == 1

    # The all-ones matrix has permanent n! -- a handy exact check at sizes
    # where the naive sum is hopeless.
    J12 = SquareMatrix.from_rows([[1] * 12 for _ in range(12)])
    print("\nper(J_12) =", per_ryser(J12), "(expected 12! = 479001600)")

    # The Hadamard pipeline takes a step size h and the answer must not
    # depend on it.  Exact arithmetic makes that easy to see.
    B = random_matrix(4, rng)
    vals = [per_via_hadamard(B, scheme="ryser01", h=h) for h in (1, 2, Fraction(1, 3))]
    print("\nstep sizes 1, 2, 1/3 give:", vals)
    assert vals[0] == vals[1] == vals[2]

    # Finally, the product polynomial prod_i (sum_j a_ij x_j) flips sign
    # in a definite way under x -> -x, so a particular signed combination
    # of F(x) and F(-x) cancels identically.
    point = EvaluationPoint(coords=(1, -2, 3, 1))
    print("parity identity holds at (1,-2,3,1):", check_parity_dependence(B, point))


if __name__ == "__main__":
    main()
