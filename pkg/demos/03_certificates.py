"""Row-structured certificates for the permanent.

A decomposition B with rho layers of n x n coefficients represents the
polynomial  sum_u prod_i (sum_j B[u,i,j] x_{ij})  whose coefficient on
the monomial prod_i x_{i,f(i)} is  sum_u prod_i B[u,i,f(i)].  Asking
those coefficients to hit 1 exactly on permutations f and 0 elsewhere
makes B a certificate for the permanent.  Two classical constructions
give such certificates with rho = 2^n - 1 and rho = 2^(n-1); this script
builds both, verifies them coefficient by coefficient, and shows the
JSON round trip used by the CLI.

Run with::

    python3 demos/03_certificates.py
"""

import json

from permchow import (
    RowStructuredDecomposition,
    SquareMatrix,
    TargetSpec,
    build_glynn,
    build_ryser,
    decomposition_from_json,
    decomposition_to_json,
    evaluate,
    per_ryser,
    verify_against_target,
)


def main() -> None:
    n = 4
    target = TargetSpec.permanent(n)

    for name, builder in (("ryser", build_ryser), ("glynn", build_glynn)):
        cert = builder(n)
        report = verify_against_target(cert, target)
        print(f"{name}: rho={cert.rho}, checked {report.checked} coefficients,",
              f"max error {report.max_error}, passed={report.passed}")
        assert report.passed

    # A certificate is also an evaluator: plugging the entries of a matrix
    # into the x_{ij} slots reproduces its permanent.
    A = SquareMatrix.from_rows(
        [[1, 2, 0, -1], [3, 1, 1, 0], [0, -2, 1, 4], [2, 0, 5, 1]]
    )
    cert = build_glynn(n)
    via_cert = evaluate(cert, A)
    print(f"\nper(A) via certificate: {via_cert}, via Ryser: {per_ryser(A)}")
    assert via_cert == per_ryser(A)

    # Certificates serialize losslessly; the Glynn one carries exact
    # rationals (the 1/2^(n-1) scale folded into its first layer).
    doc = decomposition_to_json(cert)
    text = json.dumps(doc)
    back = decomposition_from_json(json.loads(text))
    print(f"JSON round trip: field={doc['field']}, {len(text)} bytes,",
          "equal" if back == cert else "MISMATCH")

    # What breaks when a single entry is nudged?  Verification counts the
    # offending monomials.
    layers = [[list(row) for row in term] for term in cert.coeffs]
    layers[0][0][0] += 1
    bad = RowStructuredDecomposition.from_array(layers)
    report = verify_against_target(bad, target)
    print(f"\nperturbed copy: passed={report.passed},",
          f"{report.violations} violated coefficients (of {report.checked})")


if __name__ == "__main__":
    main()
