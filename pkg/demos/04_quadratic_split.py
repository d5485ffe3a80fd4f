"""Splitting a bivariate quadratic into two linear factors -- plus one.

Over the complex numbers every polynomial

    q(x0, x1) = c00 x0^2 + (c01 + c10) x0 x1 + c11 x1^2 + b0 x0 + b1 x1 + a

can be written as a sum of at most two products of affine linear forms.
The trick is a shear parameter alpha chosen to make the 2x2 coefficient
block [[c00, c01 + alpha], [c10 - alpha, c11]] singular, after which a
single rank-one factorization peels off the quadratic part and the
affine remainder supplies the (at most) second term.

Run with::

    python3 demos/04_quadratic_split.py
"""

import numpy as np

from permchow import decompose_bivariate_quadratic, evaluate


def q_value(c, x0, x1):
    a, b0, b1, c00, c01, c10, c11 = c
    return a + b0 * x0 + b1 * x1 + c00 * x0 * x0 + (c01 + c10) * x0 * x1 + c11 * x1 * x1


def show(label, coeffs):
    D = decompose_bivariate_quadratic(*coeffs)
    worst = 0.0
    for x0 in (-2, -1, 0, 1, 2):
        for x1 in (-2, -1, 0, 1, 2):
            worst = max(worst, abs(evaluate(D, (x0, x1)) - q_value(coeffs, x0, x1)))
    print(f"{label:34s} rho={D.rho}  max grid error {worst:.2e}")
    return D


def main() -> None:
    # Coefficient order everywhere below: (a, b0, b1, c00, c01, c10, c11).
    # x0^2 + x1^2 has no real factorization; the splitter happily goes
    # complex: (x0 + i x1)(x0 - i x1).
    D = show("x0^2 + x1^2", (0, 0, 0, 1, 0, 0, 1))
    for term in D.coeffs:
        # each factor is (coeff of x0, coeff of x1, constant)
        print("    term:", " * ".join(str(form) for form in term))

    show("(x0 + x1)^2 perfect square", (0, 0, 0, 1, 1, 1, 1))
    show("pure affine (no quadratic part)", (7, 3, -2, 0, 0, 0, 0))
    show("antisymmetric c01 = -c10", (1, 1, 1, 0, 5, -5, 0))
    show("the zero polynomial", (0, 0, 0, 0, 0, 0, 0))

    rng = np.random.default_rng(99)
    worst = 0.0
    for _ in range(200):
        coeffs = tuple(
            complex(a, b)
            for a, b in zip(rng.standard_normal(7), rng.standard_normal(7))
        )
        D = decompose_bivariate_quadratic(*coeffs)
        assert D.rho <= 2
        for x0 in (-1, 0.5, 2):
            for x1 in (-1.5, 0, 1):
                worst = max(worst, abs(evaluate(D, (x0, x1)) - q_value(coeffs, x0, x1)))
    print(f"\n200 random complex quadratics: rho<=2 always, worst error {worst:.2e}")


if __name__ == "__main__":
    main()
