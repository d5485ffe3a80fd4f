"""Independent reference implementations for the test suite.

Everything here is written the slow, obvious way on purpose and shares
no code with the package under test: permanents straight from the
definition, partition counting by dynamic programming, orbits by
exhaustive double loops, and the Hadamard transform as a dense kron
product.
"""

import itertools

import numpy as np


def permanent_by_definition(rows):
    n = len(rows)
    total = 0
    for sigma in itertools.permutations(range(n)):
        prod = 1
        for i, j in enumerate(sigma):
            prod *= rows[i][j]
        total += prod
    return total


def partition_count_table(n):
    # coin-style DP: after processing part p, ways[m] counts partitions
    # of m into parts <= p
    ways = [1] + [0] * n
    for part in range(1, n + 1):
        for m in range(part, n + 1):
            ways[m] += ways[m - part]
    return ways[n]


def partitions_by_enumeration(n):
    out = set()

    def go(remaining, largest, prefix):
        if remaining == 0:
            out.add(prefix)
            return
        for part in range(min(remaining, largest), 0, -1):
            go(remaining - part, part, prefix + (part,))

    go(n, n, ())
    return sorted(out)


def act_tuple(f, sigma, gamma):
    """gamma o f o sigma^-1 on plain value tuples."""
    n = len(f)
    inverse = [0] * n
    for i, v in enumerate(sigma):
        inverse[v] = i
    return tuple(gamma[f[inverse[i]]] for i in range(n))


def orbit_by_brute_force(f):
    n = len(f)
    seen = set()
    for sigma in itertools.permutations(range(n)):
        for gamma in itertools.permutations(range(n)):
            seen.add(act_tuple(f, sigma, gamma))
    return seen


def stabilizer_by_brute_force(f):
    n = len(f)
    count = 0
    for sigma in itertools.permutations(range(n)):
        for gamma in itertools.permutations(range(n)):
            if act_tuple(f, sigma, gamma) == f:
                count += 1
    return count


def hadamard_matrix(n):
    H = np.array([[1.0]])
    block = np.array([[1.0, 1.0], [1.0, -1.0]])
    for _ in range(n):
        H = np.kron(H, block)
    return H


def quadratic_value(coeffs, x0, x1):
    a, b0, b1, c00, c01, c10, c11 = coeffs
    return a + b0 * x0 + b1 * x1 + c00 * x0 * x0 + (c01 + c10) * x0 * x1 + c11 * x1 * x1
