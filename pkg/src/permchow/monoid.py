"""The transformation monoid of {0..n-1}, its two-sided symmetric-group
action, and the class structure that action induces.

A function f: Z_n -> Z_n is stored as its value table.  Two functions
are equivalent when g = gamma o f o sigma^(-1) for permutations sigma,
gamma; the complete invariant of a class is the sorted multiset of fiber
sizes |f^(-1)(j)| (zeros dropped), i.e. a partition of n.  The module
also provides ranking maps (function tables to integers, permutations to
integers via the factorial number system) and the integer partition
function.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import permutations as _itertools_permutations
from typing import Iterator, Mapping, Sequence

from .errors import check_guard

ORBIT_GUARD = 5
CLASS_GUARD = 6


@dataclass(frozen=True)
class FunctionTable:
    """A function f: Z_n -> Z_n stored as the tuple (f(0), ..., f(n-1))."""

    n: int
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.values) != self.n:
            raise ValueError(f"expected {self.n} values, got {len(self.values)}")
        if any(not (0 <= v < self.n) for v in self.values):
            raise ValueError(f"values must lie in [0, {self.n}): {self.values}")

    def __call__(self, i: int) -> int:
        return self.values[i]

    @property
    def is_bijective(self) -> bool:
        return len(set(self.values)) == self.n

    @classmethod
    def from_values(cls, values: Sequence[int]) -> "FunctionTable":
        values = tuple(int(v) for v in values)
        return cls(n=len(values), values=values)

    @classmethod
    def identity(cls, n: int) -> "FunctionTable":
        return cls(n=n, values=tuple(range(n)))

    @classmethod
    def constant(cls, n: int, value: int = 0) -> "FunctionTable":
        return cls(n=n, values=(value,) * n)

    def inverse(self) -> "FunctionTable":
        if not self.is_bijective:
            raise ValueError("only bijections can be inverted")
        inv = [0] * self.n
        for i, v in enumerate(self.values):
            inv[v] = i
        return FunctionTable(self.n, tuple(inv))


def compose(f: FunctionTable, g: FunctionTable) -> FunctionTable:
    """The composite f o g, i.e. i -> f(g(i))."""
    if f.n != g.n:
        raise ValueError("dimension mismatch")
    return FunctionTable(f.n, tuple(f.values[v] for v in g.values))


def act(f: FunctionTable, sigma: FunctionTable, gamma: FunctionTable) -> FunctionTable:
    """The two-sided action (sigma, gamma) . f = gamma o f o sigma^(-1)."""
    if not (sigma.is_bijective and gamma.is_bijective):
        raise ValueError("action requires permutations")
    sigma_inv = sigma.inverse()
    return FunctionTable(
        f.n, tuple(gamma.values[f.values[sigma_inv.values[i]]] for i in range(f.n))
    )


def all_functions(n: int) -> Iterator[FunctionTable]:
    """All n^n functions, in lex_fun order."""
    for index in range(n ** n):
        yield unrank_fun(n, index)


def all_permutations(n: int) -> Iterator[FunctionTable]:
    """All n! permutations, in lex_perm order."""
    for rank in range(math.factorial(n)):
        yield unrank_perm(n, rank)


# ---------------------------------------------------------------------------
# Ranking maps


def lex_fun(f: FunctionTable) -> int:
    """Rank a function table as the base-n number sum_i f(i) * n^i."""
    rank = 0
    weight = 1
    for v in f.values:
        rank += v * weight
        weight *= f.n
    return rank


def unrank_fun(n: int, index: int) -> FunctionTable:
    if not 0 <= index < n ** n:
        raise ValueError(f"function index {index} out of range [0, {n ** n})")
    values = []
    for _ in range(n):
        values.append(index % n)
        index //= n
    return FunctionTable(n, tuple(values))


def lex_perm(sigma: FunctionTable) -> int:
    """Rank a permutation in the factorial number system.

    The digit at position k is c_k = |{i < k : sigma(i) > sigma(k)}|,
    weighted by k!.  This is a bijection S_n -> [0, n!): c_k <= k, and
    the digit vector is the classic inversion table.
    """
    if not sigma.is_bijective:
        raise ValueError("lex_perm requires a bijective function table")
    values = sigma.values
    rank = 0
    weight = 1  # k!
    for k in range(sigma.n):
        c = sum(1 for i in range(k) if values[i] > values[k])
        rank += c * weight
        weight *= k + 1
    return rank


def unrank_perm(n: int, index: int) -> FunctionTable:
    if not 0 <= index < math.factorial(n):
        raise ValueError(f"permutation index {index} out of range [0, {math.factorial(n)})")
    digits = []
    for k in range(n):
        digits.append(index % (k + 1))
        index //= k + 1
    # digits[k] of the values sigma(0..k) exceed sigma(k); recover from the top
    available = list(range(n))
    values = [0] * n
    for k in range(n - 1, -1, -1):
        values[k] = available.pop(k - digits[k])
    return FunctionTable(n, tuple(values))


def lex_pair(sigma: FunctionTable, gamma: FunctionTable) -> int:
    """Rank a pair (sigma, gamma) in S_n x S_n as n! * lex(sigma) + lex(gamma)."""
    if sigma.n != gamma.n:
        raise ValueError("dimension mismatch")
    return math.factorial(sigma.n) * lex_perm(sigma) + lex_perm(gamma)


# ---------------------------------------------------------------------------
# Class structure


def fiber_partition(f: FunctionTable) -> tuple[int, ...]:
    """Sorted (descending) sizes of the nonempty fibers f^(-1)(j).

    This is the complete invariant of the two-sided action: pre- and
    post-composing with bijections can relabel fibers and target values
    arbitrarily but never change the size multiset.
    """
    counts = [0] * f.n
    for v in f.values:
        counts[v] += 1
    return tuple(sorted((c for c in counts if c > 0), reverse=True))


def stabilizer_order(f: FunctionTable) -> int:
    """Order of the stabilizer {(sigma, gamma) : gamma f sigma^(-1) = f}.

    gamma must permute codomain values within equal-fiber-size groups
    (values outside the image count as fiber size 0) and sigma must then
    match fibers pointwise, giving

        prod_j |f^(-1)(j)|!  *  prod_s m_s!

    where m_s is the number of codomain values with fiber size s.
    """
    counts = [0] * f.n
    for v in f.values:
        counts[v] += 1
    order = 1
    for c in counts:
        order *= math.factorial(c)
    multiplicity: dict[int, int] = {}
    for c in counts:
        multiplicity[c] = multiplicity.get(c, 0) + 1
    for m in multiplicity.values():
        order *= math.factorial(m)
    return order


def orbit(f: FunctionTable) -> set[FunctionTable]:
    """The full orbit {gamma f sigma^(-1)} by brute force over all
    (n!)^2 pairs.  Guarded at n <= 5."""
    check_guard(f.n, ORBIT_GUARD, "orbit")
    result = set()
    perms = [FunctionTable(f.n, p) for p in _itertools_permutations(range(f.n))]
    for sigma in perms:
        sigma_inv = sigma.inverse()
        pulled = tuple(f.values[sigma_inv.values[i]] for i in range(f.n))
        for gamma in perms:
            result.add(FunctionTable(f.n, tuple(gamma.values[v] for v in pulled)))
    return result


def partitions(n: int) -> list[tuple[int, ...]]:
    """All partitions of n as weakly decreasing tuples, ascending lex order."""
    result: list[tuple[int, ...]] = []

    def extend(remaining: int, max_part: int, prefix: tuple[int, ...]) -> None:
        if remaining == 0:
            result.append(prefix)
            return
        for part in range(min(remaining, max_part), 0, -1):
            extend(remaining - part, part, prefix + (part,))

    extend(n, n, ())
    return sorted(result)


def canonical_representative(partition: Sequence[int]) -> FunctionTable:
    """The class representative that maps domain points, left to right,
    onto 0, 1, 2, ... in blocks of the partition's sizes.  Every
    representative therefore sends 0 to 0.
    """
    parts = tuple(partition)
    if not parts or any(p < 1 for p in parts) or list(parts) != sorted(parts, reverse=True):
        raise ValueError(f"invalid partition {partition!r}")
    n = sum(parts)
    values: list[int] = []
    for block, size in enumerate(parts):
        values.extend([block] * size)
    return FunctionTable(n, tuple(values))


@dataclass(frozen=True)
class ClassRecord:
    """One equivalence class: its partition, canonical representative,
    orbit size and stabilizer order (orbit * stabilizer = (n!)^2)."""

    partition: tuple[int, ...]
    representative: FunctionTable
    orbit_size: int
    stabilizer_order: int


def enumerate_classes(n: int) -> list[ClassRecord]:
    """One ClassRecord per partition of n, in ascending lex order of the
    partition tuples.  Orbit sizes come from the orbit-stabilizer
    relation; the census identities (sum of orbits = n^n, class count =
    Pa(n)) are what the test suite pins down."""
    check_guard(n, CLASS_GUARD, "enumerate_classes")
    group_order = math.factorial(n) ** 2
    records = []
    for partition in partitions(n):
        rep = canonical_representative(partition)
        stab = stabilizer_order(rep)
        records.append(
            ClassRecord(
                partition=partition,
                representative=rep,
                orbit_size=group_order // stab,
                stabilizer_order=stab,
            )
        )
    return records


# ---------------------------------------------------------------------------
# Partition function


_PARTITION_CACHE = [1]


def partition_count(n: int) -> int:
    """Exact number of integer partitions Pa(n), by Euler's pentagonal
    number recurrence with a growing cache."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    cache = _PARTITION_CACHE
    while len(cache) <= n:
        m = len(cache)
        total = 0
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > m:
                break
            sign = 1 if k % 2 == 1 else -1
            total += sign * cache[m - g1]
            g2 = k * (3 * k + 1) // 2
            if g2 <= m:
                total += sign * cache[m - g2]
            k += 1
        cache.append(total)
    return cache[n]


def hardy_ramanujan_estimate(n: int) -> float:
    """The classical asymptotic estimate exp(pi*sqrt(2n/3)) / (4*n*sqrt(3))."""
    if n < 1:
        raise ValueError("n must be positive")
    return math.exp(math.pi * math.sqrt(2 * n / 3)) / (4 * n * math.sqrt(3))


# ---------------------------------------------------------------------------
# Sign patterns


@dataclass(frozen=True)
class SignPattern:
    """An assignment of +1 or -1 to every partition of n.

    A sign pattern picks one member of the family of polynomials whose
    monomial coefficient at prod_i a_{i,f(i)} is the sign of the class
    of f.
    """

    n: int
    omega: Mapping[tuple[int, ...], int]

    def __post_init__(self) -> None:
        expected = set(partitions(self.n))
        keys = set(self.omega)
        if keys != expected:
            raise ValueError(
                f"sign pattern must cover exactly the partitions of {self.n}"
            )
        if any(v not in (1, -1) for v in self.omega.values()):
            raise ValueError("sign pattern values must be +1 or -1")

    def value_for(self, f: FunctionTable) -> int:
        return self.omega[fiber_partition(f)]

    @classmethod
    def all_plus(cls, n: int) -> "SignPattern":
        return cls(n, {p: 1 for p in partitions(n)})

    @classmethod
    def default_signed(cls, n: int) -> "SignPattern":
        """+1 on the bijection class, -1 elsewhere: the pattern of
        2*Per(A) - prod_i (row sum i)."""
        ones = (1,) * n
        return cls(n, {p: (1 if p == ones else -1) for p in partitions(n)})
