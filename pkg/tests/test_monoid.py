import math

import pytest

import oracles
from permchow.errors import GuardError
from permchow.monoid import (
    FunctionTable,
    SignPattern,
    act,
    all_functions,
    all_permutations,
    canonical_representative,
    compose,
    enumerate_classes,
    fiber_partition,
    hardy_ramanujan_estimate,
    lex_fun,
    lex_pair,
    lex_perm,
    orbit,
    partition_count,
    partitions,
    stabilizer_order,
    unrank_fun,
    unrank_perm,
)


# ---------------------------------------------------------------------------
# rankings


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_lex_fun_round_trip(n):
    seen = set()
    for index in range(n ** n):
        f = unrank_fun(n, index)
        assert lex_fun(f) == index
        seen.add(f.values)
    assert len(seen) == n ** n


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_lex_perm_is_a_bijection(n):
    ranks = {lex_perm(unrank_perm(n, r)) for r in range(math.factorial(n))}
    assert ranks == set(range(math.factorial(n)))


def test_lex_perm_endpoints():
    # identity has no inversions; the descending permutation has all of
    # them, and sum_k k*k! = n! - 1
    for n in range(1, 6):
        assert lex_perm(FunctionTable.identity(n)) == 0
        descending = FunctionTable.from_values(range(n - 1, -1, -1))
        assert lex_perm(descending) == math.factorial(n) - 1


def test_lex_perm_formula_against_inversion_count():
    # the digit at position k counts earlier values that exceed sigma(k)
    sigma = FunctionTable.from_values((2, 0, 3, 1))
    digits = [0, 1, 0, 2]  # by hand
    expected = sum(c * math.factorial(k) for k, c in enumerate(digits))
    assert lex_perm(sigma) == expected


def test_lex_pair_interleaving():
    n = 3
    count = math.factorial(n)
    ranks = set()
    for sigma in all_permutations(n):
        for gamma in all_permutations(n):
            ranks.add(lex_pair(sigma, gamma))
    assert ranks == set(range(count * count))


def test_enumeration_orders():
    assert [f.values for f in all_functions(2)] == [(0, 0), (1, 0), (0, 1), (1, 1)]
    assert [lex_perm(p) for p in all_permutations(4)] == list(range(24))


def test_unrank_range_checks():
    with pytest.raises(ValueError):
        unrank_fun(2, 4)
    with pytest.raises(ValueError):
        unrank_perm(3, 6)
    with pytest.raises(ValueError):
        lex_perm(FunctionTable.from_values((0, 0)))


# ---------------------------------------------------------------------------
# the action


def test_act_matches_reference():
    f = FunctionTable.from_values((1, 1, 0))
    sigma = FunctionTable.from_values((2, 0, 1))
    gamma = FunctionTable.from_values((0, 2, 1))
    expected = oracles.act_tuple(f.values, sigma.values, gamma.values)
    assert act(f, sigma, gamma).values == expected


def test_act_is_a_group_action():
    n = 3
    f = FunctionTable.from_values((2, 0, 0))
    e = FunctionTable.identity(n)
    assert act(f, e, e) == f
    s1 = FunctionTable.from_values((1, 2, 0))
    s2 = FunctionTable.from_values((0, 2, 1))
    g1 = FunctionTable.from_values((2, 1, 0))
    g2 = FunctionTable.from_values((1, 0, 2))
    # acting by (s2, g2) then (s1, g1) equals acting by the product
    lhs = act(act(f, s2, g2), s1, g1)
    rhs = act(f, compose(s1, s2), compose(g1, g2))
    assert lhs == rhs


def test_compose_and_inverse():
    sigma = FunctionTable.from_values((2, 0, 3, 1))
    assert compose(sigma, sigma.inverse()) == FunctionTable.identity(4)
    assert compose(sigma.inverse(), sigma) == FunctionTable.identity(4)


# ---------------------------------------------------------------------------
# fibers, stabilizers, orbits


def test_fiber_partition_examples():
    assert fiber_partition(FunctionTable.identity(3)) == (1, 1, 1)
    assert fiber_partition(FunctionTable.constant(3)) == (3,)
    assert fiber_partition(FunctionTable.from_values((1, 1, 0))) == (2, 1)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_stabilizer_order_matches_brute_force(n):
    for f in all_functions(n):
        assert stabilizer_order(f) == oracles.stabilizer_by_brute_force(f.values)


def test_stabilizer_known_values():
    assert stabilizer_order(FunctionTable.identity(3)) == 6
    assert stabilizer_order(FunctionTable.constant(3)) == 12  # 3! * 2! empty fibers
    assert stabilizer_order(FunctionTable.from_values((1, 1, 0))) == 2


@pytest.mark.parametrize("n", [1, 2, 3])
def test_orbit_matches_brute_force(n):
    for f in all_functions(n):
        expected = oracles.orbit_by_brute_force(f.values)
        assert {g.values for g in orbit(f)} == expected


def test_orbit_stabilizer_product():
    for f in all_functions(3):
        assert len(orbit(f)) * stabilizer_order(f) == 36


# ---------------------------------------------------------------------------
# classes


def test_partitions_are_sorted_and_complete():
    for n in range(1, 8):
        parts = partitions(n)
        assert parts == sorted(parts)
        assert parts == oracles.partitions_by_enumeration(n)
        assert all(sum(p) == n for p in parts)


def test_canonical_representative_structure():
    rep = canonical_representative((2, 2, 1))
    assert rep.values == (0, 0, 1, 1, 2)
    assert rep(0) == 0  # anchored
    assert fiber_partition(rep) == (2, 2, 1)
    with pytest.raises(ValueError):
        canonical_representative((1, 2))  # must be weakly decreasing


@pytest.mark.parametrize("n,expected", [(1, 1), (2, 2), (3, 3), (4, 5), (5, 7), (6, 11)])
def test_class_count(n, expected):
    records = enumerate_classes(n)
    assert len(records) == expected == partition_count(n)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def test_class_census_sums(n):
    records = enumerate_classes(n)
    square = math.factorial(n) ** 2
    assert sum(r.orbit_size for r in records) == n ** n
    for r in records:
        assert r.orbit_size * r.stabilizer_order == square
        assert fiber_partition(r.representative) == r.partition


def test_class_order_is_ascending_partition():
    records = enumerate_classes(3)
    assert [r.partition for r in records] == [(1, 1, 1), (2, 1), (3,)]
    assert [r.orbit_size for r in records] == [6, 18, 3]


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_fiber_partition_separates_orbits(n):
    # two functions are equivalent exactly when their fiber partitions
    # agree; checked against brute-force orbits
    for f in all_functions(n):
        members = oracles.orbit_by_brute_force(f.values)
        same_partition = {
            g.values for g in all_functions(n) if fiber_partition(g) == fiber_partition(f)
        }
        assert members == same_partition


def test_class_guard():
    with pytest.raises(GuardError):
        enumerate_classes(7)
    with pytest.raises(GuardError):
        orbit(FunctionTable.identity(6))


# ---------------------------------------------------------------------------
# partition counting


def test_partition_count_against_dp():
    for n in range(0, 80):
        assert partition_count(n) == oracles.partition_count_table(n)


def test_partition_count_large():
    assert partition_count(100) == 190569292


def test_hardy_ramanujan_estimate():
    n = 100
    estimate = hardy_ramanujan_estimate(n)
    expected = math.exp(math.pi * math.sqrt(2 * n / 3)) / (4 * n * math.sqrt(3))
    assert estimate == pytest.approx(expected)
    assert abs(estimate - partition_count(n)) / partition_count(n) < 0.1


# ---------------------------------------------------------------------------
# sign patterns


def test_sign_pattern_default():
    pattern = SignPattern.default_signed(3)
    assert pattern.value_for(FunctionTable.identity(3)) == 1
    assert pattern.value_for(FunctionTable.from_values((1, 1, 0))) == -1
    assert pattern.value_for(FunctionTable.constant(3)) == -1


def test_sign_pattern_all_plus():
    pattern = SignPattern.all_plus(4)
    assert all(v == 1 for v in pattern.omega.values())


def test_sign_pattern_validation():
    with pytest.raises(ValueError):
        SignPattern(2, {(1, 1): 1})  # missing the (2,) class
    with pytest.raises(ValueError):
        SignPattern(2, {(1, 1): 1, (2,): 0})  # signs must be +-1
