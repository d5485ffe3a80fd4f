"""Census of self-maps of {0..n-1} under relabelling on both sides.

Two functions f and g count as equivalent when g = gamma o f o sigma^{-1}
for permutations sigma, gamma.  The complete invariant of a class is the
multiset of fiber sizes of f, i.e. an integer partition of n, so the
number of classes is the partition count Pa(n) -- tiny compared to the
n^n functions themselves.

Run with::

    python3 demos/02_function_census.py
"""

from permchow import (
    FunctionTable,
    enumerate_classes,
    fiber_partition,
    hardy_ramanujan_estimate,
    orbit,
    partition_count,
    stabilizer_order,
)


def census(n: int) -> None:
    print(f"--- n = {n} ---")
    classes = enumerate_classes(n)
    total = 0
    for rec in classes:
        label = "+".join(str(p) for p in rec.partition)
        print(
            f"  partition {label:7s} representative {rec.representative.values}"
            f"  orbit {rec.orbit_size:4d}  stabilizer {rec.stabilizer_order}"
        )
        # orbit size times stabilizer order is |Sn x Sn| = (n!)^2
        total += rec.orbit_size
    print(f"  {len(classes)} classes covering {total} = {n}^{n} functions")
    assert total == n**n
    assert len(classes) == partition_count(n)


def main() -> None:
    for n in (2, 3, 4):
        census(n)

    # One concrete orbit, by brute force this time.
    f = FunctionTable.from_values((0, 0, 2))
    print("\nfibers of f=(0,0,2):", fiber_partition(f))
    orb = orbit(f)
    print(f"orbit size {len(orb)}, stabilizer order {stabilizer_order(f)},",
          f"product {len(orb) * stabilizer_order(f)} (= (3!)^2 = 36)")

    # Pa(n) grows sub-exponentially; the classical asymptotic gets the
    # order of magnitude right already at n=100.
    exact = partition_count(100)
    approx = hardy_ramanujan_estimate(100)
    print(f"\nPa(100) = {exact}, asymptotic estimate {approx:.3e},",
          f"ratio {approx / exact:.3f}")


if __name__ == "__main__":
    main()
