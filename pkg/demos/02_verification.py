#!/usr/bin/env python3
"""Tour of the verifier: violation reports as data, fast path vs naive.

The verifier never raises on bad partitions; it returns sorted, exhaustive
violation lists that can be diffed, serialized, or counted.
"""

import random
import time

from weakschur import (
    ConditionSet,
    IntSet,
    Partition,
    parse_partition,
    strong_violations,
    verify,
    weak_violations,
    weak_violations_naive,
)

BROKEN_TEXT = """\
# three subsets, several problems hiding inside
wsp 1
s=3 n=12
1: 1 2 3 10
2: 5 6 11 12
3: 4 7 8 9
"""


def main():
    print("== violations are data ==")
    p = parse_partition(BROKEN_TEXT)
    report = verify(p, ConditionSet.all())
    print(f"checked: {sorted(report.checked_conditions)}")
    for v in report.violations:
        print(f"  {v}")

    print("\n== weak vs strong sum-freeness ==")
    middle = IntSet(range(9, 18))
    print(f"{middle}:")
    print(f"  weak violations:   {weak_violations(middle)}")
    print(f"  strong violations: {strong_violations(middle)}")
    pair = IntSet([1, 2])
    print(f"{pair}:")
    print(f"  weak violations:   {weak_violations(pair)} (1+1=2 needs distinct members)")
    print(f"  strong violations: {[str(v) for v in strong_violations(pair)]}")

    print("\n== fast path vs reference oracle ==")
    rng = random.Random(7)
    worst = 0.0
    for _ in range(2000):
        s = IntSet(rng.sample(range(1, 2001), rng.randint(0, 80)))
        a = {v.witness for v in weak_violations(s)}
        b = {v.witness for v in weak_violations_naive(s)}
        assert a == b
    print("2000 random sets: identical triples from both enumerators")

    # verification's real workload is sets that are (nearly) sum-free, where
    # the probe masks come back empty; odd + odd = even makes the odds the
    # textbook example
    odds = IntSet(range(1, 10_000, 2))
    t0 = time.perf_counter()
    fast = weak_violations(odds)
    t_fast = time.perf_counter() - t0
    t0 = time.perf_counter()
    naive = weak_violations_naive(odds)
    t_naive = time.perf_counter() - t0
    assert fast == naive == []
    print(f"the {len(odds)} odd numbers below 10000 (sum-free): "
          f"fast {t_fast * 1e3:.0f} ms vs naive {t_naive:.2f} s "
          f"({t_naive / max(t_fast, 1e-9):.0f}x)")
    print("(on violation-dense sets both paths spend their time building the")
    print(" report itself; the win is on the clean sets verification cares about)")

    print("\n== malformed partitions are reported, not raised ==")
    overlap = Partition((IntSet([1, 2]), IntSet([2, 3])), 3)
    report = verify(overlap)
    print(f"checked: {sorted(report.checked_conditions)} "
          f"(condition checks skipped on broken structure)")
    for v in report.violations:
        print(f"  {v}")


if __name__ == "__main__":
    main()
