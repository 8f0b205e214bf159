#!/usr/bin/env python3
"""Build the iterative chain of weak Schur partitions and verify it.

Starting from the built-in order-21 partition into 3 subsets, every step
multiplies the order by 3 and subtracts 1 while adding one subset.  Each
output is checked by the independent verifier, so nothing here is taken
on faith.
"""

import time

from weakschur import ConditionSet, base_partition, bound, iterate, verify

STEPS = 9  # reaches s = 12, order 403502


def main():
    base = base_partition()
    print(f"base partition: s={base.s}, n={base.n}")
    for i in range(1, base.s + 1):
        print(f"  subset {i}: {list(base.subset(i))}")

    print(f"\niterating {STEPS} steps...")
    t0 = time.perf_counter()
    chain = iterate(base, STEPS)
    print(f"built in {time.perf_counter() - t0:.1f} s\n")

    first_step = chain[0][1]
    print("where the first step's elements came from (order 21 -> 62):")
    print(f"  injected into subset 1: {first_step.injected}")
    for i, refl in enumerate(first_step.reflected_per_subset, 1):
        print(f"  reflected into subset {i}: {list(refl)}")
    print(f"  new subset 4: {list(first_step.new_subset)}")

    print(f"\n{'s':>3} {'order':>8} {'closed form':>12} {'verified':>9} {'time':>8}")
    for p, _ in chain:
        t0 = time.perf_counter()
        report = verify(p, ConditionSet.all())
        dt = time.perf_counter() - t0
        status = "clean" if report.passed else "BROKEN"
        print(f"{p.s:>3} {p.n:>8} {bound(p.s):>12} {status:>9} {dt:>7.2f}s")

    print("\nevery order is a witness: a weak Schur partition of 1..n into s")
    print("subsets proves the weak Schur number for s subsets is at least n")


if __name__ == "__main__":
    main()
