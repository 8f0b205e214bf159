#!/usr/bin/env python3
"""Alternative starting points for the iteration, and why most fail.

A partition can seed the construction only if it passes all conditions
plus two guards; it iterates *forever* only if subset 1 also avoids a
handful of specific members (5, 6, n-1, (n+2)/2 for even n, and pairs at
distance 3).  find_seeds returns only the forever kind; this demo also
shows what goes wrong with the others.
"""

from weakschur import (
    ConditionSet,
    Partition,
    SeedConditionError,
    base_partition,
    construct_step,
    find_seeds,
    iterate,
    validate_seed,
    verify,
)


def main():
    print("== indefinitely iterable seeds at small orders ==")
    for n in range(18, 24):
        seeds = find_seeds(3, n, 1000)
        note = ""
        if any(p == base_partition() for p in seeds):
            note = "  (includes the built-in base)"
        print(f"  s=3 n={n}: {len(seeds)} seed(s){note}")

    print("\n== a seed that survives exactly one step ==")
    p = Partition.from_subsets([(5,), (1, 2, 7), (3, 4, 6)])
    report = validate_seed(p)
    for v in report.violations:
        print(f"  {v}")
    q, _ = construct_step(p)
    print(f"  one step works: order {p.n} -> {q.n}")
    try:
        iterate(p, 2)
    except SeedConditionError as e:
        print(f"  second step refused: {e}")

    print("\n== a seed the step would silently ruin (hence the guard) ==")
    trap = Partition.from_subsets([(1, 6), (2, 3, 9, 10), (4, 5, 7, 8)])
    print(f"  all conditions pass: {verify(trap, ConditionSet.all()).passed}")
    for v in validate_seed(trap).violations:
        print(f"  {v}")
    try:
        construct_step(trap)
    except SeedConditionError as e:
        print(f"  step refused: {e}")

    print("\n== an alternative chain ==")
    alt = find_seeds(3, 18, 1)[0]
    print(f"  seed: {[list(alt.subset(i)) for i in range(1, 4)]}")
    chain = iterate(alt, 4)
    orders = [q.n for q, _ in chain]
    print(f"  orders: {orders}")
    base_orders = [q.n for q, _ in iterate(base_partition(), 4)]
    print(f"  base:   {base_orders}  (larger seed order wins forever)")


if __name__ == "__main__":
    main()
