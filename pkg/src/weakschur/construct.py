"""The tripling construction: one step, iteration, seeds and bounds.

A step takes a partition of 1..m into s weakly sum-free subsets satisfying
three conditions (weak sum-freeness, no a/2a pair with a > 4 in one subset,
and subset 1 staying sum-free when m+2 joins it while m stays out) and
produces a partition of 1..3m-1 into s+1 subsets satisfying the same
conditions again, so the step can be repeated forever.  Orders follow
m' = 3m - 1, which from the built-in order-21 base gives 62, 185, 554,
1661, ... as lower-bound witnesses.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .intset import IntSet
from .partition import (
    ConstructionTrace,
    Partition,
    Violation,
    ViolationReport,
)
from .verifier import LABEL_WEAK, LABEL_WELL_FORMED, ConditionSet, verify

#: comparison orders from other published constructions, shown in tables as
#: context only, never reproduced by this library
LITERATURE_ORDERS = {
    6: ((536, "strong"), (572, "weak"), (642, "weak")),
    7: ((1680, "strong"), (2146, "weak")),
}

_BASE_SUBSETS = (
    (1, 2, 4, 8, 18),
    (3, 5, 6, 7, 19, 20, 21),
    tuple(range(9, 18)),
)

_KIND_TO_CONDITION = {
    "not-a-partition": "well-formedness",
    "empty-subset": "well-formedness",
    "weak-sum": "condition 1 (weak sum-freeness)",
    "double-element": "condition 2 (no a,2a pair with a > 4)",
    "condition3-sumfree": "condition 3 (subset 1 extension)",
    "condition3-membership": "condition 3 (order in subset 1)",
    "order-too-small": "minimum order 4",
    "injected-double": "injected-double guard ((n+2)/2 outside subset 1)",
}

# naming precedence when several checks fail at once: structure first,
# then the conditions in their usual order
_CONDITION_RANK = {
    "not-a-partition": 0,
    "empty-subset": 0,
    "weak-sum": 1,
    "double-element": 2,
    "condition3-sumfree": 3,
    "condition3-membership": 3,
}


class SeedConditionError(ValueError):
    """The input to a construction step fails a required condition."""

    def __init__(
        self,
        failed: str,
        report: Optional[ViolationReport] = None,
        step: Optional[int] = None,
    ):
        self.failed = failed
        self.report = report
        self.step = step
        at = f" at step {step}" if step is not None else ""
        super().__init__(f"cannot extend partition{at}: {failed} fails")


def base_partition() -> Partition:
    """The built-in 3-subset seed of order 21: {1,2,4,8,18},
    {3,5,6,7,19,20,21}, {9..17}.  Satisfies every condition the step needs."""
    return Partition(tuple(IntSet(e) for e in _BASE_SUBSETS), 21)


def _blocking_extras(p: Partition) -> list[Violation]:
    """Checks beyond conditions 1..3 without which a step breaks outright.

    Orders below 4 make the output pieces overlap or overshoot 3n-1.  And
    when n is even with (n+2)/2 in subset 1 (above the a <= 4 exemption),
    the injected n+2 is the double of an existing member: the output then
    contains (n+2)/2 + (n+2)/2 = n+2 and, via the reflection of (n+2)/2,
    the distinct sum (n+2)/2 + (2n+2) = (3n+4) - (n+2)/2, so it is not
    even weakly sum-free.  Weak sum-freeness of subset 1 extended by n+2
    cannot see this: a + a = c sums are exactly what it ignores.
    """
    if p.n < 4:
        return [Violation("order-too-small", None, (p.n,))]
    half = (p.n + 2) // 2
    if p.n % 2 == 0 and half > 4 and half in p.subset(1):
        return [Violation("injected-double", 1, (half, p.n + 2))]
    return []


def _require_seed(p: Partition, step: Optional[int] = None) -> None:
    report = verify(p, ConditionSet.all())
    if report.violations:
        first = min(
            report.violations, key=lambda v: _CONDITION_RANK.get(v.kind, 9)
        )
        raise SeedConditionError(_KIND_TO_CONDITION.get(first.kind, first.kind), report, step)
    extras = _blocking_extras(p)
    if extras:
        raise SeedConditionError(
            _KIND_TO_CONDITION[extras[0].kind],
            ViolationReport.build(extras, {LABEL_WELL_FORMED}),
            step,
        )


def construct_step(p: Partition) -> tuple[Partition, ConstructionTrace]:
    """Extend a conforming partition of 1..m to one of 1..3m-1.

    Three rules build the output:

    1. subset 1 additionally receives m+2, 2m+2 and the reflection
       3m+4-a of each of its own elements a > 4;
    2. every other subset i receives the reflections of its own elements
       a > 4;
    3. a brand new subset takes m+1, the block m+3 .. 2m+1, and 2m+3.

    Elements 1..4 are never reflected; the reflections of 5..m tile
    2m+4 .. 3m-1 exactly once each, which is what makes the output a
    partition.  The input is re-verified first, including the two guards
    from _blocking_extras: without them the output would not be a weak
    Schur partition at all.
    """
    _require_seed(p)
    m = p.n
    r = 3 * m + 4
    reflected = tuple(
        tuple(r - a for a in reversed(sub.elements) if a > 4) for sub in p.subsets
    )
    first = p.subsets[0].elements + (m + 2, 2 * m + 2) + reflected[0]
    newcomer = (m + 1,) + tuple(range(m + 3, 2 * m + 2)) + (2 * m + 3,)
    subsets = (
        IntSet(first),
        *(
            IntSet(p.subsets[i].elements + reflected[i])
            for i in range(1, p.s)
        ),
        IntSet(newcomer),
    )
    out = Partition(subsets, 3 * m - 1)
    out.validate()
    trace = ConstructionTrace(
        input_order=m,
        output_order=3 * m - 1,
        injected=(m + 2, 2 * m + 2),
        reflected_per_subset=reflected,
        new_subset=subsets[-1],
    )
    return out, trace


def iterate(
    seed: Partition, steps: int
) -> list[tuple[Partition, ConstructionTrace]]:
    """Apply construct_step repeatedly, re-checking conditions throughout.

    Every intermediate output is re-verified before the next step consumes
    it: that is construct_step's own precondition check, kept even though
    the induction proves it redundant.  The final output is not gated on
    the conditions; a seed carrying the look-ahead advisory legitimately
    supports exactly one step, and that step's output is still a valid
    weak Schur partition.  Raises SeedConditionError carrying the 0-based
    index of the step whose re-validation failed.
    """
    if steps < 0:
        raise ValueError("steps must be >= 0")
    chain: list[tuple[Partition, ConstructionTrace]] = []
    current = seed
    for k in range(steps):
        try:
            current, trace = construct_step(current)
        except SeedConditionError as e:
            raise SeedConditionError(e.failed, e.report, step=k) from e
        chain.append((current, trace))
    return chain


def validate_seed(p: Partition) -> ViolationReport:
    """Check whether a partition can start the iteration, and how far.

    Blocking entries (conditions 1..3, order-too-small, injected-double)
    mean no step is possible at all.  A report containing only advisories
    means at least one step works but the chain provably stops soon after:

    * advisory-lookahead: 5 sits in subset 1, so the next output has order
      3n-1 = (3n+4)-5 inside its subset 1, failing the membership half of
      the extension condition one step out;
    * advisory-chain-break: the extension sum 3n+1 of the next output (or
      the one after) is already forced.  Triggers: n-1 in subset 1 (pairs
      with the injected 2n+2), members d and d-3 both in subset 1 with
      d > 4 (d-3 pairs with the reflection of d), 6 in subset 1 (becomes
      the n-1 case one step later), or n = 4 (the injected 2n+2 equals the
      next order minus one).

    An empty report certifies the chain iterates indefinitely: every rule
    above re-establishes itself under the step, so the induction closes.
    """
    report = verify(p, ConditionSet.all())
    violations = list(report.violations)
    checked = set(report.checked_conditions)
    conditions_ran = LABEL_WEAK in checked
    if conditions_ran:
        checked.add("look-ahead")
        violations.extend(_blocking_extras(p))
        if not violations:
            # advisories describe the chain's future; moot unless a first
            # step is actually possible
            violations.extend(_lookahead_advisories(p))
    return ViolationReport.build(violations, checked)


def _lookahead_advisories(p: Partition) -> list[Violation]:
    out = []
    n = p.n
    s1 = p.subset(1)
    if 5 in s1:
        out.append(Violation("advisory-lookahead", 1, (5, 3 * n - 1)))
    if n == 4:
        out.append(Violation("advisory-chain-break", 1, (2 * n + 2,)))
    if n - 1 in s1:
        out.append(Violation("advisory-chain-break", 1, (n - 1, 2 * n + 2)))
    if 6 in s1:
        out.append(Violation("advisory-chain-break", 1, (6,)))
    for d in s1.elements:
        if d > 4 and d - 3 in s1:
            out.append(Violation("advisory-chain-break", 1, (d - 3, d)))
    return out


@dataclass(frozen=True)
class BoundSequence:
    """Orders reached by the construction for consecutive subset counts."""

    start_s: int
    orders: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "orders", tuple(self.orders))
        for k in range(len(self.orders) - 1):
            if self.orders[k + 1] != 3 * self.orders[k] - 1:
                raise ValueError(
                    f"orders[{k + 1}] = {self.orders[k + 1]} breaks the "
                    f"3x-1 recurrence from {self.orders[k]}"
                )

    def as_json(self) -> dict:
        return {"start_s": self.start_s, "orders": list(self.orders)}


def bound(s: int) -> int:
    """Largest order the chain from the built-in base reaches with s
    subsets: (41 * 3^(s-3) + 1) / 2, the closed form of m' = 3m - 1 from
    m = 21.  Exact integer arithmetic, valid for any s >= 3."""
    if s < 3:
        raise ValueError("bound is defined for s >= 3")
    return (41 * 3 ** (s - 3) + 1) // 2


def bound_table(s_max: int) -> BoundSequence:
    """Bound values for s = 3..s_max as a recurrence-checked sequence."""
    if s_max < 3:
        raise ValueError("s_max must be >= 3")
    return BoundSequence(3, tuple(bound(s) for s in range(3, s_max + 1)))
