"""Independent checks on partitions and their subsets.

Everything here is a pure function from immutable inputs to violation
lists; failures are data, never exceptions.  The fast weak-sum enumerator
and the deliberately dumb naive one implement the same contract, so each
can convict the other of a bug.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .intset import IntSet, bit_positions
from .partition import (
    Partition,
    Violation,
    ViolationReport,
    well_formed_violations,
)

LABEL_WELL_FORMED = "well-formed"
LABEL_WEAK = "weak-sum-free"
LABEL_NO_DOUBLE = "no-double"
LABEL_SEED_EXT = "seed-extension"

# numeric aliases accepted on the command line
_NUMBERED = {"1": LABEL_WEAK, "2": LABEL_NO_DOUBLE, "3": LABEL_SEED_EXT}


@dataclass(frozen=True)
class ConditionSet:
    """Which checks to run.  Well-formedness is always evaluated first
    regardless of the flags; the other checks never run on a partition
    that failed it."""

    well_formed: bool = True
    weak_sum_free: bool = True
    no_double: bool = True
    seed_extension: bool = True

    def __post_init__(self):
        if not (self.well_formed or self.weak_sum_free or self.no_double or self.seed_extension):
            raise ValueError("at least one check must be selected")

    @classmethod
    def all(cls) -> "ConditionSet":
        return cls()

    @classmethod
    def condition1(cls) -> "ConditionSet":
        """Weak sum-freeness only: what a lower-bound witness must satisfy."""
        return cls(weak_sum_free=True, no_double=False, seed_extension=False)

    @classmethod
    def from_labels(cls, text: str) -> "ConditionSet":
        """Parse a CLI selector: 'all' or a comma list drawn from 1,2,3."""
        if text.strip().lower() == "all":
            return cls.all()
        chosen = set()
        for tok in text.split(","):
            tok = tok.strip()
            if tok not in _NUMBERED:
                raise ValueError(f"unknown condition {tok!r} (expected 1, 2, 3 or 'all')")
            chosen.add(_NUMBERED[tok])
        return cls(
            weak_sum_free=LABEL_WEAK in chosen,
            no_double=LABEL_NO_DOUBLE in chosen,
            seed_extension=LABEL_SEED_EXT in chosen,
        )

    @property
    def labels(self) -> frozenset:
        out = {LABEL_WELL_FORMED} if self.well_formed else set()
        if self.weak_sum_free:
            out.add(LABEL_WEAK)
        if self.no_double:
            out.add(LABEL_NO_DOUBLE)
        if self.seed_extension:
            out.add(LABEL_SEED_EXT)
        return frozenset(out)


def weak_violations(S: IntSet, *, first_only: bool = False) -> list[Violation]:
    """Every triple a < b with a+b also in S, via shifted intersection.

    For positive integers a != b forces a+b distinct from both, so
    enumerating a < b is exactly the no-three-distinct-members criterion.
    Bit k of ``mask & (mask >> a)`` says k and k+a are both members, one
    word-parallel probe per candidate a.  Only a with 2a < max(S) can open
    a triple, which keeps the probe count low on sets whose small elements
    are few.
    """
    out: list[Violation] = []
    top = S.max
    if top is None:
        return out
    m = S.mask
    half = (top - 1) >> 1  # need some b > a with a + b <= top
    for a in S.elements:
        if a > half:
            break
        pair = (m >> a) & m & (-1 << (a + 1))
        if pair:
            if first_only:
                b = (pair & -pair).bit_length() - 1
                return [Violation("weak-sum", None, (a, b, a + b))]
            out.extend(
                Violation("weak-sum", None, (a, b, a + b)) for b in bit_positions(pair)
            )
    return out


def weak_violations_naive(S: IntSet) -> list[Violation]:
    """Reference enumerator: direct O(|S|^2) pair scan, no bit tricks.

    Exists purely to cross-check weak_violations; keep it boring.
    """
    elems = S.elements
    members = set(elems)
    out = []
    for i, a in enumerate(elems):
        for b in elems[i + 1:]:
            if a + b in members:
                out.append(Violation("weak-sum", None, (a, b, a + b)))
    return out


def strong_violations(S: IntSet) -> list[Violation]:
    """Every pair a <= b (equality allowed) with a+b in S."""
    out: list[Violation] = []
    top = S.max
    if top is None:
        return out
    m = S.mask
    for a in S.elements:
        if 2 * a > top:
            break
        pair = (m >> a) & m & (-1 << a)  # b >= a this time
        if pair:
            out.extend(
                Violation("strong-sum", None, (a, b, a + b)) for b in bit_positions(pair)
            )
    return out


def condition2_violations(p: Partition) -> list[Violation]:
    """Pairs a, 2a in one subset with a > 4.

    Doubling with a <= 4 is exempt: those sums are the only a+a=c shapes a
    step can run into below the reflection zone, and they are harmless.
    """
    out = []
    for i, sub in enumerate(p.subsets, 1):
        top = sub.max
        if top is None:
            continue
        for a in sub.elements:
            if 2 * a > top:
                break
            if a > 4 and 2 * a in sub:
                out.append(Violation("double-element", i, (a, 2 * a)))
    return out


def condition3_violations(p: Partition) -> list[Violation]:
    """Subset 1 must stay weakly sum-free when n+2 joins it, and must not
    contain n itself.  Both halves are what lets a step be applied."""
    out = []
    s1 = p.subset(1)
    extended = s1.with_element(p.n + 2)
    for v in weak_violations(extended):
        out.append(replace(v, kind="condition3-sumfree", subset_index=1))
    if p.n in s1:
        out.append(Violation("condition3-membership", 1, (p.n,)))
    return out


def verify(
    p: Partition,
    which: "ConditionSet | None" = None,
    *,
    first_only: bool = False,
) -> ViolationReport:
    """Run the selected checks and aggregate a deterministic report.

    Well-formedness always runs first; if it fails, the condition checks
    are skipped (their labels stay out of checked_conditions) so they never
    see garbage.  Violations are sorted by (subset, sum, smaller operand).
    An empty report with condition 1 checked certifies the order as a
    lower-bound witness; empty with all conditions means the partition can
    seed the construction.
    """
    which = which if which is not None else ConditionSet.all()
    checked = {LABEL_WELL_FORMED}
    structural = well_formed_violations(p)
    if structural:
        if first_only:
            structural = structural[:1]
        return ViolationReport.build(structural, checked)

    out: list[Violation] = []
    if which.weak_sum_free:
        checked.add(LABEL_WEAK)
        for i, sub in enumerate(p.subsets, 1):
            for v in weak_violations(sub, first_only=first_only):
                out.append(replace(v, subset_index=i))
            if first_only and out:
                break
    if which.no_double and not (first_only and out):
        checked.add(LABEL_NO_DOUBLE)
        out.extend(condition2_violations(p))
    if which.seed_extension and not (first_only and out):
        checked.add(LABEL_SEED_EXT)
        out.extend(condition3_violations(p))

    if first_only and out:
        out = sorted(out, key=lambda v: v.sort_key)[:1]
    return ViolationReport.build(out, checked)
