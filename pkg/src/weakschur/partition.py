"""Core domain types and the canonical ``.wsp`` partition text format.

A partition assigns every integer in 1..n to exactly one of s labelled
subsets.  Subset labels are 1-based and meaningful: subset 1 is the one the
seed-extension condition constrains, so label order is data, not cosmetics.

Canonical format (line-oriented ASCII, extension ``.wsp``)::

    wsp 1
    s=<count> n=<order>
    1: <a1> <a2> ...
    ...
    s: <a1> <a2> ...

Elements are ascending, single-space separated.  Blank lines and lines
starting with ``#`` are ignored when parsing and never emitted.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import IO, Iterable, Optional

from .intset import IntSet, iter_bits

WSP_FORMAT_VERSION = 1

#: violation kinds that flag a future problem rather than a broken condition
ADVISORY_KINDS = frozenset({"advisory-lookahead", "advisory-chain-break"})


class WspFormatError(ValueError):
    """Malformed partition text; ``line`` is the 1-based offending line."""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        self.message = message
        super().__init__(f"line {line}: {message}" if line else message)


class InvalidPartitionError(ValueError):
    """A partition object failed its structural invariants."""

    def __init__(self, violations: "list[Violation]"):
        self.violations = tuple(violations)
        head = "; ".join(v.describe() for v in self.violations[:4])
        more = f" (+{len(self.violations) - 4} more)" if len(self.violations) > 4 else ""
        super().__init__(f"not a valid partition: {head}{more}")


@dataclass(frozen=True)
class Violation:
    """One broken rule, as data.

    kind is one of: weak-sum, strong-sum, double-element, not-a-partition,
    empty-subset, condition3-sumfree, condition3-membership,
    order-too-small, injected-double, advisory-lookahead,
    advisory-chain-break.  The witness carries the integers that exhibit
    the problem (for sums: a, b, a+b with the smaller operand first).
    """

    kind: str
    subset_index: Optional[int]
    witness: tuple[int, ...] = ()

    @property
    def sort_key(self) -> tuple:
        w = self.witness
        return (
            self.subset_index if self.subset_index is not None else 0,
            w[-1] if w else 0,
            w[0] if w else 0,
            self.kind,
        )

    @property
    def is_advisory(self) -> bool:
        return self.kind in ADVISORY_KINDS

    def describe(self) -> str:
        w = self.witness
        where = f" in subset {self.subset_index}" if self.subset_index is not None else ""
        if self.kind in ("weak-sum", "strong-sum", "condition3-sumfree"):
            core = f"{w[0]} + {w[1]} = {w[2]}"
        elif self.kind == "double-element":
            core = f"pair {w[0]}, {w[1]}"
        elif self.kind == "condition3-membership":
            core = f"order {w[0]} is a member"
        elif self.kind == "empty-subset":
            core = "no elements"
        elif self.kind == "order-too-small":
            core = f"order {w[0]} is below 4, the smallest the step extends"
        elif self.kind == "injected-double":
            core = f"{w[0]} present, so the step would inject its double {w[1]}"
        elif self.kind == "advisory-lookahead":
            core = f"5 present, so the next step would put {w[1]} there"
        elif self.kind == "advisory-chain-break":
            members = ", ".join(map(str, w))
            core = f"iteration provably stops a few steps out (involving {members})"
        elif self.kind == "not-a-partition":
            if not w:
                core = "bad structure"
            elif self.subset_index is None:
                core = f"integer {w[0]} is not covered"
            else:
                core = f"element {w[0]} duplicated or outside 1..n"
        else:
            core = " ".join(map(str, w))
        return f"{self.kind}: {core}{where}"

    def as_json(self) -> dict:
        return {
            "kind": self.kind,
            "subset_index": self.subset_index,
            "witness": list(self.witness),
        }

    def __str__(self) -> str:
        return self.describe()


@dataclass(frozen=True)
class ViolationReport:
    """Outcome of a verification run: an exhaustive, sorted violation list
    plus the labels of the checks that actually ran."""

    violations: tuple[Violation, ...]
    checked_conditions: frozenset[str]

    @classmethod
    def build(
        cls, violations: Iterable[Violation], checked: Iterable[str]
    ) -> "ViolationReport":
        ordered = tuple(sorted(violations, key=lambda v: v.sort_key))
        return cls(ordered, frozenset(checked))

    @property
    def passed(self) -> bool:
        return not self.violations

    def blocking(self) -> tuple[Violation, ...]:
        """Violations that actually break a condition (advisories excluded)."""
        return tuple(v for v in self.violations if not v.is_advisory)

    def as_json(self) -> dict:
        return {
            "violations": [v.as_json() for v in self.violations],
            "checked_conditions": sorted(self.checked_conditions),
        }


@dataclass(frozen=True)
class Partition:
    """s labelled subsets covering exactly {1..n}.

    Construction does not validate (the verifier treats malformed
    partitions as reportable data); every operation that hands a Partition
    to a caller runs :meth:`validate` first.
    """

    subsets: tuple[IntSet, ...]
    n: int

    def __post_init__(self):
        object.__setattr__(self, "subsets", tuple(self.subsets))

    @property
    def s(self) -> int:
        return len(self.subsets)

    def subset(self, i: int) -> IntSet:
        """1-based accessor matching the labels in the text format."""
        if not 1 <= i <= len(self.subsets):
            raise IndexError(f"subset index {i} out of range 1..{len(self.subsets)}")
        return self.subsets[i - 1]

    @classmethod
    def from_subsets(
        cls, subsets: Iterable[Iterable[int]], n: Optional[int] = None
    ) -> "Partition":
        """Build and validate.  When n is omitted, the largest element is used."""
        sets = tuple(s if isinstance(s, IntSet) else IntSet(s) for s in subsets)
        if n is None:
            n = max((s.max for s in sets if s.max is not None), default=0)
        p = cls(sets, n)
        p.validate()
        return p

    def validate(self) -> None:
        vios = well_formed_violations(self)
        if vios:
            raise InvalidPartitionError(vios)

    def __repr__(self) -> str:
        return f"Partition(s={self.s}, n={self.n})"


def well_formed_violations(p: Partition) -> list[Violation]:
    """Structural checks: positive order, non-empty pairwise-disjoint
    subsets, union exactly {1..n}.  Returns violations, sorted."""
    out: list[Violation] = []
    if p.n < 1 or p.s < 1:
        out.append(Violation("not-a-partition", None))
        return out
    full = (1 << (p.n + 1)) - 2  # bits 1..n
    seen = 0
    for i, sub in enumerate(p.subsets, 1):
        m = sub.mask
        if not m:
            out.append(Violation("empty-subset", i))
        for e in iter_bits(m & ~full):
            out.append(Violation("not-a-partition", i, (e,)))
        for e in iter_bits(m & seen):
            out.append(Violation("not-a-partition", i, (e,)))
        seen |= m
    for e in iter_bits(full & ~seen):
        out.append(Violation("not-a-partition", None, (e,)))
    out.sort(key=lambda v: v.sort_key)
    return out


@dataclass(frozen=True)
class ConstructionTrace:
    """Bookkeeping for one extension step: where every new element of the
    output came from."""

    input_order: int
    output_order: int
    injected: tuple[int, int]
    reflected_per_subset: tuple[tuple[int, ...], ...]
    new_subset: IntSet

    def as_json(self) -> dict:
        return {
            "input_order": self.input_order,
            "output_order": self.output_order,
            "injected": list(self.injected),
            "reflected_per_subset": [list(r) for r in self.reflected_per_subset],
            "new_subset": list(self.new_subset),
        }


_HEADER_RE = re.compile(r"^s=(\d+) n=(\d+)$")
_SUBSET_RE = re.compile(r"^(\d+):(.*)$")


def parse_partition(source: "str | IO[str]") -> Partition:
    """Parse canonical partition text into a validated Partition.

    Accepts a string or a text file object.  Blank and ``#`` lines are
    skipped.  Raises WspFormatError with the offending line number on any
    problem: bad header, malformed line, duplicate integer, element out of
    range, empty subset, or incomplete coverage of 1..n.
    """
    text = source.read() if hasattr(source, "read") else source
    lines = [
        (no, stripped)
        for no, raw in enumerate(text.splitlines(), 1)
        if (stripped := raw.strip()) and not stripped.startswith("#")
    ]
    cursor = iter(lines)

    def next_line(expect: str) -> tuple[int, str]:
        try:
            return next(cursor)
        except StopIteration:
            raise WspFormatError(f"unexpected end of input, expected {expect}") from None

    no, line = next_line("format header")
    if line != f"wsp {WSP_FORMAT_VERSION}":
        raise WspFormatError(f"expected format header 'wsp {WSP_FORMAT_VERSION}'", no)

    header_no, line = next_line("header 's=<count> n=<order>'")
    m = _HEADER_RE.match(line)
    if not m:
        raise WspFormatError("expected header 's=<count> n=<order>'", header_no)
    s, n = int(m.group(1)), int(m.group(2))
    if s < 1:
        raise WspFormatError("subset count must be >= 1", header_no)
    if n < 1:
        raise WspFormatError("order must be >= 1", header_no)

    seen = bytearray(n + 1)
    count = 0
    subsets = []
    for i in range(1, s + 1):
        no, line = next_line(f"subset line '{i}: ...'")
        m = _SUBSET_RE.match(line)
        if not m:
            raise WspFormatError(f"expected subset line '{i}: ...'", no)
        if int(m.group(1)) != i:
            raise WspFormatError(f"expected subset {i}, found {m.group(1)}", no)
        tokens = m.group(2).split()
        if not tokens:
            raise WspFormatError(f"subset {i} is empty", no)
        elems = []
        for tok in tokens:
            try:
                e = int(tok)
            except ValueError:
                raise WspFormatError(f"malformed element {tok!r}", no) from None
            if e < 1:
                raise WspFormatError(f"element {e} must be >= 1", no)
            if e > n:
                raise WspFormatError(f"element {e} exceeds order {n}", no)
            if seen[e]:
                raise WspFormatError(f"duplicate integer {e}", no)
            seen[e] = 1
            elems.append(e)
        count += len(elems)
        subsets.append(IntSet(elems))

    try:
        no, line = next(cursor)
    except StopIteration:
        pass
    else:
        raise WspFormatError(f"unexpected trailing line {line!r}", no)

    if count != n:
        missing = next(e for e in range(1, n + 1) if not seen[e])
        raise WspFormatError(f"integer {missing} missing from cover of 1..{n}", header_no)

    p = Partition(tuple(subsets), n)
    p.validate()
    return p


def serialize_partition(p: Partition) -> str:
    """Emit canonical text: ascending elements, single spaces, no comments.

    The input is validated first, so only well-formed partitions can ever
    reach a file; parse(serialize(p)) == p holds for all of them.
    """
    p.validate()
    parts = [f"wsp {WSP_FORMAT_VERSION}\n", f"s={p.s} n={p.n}\n"]
    for i, sub in enumerate(p.subsets, 1):
        parts.append(f"{i}: ")
        parts.append(" ".join(map(str, sub.elements)))
        parts.append("\n")
    return "".join(parts)
