"""Exhaustive backtracking over colourings of 1..n.

This is the library's independent oracle: it shares no code with the
construction, so agreement between a search witness and the verifier, or
between an exact value here and a bound there, is evidence rather than
tautology.  Values are coloured in the fixed order 1, 2, ..., n; colour
symmetry is broken by first use, and every result is deterministic,
including node counts.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from .construct import validate_seed
from .intset import IntSet
from .partition import Partition
from .verifier import ConditionSet

#: node budget applied when the caller does not choose one
DEFAULT_BUDGET = 100_000_000


class SearchBudgetExceeded(RuntimeError):
    """The node budget ran out before the question was settled."""

    def __init__(self, nodes_visited: int):
        self.nodes_visited = nodes_visited
        super().__init__(f"search budget exhausted after {nodes_visited} nodes")


@dataclass(frozen=True)
class SearchResult:
    """Outcome of a weak-Schur-number scan.

    mode is "exact" when infeasibility at best_n + 1 was proven by
    exhausting the tree, "capped" when the order cap or node budget ended
    the scan first.  Values here come from search, never from the bound
    formula; consumers should label them accordingly.
    """

    s: int
    mode: str
    best_n: int
    witness: Optional[Partition]
    exhausted: bool
    nodes_visited: int

    def as_json(self) -> dict:
        return {
            "s": self.s,
            "mode": self.mode,
            "best_n": self.best_n,
            "exhausted": self.exhausted,
            "nodes_visited": self.nodes_visited,
            "source": "search",
        }


def _search(
    s: int,
    n: int,
    *,
    no_double: bool = False,
    special_first: bool = False,
    require_all: bool = False,
    seed_filters: bool = False,
    budget: Optional[int] = None,
    emit: Callable[[list[int]], bool],
) -> tuple[bool, int]:
    """Core backtracker over colourings of 1..n with s colours.

    Per colour, ``members`` is the bitmask of placed values and ``sums`` the
    bitmask of values that would close a weak triple there (bit v set means
    some a < b in the colour have a + b = v), so feasibility of a colour is
    one bit test and placement is one shifted OR.

    First-use symmetry breaking: value v may reuse any open colour or open
    the next one.  With ``special_first`` colour 1 is exempt from that
    ordering (it is pre-opened and may stay empty); it then also enforces
    the seed-extension rules: no pair in colour 1 may sum to n + 2 and n
    itself stays out.  ``seed_filters`` additionally prunes colour 1 by the
    look-ahead rules (no 5, 6, n-1, (n+2)/2 for even n, or pair at
    distance 3), matching what validate_seed accepts outright.  ``emit``
    sees each complete assignment (a list mapping value-1 to colour) and
    returns True to stop the search.

    Returns (stopped_early, nodes); a node is one value placement.  Raises
    SearchBudgetExceeded when the budget would be passed.
    """
    members = [0] * (s + 1)
    sums = [0] * (s + 1)
    colour_of = [0] * (n + 1)
    nodes = 0
    target = n + 2  # forbidden pair-sum inside the designated first subset
    banned_first = frozenset()
    if seed_filters:
        banned = {5, 6, n - 1}
        if n % 2 == 0 and (n + 2) // 2 > 4:
            banned.add((n + 2) // 2)
        banned_first = frozenset(banned)

    def place(v: int, hi: int) -> bool:
        nonlocal nodes
        if v > n:
            if require_all and (hi < s or (special_first and not members[1])):
                return False
            return emit(colour_of[1:])
        if require_all:
            empties = (s - hi) + (1 if special_first and not members[1] else 0)
            if n - v + 1 < empties:
                return False
        top = hi + 1 if hi < s else s
        for c in range(1, top + 1):
            if (sums[c] >> v) & 1:
                continue
            if no_double and not (v & 1):
                a = v >> 1
                if a > 4 and (members[c] >> a) & 1:
                    continue
            if special_first and c == 1:
                if v == n:
                    continue
                partner = target - v
                if 0 < partner and (members[1] >> partner) & 1:
                    continue
                if seed_filters:
                    if v in banned_first:
                        continue
                    if v > 4 and (members[1] >> (v - 3)) & 1:
                        continue
            if budget is not None and nodes >= budget:
                raise SearchBudgetExceeded(nodes)
            nodes += 1
            saved_members, saved_sums = members[c], sums[c]
            sums[c] = saved_sums | (saved_members << v)
            members[c] = saved_members | (1 << v)
            colour_of[v] = c
            if place(v + 1, hi if c <= hi else c):
                return True
            members[c], sums[c] = saved_members, saved_sums
        return False

    stopped = place(1, 1 if special_first else 0)
    return stopped, nodes


def _partition_from(assignment: list[int], s: int, n: int) -> Partition:
    """Turn a colour assignment into a Partition with exactly s non-empty
    subsets, peeling single elements off large subsets when the search used
    fewer colours.  Removal never breaks weak sum-freeness, so padding is
    always sound; the donor is the subset holding the largest movable
    element, which keeps the result deterministic."""
    groups: list[list[int]] = [[] for _ in range(s)]
    for v, c in enumerate(assignment, 1):
        groups[c - 1].append(v)
    empties = [g for g in groups if not g]
    while empties:
        donor = max(
            (g for g in groups if len(g) > 1),
            key=lambda g: g[-1],
        )
        empties.pop(0).append(donor.pop())
    return Partition(tuple(IntSet(g) for g in groups), n)


def decide(
    s: int,
    n: int,
    constraints: Optional[ConditionSet] = None,
    *,
    budget: int = DEFAULT_BUDGET,
) -> Optional[Partition]:
    """Find a partition of 1..n into exactly s non-empty weakly sum-free
    subsets meeting the requested extra conditions, or prove there is none.

    Returns a witness Partition or None for proven infeasibility; raises
    SearchBudgetExceeded when the node budget runs out first, which is a
    different statement entirely.  Deterministic for fixed arguments.
    """
    witness, _ = _decide(s, n, constraints, budget=budget)
    return witness


def _decide(
    s: int,
    n: int,
    constraints: Optional[ConditionSet] = None,
    *,
    budget: int = DEFAULT_BUDGET,
) -> tuple[Optional[Partition], int]:
    if s < 1 or n < 1:
        raise ValueError("s and n must be >= 1")
    if n < s:
        return None, 0  # s non-empty subsets need at least s integers
    constraints = constraints if constraints is not None else ConditionSet.condition1()
    special = constraints.seed_extension
    found: list[list[int]] = []

    def emit(assignment: list[int]) -> bool:
        found.append(list(assignment))
        return True

    _, nodes = _search(
        s,
        n,
        no_double=constraints.no_double,
        special_first=special,
        require_all=special,
        budget=budget,
        emit=emit,
    )
    if not found:
        return None, nodes
    witness = _partition_from(found[0], s, n)
    witness.validate()
    return witness, nodes


def compute_ws(s: int, cap: int, *, budget: int = DEFAULT_BUDGET) -> SearchResult:
    """Scan n upward to the largest order admitting a weak Schur partition
    into s subsets.

    Exact when infeasibility at best_n + 1 was proven inside the budget;
    capped when the order cap or the budget cut the scan short.  Budget
    exhaustion is encoded in the result, never raised.
    """
    if s < 1:
        raise ValueError("s must be >= 1")
    best_n = 0
    witness: Optional[Partition] = None
    nodes_total = 0
    mode = "capped"
    exhausted = False
    for n in range(s, cap + 1):
        try:
            w, nodes = _decide(s, n, budget=budget - nodes_total)
        except SearchBudgetExceeded as e:
            nodes_total += e.nodes_visited
            break
        nodes_total += nodes
        if w is None:
            mode = "exact"
            exhausted = True
            break
        best_n, witness = n, w
    return SearchResult(
        s=s,
        mode=mode,
        best_n=best_n,
        witness=witness,
        exhausted=exhausted,
        nodes_visited=nodes_total,
    )


def find_seeds(
    s: int, n: int, limit: int, *, budget: int = DEFAULT_BUDGET
) -> list[Partition]:
    """Enumerate up to ``limit`` partitions of 1..n that can start the
    iteration indefinitely: all conditions hold and 5 avoids subset 1.

    Subset 1 is the designated seed-extension subset and may be any class
    (it is exempt from first-use ordering); subsets 2..s appear in first-use
    order, so each labelled seed shows up exactly once.  Orders below 5
    cannot pass validate_seed cleanly and yield no results.
    """
    if s < 1 or n < 1:
        raise ValueError("s and n must be >= 1")
    if limit <= 0 or n < s or n < 5:
        return []
    seeds: list[Partition] = []

    def emit(assignment: list[int]) -> bool:
        p = _partition_from(assignment, s, n)
        if not validate_seed(p).violations:
            seeds.append(p)
        return len(seeds) >= limit

    _search(
        s,
        n,
        no_double=True,
        special_first=True,
        require_all=True,
        seed_filters=True,
        budget=budget,
        emit=emit,
    )
    return seeds
