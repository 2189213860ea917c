"""Degree sequences: validation, classification, and majorization.

A degree sequence here is always a non-increasing tuple of positive
integers with even sum, read as the degree multiset of a simple graph on
``n`` labeled vertices.  Sequences are treated as multisets: unsorted
input is canonicalized (sorted non-increasing) with a flag rather than
rejected.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Iterator, Sequence, Union

from .errors import DomainError, ParseError

KIND_TREE = "tree"
KIND_UNICYCLIC = "unicyclic"
KIND_BICYCLIC = "bicyclic"
KIND_MULTICYCLIC = "multicyclic"

_TOKEN_RE = re.compile(r"^(\d+)(?:\^(\d+))?$")


@dataclass(frozen=True)
class DegreeSequence:
    """Validated non-increasing sequence of positive vertex degrees."""

    degrees: tuple[int, ...]
    resorted: bool = field(default=False, compare=False)

    def __post_init__(self):
        degs = tuple(int(d) for d in self.degrees)
        if not degs:
            raise DomainError("degree sequence must be non-empty")
        canonical = tuple(sorted(degs, reverse=True))
        if canonical != degs:
            object.__setattr__(self, "degrees", canonical)
            object.__setattr__(self, "resorted", True)
        else:
            object.__setattr__(self, "degrees", degs)
        n = len(canonical)
        if canonical[-1] < 1:
            raise DomainError(f"degrees must be positive, got {canonical[-1]}")
        if canonical[0] > n - 1:
            raise DomainError(
                f"degree {canonical[0]} exceeds n-1 = {n - 1}; no simple graph can realize it"
            )
        if sum(canonical) % 2 != 0:
            raise DomainError("degree sum must be even")

    @property
    def n(self) -> int:
        return len(self.degrees)

    @property
    def total(self) -> int:
        return sum(self.degrees)

    @classmethod
    def parse(cls, text: str) -> "DegreeSequence":
        """Parse ``"4,4,3,1"`` or run-length shorthand ``"4^2,3,1"``."""
        degs: list[int] = []
        for raw in text.split(","):
            token = raw.strip()
            m = _TOKEN_RE.match(token)
            if not m:
                raise ParseError(f"bad degree token {token!r}")
            value = int(m.group(1))
            count = int(m.group(2)) if m.group(2) else 1
            if count < 1:
                raise ParseError(f"bad repeat count in {token!r}")
            degs.extend([value] * count)
        return cls(tuple(degs))

    def to_text(self) -> str:
        """Serialize in plain comma form."""
        return ",".join(str(d) for d in self.degrees)

    def __iter__(self) -> Iterator[int]:
        return iter(self.degrees)

    def __len__(self) -> int:
        return len(self.degrees)


@dataclass(frozen=True)
class SequenceClass:
    """Cyclomatic classification of a connected-realizable sequence."""

    excess: int
    kind: str
    leaf_count: int
    degree2_count: int


@dataclass(frozen=True)
class OptimalityConditions:
    """Report on the four admissibility conditions of the greedy construction."""

    excess: int
    holds_i: bool
    holds_ii: bool
    holds_iii: bool
    holds_iv: bool

    @property
    def verdict(self) -> bool:
        return self.holds_i and self.holds_ii and self.holds_iii and self.holds_iv


class MajorizationOrder(Enum):
    EQUAL = "equal"
    A_BELOW_B = "a_below_b"
    B_BELOW_A = "b_below_a"
    INCOMPARABLE = "incomparable"


@dataclass(frozen=True)
class MajorizationChain:
    """Chain of sequences linked by single unit transfers, endpoints inclusive."""

    steps: tuple[DegreeSequence, ...]

    def __len__(self) -> int:
        return len(self.steps)


Degreeish = Union[DegreeSequence, Sequence[int], Iterable[int]]


def _as_desc_list(seq: Degreeish) -> list[int]:
    if isinstance(seq, DegreeSequence):
        return list(seq.degrees)
    return sorted((int(d) for d in seq), reverse=True)


def is_graphic(seq: Degreeish) -> bool:
    """Whether some simple graph realizes the degree multiset.

    Total function: accepts any integer multiset (a :class:`DegreeSequence`
    or a raw iterable, zeros allowed) and evaluates the Erdos-Gallai
    inequalities directly.
    """
    d = _as_desc_list(seq)
    if not d:
        return True
    if d[-1] < 0:
        return False
    if sum(d) % 2 != 0:
        return False
    n = len(d)
    for k in range(1, n + 1):
        lhs = sum(d[:k])
        rhs = k * (k - 1) + sum(min(k, x) for x in d[k:])
        if lhs > rhs:
            return False
    return True


def is_connected_realizable(seq: Degreeish) -> bool:
    """Whether some *connected* simple graph realizes the multiset.

    Holds iff the sequence is graphic, every degree is >= 1, and the degree
    sum is at least 2(n-1) (enough edges for a spanning tree); a classical
    exchange argument shows these conditions are sufficient.
    """
    d = _as_desc_list(seq)
    if not d or d[-1] < 1:
        return False
    if sum(d) < 2 * (len(d) - 1):
        return False
    return is_graphic(d)


def classify(seq: DegreeSequence) -> SequenceClass:
    """Classify by cyclomatic excess c = sum/2 - n; requires connected realizability."""
    if not is_connected_realizable(seq):
        raise DomainError(f"({seq.to_text()}) has no connected realization")
    excess = seq.total // 2 - seq.n
    if excess == -1:
        kind = KIND_TREE
    elif excess == 0:
        kind = KIND_UNICYCLIC
    elif excess == 1:
        kind = KIND_BICYCLIC
    else:
        kind = KIND_MULTICYCLIC
    degs = seq.degrees
    return SequenceClass(
        excess=excess,
        kind=kind,
        leaf_count=sum(1 for d in degs if d == 1),
        degree2_count=sum(1 for d in degs if d == 2),
    )


def check_optimality_conditions(seq: DegreeSequence) -> OptimalityConditions:
    """Check the four conditions under which the greedy layered construction
    is provably extremal.

    (i) the excess c = sum/2 - n is an integer >= -1; (ii) d1 >= d2 >= c+2;
    (iii) d3 >= d4 = ... = d_{c+3} (vacuous for c <= 0); (iv) dn = 1.
    """
    d = seq.degrees
    n = seq.n
    excess = sum(d) // 2 - n
    holds_i = excess >= -1
    holds_ii = d[1] >= excess + 2 if n >= 2 else False
    if excess <= 0:
        holds_iii = True
    elif n < excess + 3:
        holds_iii = False
    else:
        plateau = d[3 : excess + 3]
        holds_iii = all(x == plateau[0] for x in plateau) and d[2] >= plateau[0]
    holds_iv = d[-1] == 1
    return OptimalityConditions(excess, holds_i, holds_ii, holds_iii, holds_iv)


def _prefix_sums(d: Sequence[int]) -> list[int]:
    out = []
    acc = 0
    for x in d:
        acc += x
        out.append(acc)
    return out


def majorization_compare(a: Degreeish, b: Degreeish) -> MajorizationOrder:
    """Compare two sequences in the dominance (majorization) order."""
    da = _as_desc_list(a)
    db = _as_desc_list(b)
    if len(da) != len(db) or sum(da) != sum(db):
        return MajorizationOrder.INCOMPARABLE
    if da == db:
        return MajorizationOrder.EQUAL
    pa = _prefix_sums(da)
    pb = _prefix_sums(db)
    a_below = all(x <= y for x, y in zip(pa, pb))
    b_below = all(y <= x for x, y in zip(pa, pb))
    if a_below:
        return MajorizationOrder.A_BELOW_B
    if b_below:
        return MajorizationOrder.B_BELOW_A
    return MajorizationOrder.INCOMPARABLE


def majorization_chain(a: DegreeSequence, b: DegreeSequence) -> MajorizationChain:
    """Connect ``a`` up to ``b`` by single unit transfers.

    Consecutive steps differ in exactly two positions p < q, by +1 at p and
    -1 at q.  Every intermediate stays non-increasing, graphic, and below
    ``b`` in the dominance order.  Deterministic: p is the first position
    where the target's prefix sum strictly exceeds the current one, q the
    first later position where the current value exceeds the target's,
    pushed to the end of its equal-value block so sortedness survives.
    """
    order = majorization_compare(a, b)
    if order not in (MajorizationOrder.EQUAL, MajorizationOrder.A_BELOW_B):
        raise DomainError(
            f"({a.to_text()}) is not dominated by ({b.to_text()}); no chain exists"
        )
    if not is_graphic(a) or not is_graphic(b):
        raise DomainError("chain endpoints must both be graphic")
    cur = list(a.degrees)
    target = list(b.degrees)
    steps = [a]
    guard = sum(abs(x - y) for x, y in zip(_prefix_sums(cur), _prefix_sums(target)))
    while cur != target:
        p = next(i for i in range(len(cur)) if cur[i] != target[i])
        q = next(j for j in range(p + 1, len(cur)) if cur[j] > target[j])
        while q + 1 < len(cur) and cur[q + 1] == cur[q]:
            q += 1
        cur[p] += 1
        cur[q] -= 1
        step = DegreeSequence(tuple(cur))
        if not is_graphic(step):
            raise DomainError(
                f"internal: intermediate ({step.to_text()}) is not graphic"
            )
        steps.append(step)
        guard -= 1
        if guard < 0:
            raise DomainError("internal: unit-transfer chain failed to terminate")
    return MajorizationChain(tuple(steps))


def _bounded_partitions(total: int, parts: int, max_part: int) -> Iterator[tuple[int, ...]]:
    """Non-increasing tuples of ``parts`` entries in [1, max_part] summing to total."""

    def rec(remaining: int, slots: int, cap: int, acc: list[int]):
        if slots == 0:
            if remaining == 0:
                yield tuple(acc)
            return
        lo = max(1, remaining - (slots - 1) * cap)
        hi = min(cap, remaining - (slots - 1))
        for v in range(hi, lo - 1, -1):
            acc.append(v)
            yield from rec(remaining - v, slots - 1, v, acc)
            acc.pop()

    if parts < 1 or total < parts or total > parts * max_part:
        return
    yield from rec(total, parts, max_part, [])


def connected_realizable_sequences(n: int, excess: int) -> list[DegreeSequence]:
    """All connected-realizable sequences of order n with the given excess,
    ascending lexicographic order."""
    if n < 1 or excess < -1:
        return []
    total = 2 * (n + excess)
    found = []
    for degs in _bounded_partitions(total, n, n - 1):
        if is_graphic(degs):
            found.append(degs)
    found.sort()
    return [DegreeSequence(t) for t in found]
