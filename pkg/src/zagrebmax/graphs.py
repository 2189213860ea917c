"""Simple undirected graphs on vertices 1..n and the second Zagreb index.

Graph values are immutable after construction; every "mutating" operation
elsewhere in the package builds a new graph.  The edge-list text format
(header ``"n m"`` then one ``"u v"`` line per edge, ascending, LF-separated)
is the only graph file format.
"""

from __future__ import annotations

import math
from itertools import permutations
from typing import Iterable, Mapping

from .errors import CapExceededError, DomainError, ParseError
from .sequences import DegreeSequence


class SimpleGraph:
    """Undirected simple graph with integer vertex labels 1..n."""

    __slots__ = ("n", "edges", "_adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 1:
            raise DomainError("graph needs at least one vertex")
        seen: set[tuple[int, int]] = set()
        for u, v in edges:
            if not (1 <= u <= n and 1 <= v <= n):
                raise DomainError(f"edge ({u},{v}) out of range 1..{n}")
            if u == v:
                raise DomainError(f"loop at vertex {u}")
            e = (u, v) if u < v else (v, u)
            if e in seen:
                raise DomainError(f"duplicate edge ({e[0]},{e[1]})")
            seen.add(e)
        self.n = n
        self.edges: tuple[tuple[int, int], ...] = tuple(sorted(seen))
        adj: list[list[int]] = [[] for _ in range(n + 1)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        self._adj = tuple(tuple(sorted(nbrs)) for nbrs in adj)

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def degrees(self) -> list[int]:
        """Degree of each vertex, indexed by label (entry 0 unused)."""
        return [0] + [len(self._adj[v]) for v in range(1, self.n + 1)]

    def has_edge(self, u: int, v: int) -> bool:
        e = (u, v) if u < v else (v, u)
        lo = self._adj[e[0]]
        return e[1] in lo

    def replace_edges(
        self,
        remove: Iterable[tuple[int, int]] = (),
        add: Iterable[tuple[int, int]] = (),
    ) -> "SimpleGraph":
        """New graph with the given edges removed then added."""
        current = set(self.edges)
        for u, v in remove:
            e = (u, v) if u < v else (v, u)
            if e not in current:
                raise DomainError(f"cannot remove absent edge ({e[0]},{e[1]})")
            current.remove(e)
        for u, v in add:
            e = (u, v) if u < v else (v, u)
            if e in current:
                raise DomainError(f"cannot add present edge ({e[0]},{e[1]})")
            current.add(e)
        return SimpleGraph(self.n, current)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SimpleGraph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"SimpleGraph(n={self.n}, m={self.m})"


def second_zagreb(g: SimpleGraph) -> int:
    """Sum over all edges of the product of the endpoint degrees."""
    deg = g.degrees()
    return sum(deg[u] * deg[v] for u, v in g.edges)


def degree_sequence_of(g: SimpleGraph) -> DegreeSequence:
    deg = g.degrees()[1:]
    if min(deg) == 0:
        isolated = deg.index(0) + 1
        raise DomainError(f"vertex {isolated} is isolated; degree sequences need d >= 1")
    return DegreeSequence(tuple(sorted(deg, reverse=True)))


def is_connected(g: SimpleGraph) -> bool:
    seen = {1}
    stack = [1]
    while stack:
        v = stack.pop()
        for u in g.neighbors(v):
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return len(seen) == g.n


def relabel(g: SimpleGraph, mapping: Mapping[int, int]) -> SimpleGraph:
    """Apply a vertex permutation given as {old: new}."""
    if sorted(mapping) != list(range(1, g.n + 1)) or sorted(
        mapping.values()
    ) != list(range(1, g.n + 1)):
        raise DomainError("mapping must be a permutation of 1..n")
    return SimpleGraph(g.n, ((mapping[u], mapping[v]) for u, v in g.edges))


def parse_edge_list(text: str) -> SimpleGraph:
    """Parse the edge-list format: header ``"n m"``, then m lines ``"u v"``."""
    lines = [ln for ln in (raw.strip() for raw in text.split("\n")) if ln]
    if not lines:
        raise ParseError("empty graph text")
    head = lines[0].split()
    if len(head) != 2:
        raise ParseError(f"bad header {lines[0]!r}; expected 'n m'")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError as exc:
        raise ParseError(f"bad header {lines[0]!r}") from exc
    if len(lines) - 1 != m:
        raise ParseError(f"header promises {m} edges, found {len(lines) - 1}")
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ParseError(f"bad edge line {ln!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise ParseError(f"bad edge line {ln!r}") from exc
        edges.append((u, v))
    try:
        return SimpleGraph(n, edges)
    except DomainError as exc:
        raise ParseError(str(exc)) from exc


def serialize_edge_list(g: SimpleGraph) -> str:
    """Canonical edge-list text: ASCII, single spaces, LF newlines."""
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def to_dot(g: SimpleGraph) -> str:
    lines = ["graph g {"]
    lines.extend(f"  {v};" for v in range(1, g.n + 1))
    lines.extend(f"  {u} -- {v};" for u, v in g.edges)
    lines.append("}")
    return "\n".join(lines) + "\n"


def _refine_colors(g: SimpleGraph) -> list[int]:
    """Iterated neighborhood color refinement; color ids are canonical
    (assigned by sorted signature), so they agree across isomorphic graphs."""
    degs = g.degrees()
    ranking = {d: i for i, d in enumerate(sorted(set(degs[1:]), reverse=True))}
    colors = [0] * (g.n + 1)
    for v in range(1, g.n + 1):
        colors[v] = ranking[degs[v]]
    ncolors = len(ranking)
    while True:
        sigs = {
            v: (colors[v], tuple(sorted(colors[u] for u in g.neighbors(v))))
            for v in range(1, g.n + 1)
        }
        remap = {sig: i for i, sig in enumerate(sorted(set(sigs.values())))}
        new = [0] * (g.n + 1)
        for v in range(1, g.n + 1):
            new[v] = remap[sigs[v]]
        if len(remap) == ncolors:
            return new
        colors = new
        ncolors = len(remap)


def canonical_form(
    g: SimpleGraph, perm_cap: int = 2_000_000
) -> tuple[tuple[int, int], ...]:
    """Canonical edge tuple: equal for two graphs iff they are isomorphic.

    Color-refines the vertices, then minimizes the relabeled edge list over
    all orderings that respect the stable color partition.  The number of
    orderings is the product of the cell factorials; refuses above
    ``perm_cap``.
    """
    colors = _refine_colors(g)
    cells: dict[int, list[int]] = {}
    for v in range(1, g.n + 1):
        cells.setdefault(colors[v], []).append(v)
    ordered_cells = [cells[c] for c in sorted(cells)]
    total = math.prod(math.factorial(len(cell)) for cell in ordered_cells)
    if total > perm_cap:
        raise CapExceededError(
            f"canonical form would scan {total} orderings (cap {perm_cap})"
        )
    best: tuple[tuple[int, int], ...] | None = None
    position = [0] * (g.n + 1)

    def assign(cell_idx: int):
        nonlocal best
        if cell_idx == len(ordered_cells):
            relabeled = sorted(
                (position[u], position[v]) if position[u] < position[v] else (position[v], position[u])
                for u, v in g.edges
            )
            cand = tuple(relabeled)
            if best is None or cand < best:
                best = cand
            return
        cell = ordered_cells[cell_idx]
        start = 1 + sum(len(c) for c in ordered_cells[:cell_idx])
        for perm in permutations(cell):
            for offset, v in enumerate(perm):
                position[v] = start + offset
            assign(cell_idx + 1)

    assign(0)
    assert best is not None
    return best


def is_isomorphic(g1: SimpleGraph, g2: SimpleGraph) -> bool:
    if g1.n != g2.n or g1.m != g2.m:
        return False
    return canonical_form(g1) == canonical_form(g2)
