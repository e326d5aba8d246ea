"""Positive dependency graph and enumeration of the loops contained in I.

A non-empty literal set is a loop when its induced subgraph is strongly
connected; every singleton qualifies via the length-0 path.  Enumeration
works per strongly connected component of the subgraph induced by I, since
a loop can never cross two components.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .core import BudgetExceededError, Interpretation, Literal, literal_key
from .grounder import GroundProgram

DEFAULT_LOOP_CAP = 10_000


@dataclass(frozen=True)
class DepGraph:
    vertices: tuple[Literal, ...]
    edges: frozenset[tuple[Literal, Literal]]

    def __post_init__(self) -> None:
        adj: dict[Literal, set[Literal]] = {}
        for a, b in self.edges:
            adj.setdefault(a, set()).add(b)
        object.__setattr__(self, "_adj", {k: frozenset(v) for k, v in adj.items()})

    def successors(self, v: Literal) -> frozenset[Literal]:
        return getattr(self, "_adj").get(v, frozenset())


@dataclass(frozen=True)
class Loop:
    literals: frozenset[Literal]

    def __post_init__(self) -> None:
        if not self.literals:
            raise ValueError("loops are non-empty")

    def sorted_literals(self) -> tuple[Literal, ...]:
        return tuple(sorted(self.literals, key=literal_key))

    def __str__(self) -> str:
        return "{" + ", ".join(str(l) for l in self.sorted_literals()) + "}"


def dep_graph(gp: GroundProgram, interp: Interpretation) -> DepGraph:
    """Vertices are the literals of ground(P) and I; an edge (a, b) exists when
    some ground rule has a in its head and b in its positive body."""
    vertices: set[Literal] = set(interp.literals)
    edges: set[tuple[Literal, Literal]] = set()
    for gr in gp.rules:
        vertices.update(gr.rule.literals())
        for h in gr.rule.head:
            for b in gr.rule.pos_literals:
                edges.add((h, b))
    return DepGraph(
        vertices=tuple(sorted(vertices, key=literal_key)),
        edges=frozenset(edges),
    )


def _strongly_connected(members: frozenset[Literal], graph: DepGraph) -> bool:
    """Strong connectivity of the subgraph induced by `members`."""
    if len(members) == 1:
        return True
    start = next(iter(members))

    def reach(edges_of) -> set[Literal]:
        seen = {start}
        todo = [start]
        while todo:
            v = todo.pop()
            for w in edges_of(v):
                if w in members and w not in seen:
                    seen.add(w)
                    todo.append(w)
        return seen

    if reach(graph.successors) != members:
        return False
    reverse: dict[Literal, set[Literal]] = {v: set() for v in members}
    for a, b in graph.edges:
        if a in members and b in members:
            reverse[b].add(a)
    return reach(lambda v: reverse[v]) == members


def is_loop(literals: Iterable[Literal], graph: DepGraph) -> bool:
    members = frozenset(literals)
    if not members:
        return False
    return _strongly_connected(members, graph)


def _sccs(vertices: list[Literal], graph: DepGraph, restrict: frozenset[Literal]) -> Iterator[set[Literal]]:
    """Tarjan-style SCC decomposition of the subgraph induced by `restrict`."""
    index: dict[Literal, int] = {}
    stack: list[Literal] = []
    boundaries: list[int] = []
    identified: set[Literal] = set()

    def dfs(v: Literal) -> Iterator[set[Literal]]:
        index[v] = len(stack)
        stack.append(v)
        boundaries.append(index[v])
        for w in graph.successors(v):
            if w not in restrict:
                continue
            if w not in index:
                yield from dfs(w)
            elif w not in identified:
                while index[w] < boundaries[-1]:
                    boundaries.pop()
        if boundaries[-1] == index[v]:
            boundaries.pop()
            scc = set(stack[index[v]:])
            del stack[index[v]:]
            identified.update(scc)
            yield scc

    for v in vertices:
        if v not in index:
            yield from dfs(v)


def loops_within(
    interp: Interpretation, graph: DepGraph, cap: int = DEFAULT_LOOP_CAP
) -> list[Loop]:
    """All loops contained in I, in a deterministic order.

    Enumerates the non-empty subsets of each SCC of the subgraph induced by I
    and keeps those whose induced subgraph is strongly connected.
    """
    members = frozenset(interp.literals)
    ordered = sorted(members, key=literal_key)
    found: list[Loop] = []
    for scc in _sccs(ordered, graph, members):
        scc_sorted = sorted(scc, key=literal_key)
        n = len(scc_sorted)
        for mask in range(1, 1 << n):
            subset = frozenset(scc_sorted[i] for i in range(n) if mask >> i & 1)
            if _strongly_connected(subset, graph):
                found.append(Loop(subset))
                if len(found) > cap:
                    raise BudgetExceededError(
                        f"more than {cap} loops contained in the interpretation"
                    )
    found.sort(key=lambda lp: (len(lp.literals), tuple(literal_key(l) for l in lp.sorted_literals())))
    return found
