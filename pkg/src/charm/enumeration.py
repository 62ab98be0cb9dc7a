"""Brute-force enumeration primitives.

These are deliberately simple and serve as the independent oracles that the
reduction-based solver is checked against. Internally matchings and circuits
are handled as bitmasks over ``g.edges`` indices; the public functions return
frozensets and :class:`Circuit` objects.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import islice
from typing import Iterable, Iterator, Optional, Sequence

from .errors import EdgeNotInGraph
from .graph import Circuit, CubicGraph, Edge, check_factor, edge


def edge_mask(g: CubicGraph, edges: Iterable[Edge]) -> int:
    idx = g.edge_index
    m = 0
    for e in edges:
        m |= 1 << idx[edge(*e)]
    return m


def mask_edges(g: CubicGraph, mask: int) -> frozenset[Edge]:
    es = g.edges
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(es[i])
        mask >>= 1
        i += 1
    return frozenset(out)


def matching_masks(g: CubicGraph, through: Optional[Edge] = None) -> list[int]:
    """All perfect matchings as edge bitmasks, in backtracking order."""
    n = g.n
    adj = g.adj
    idx = g.edge_index
    eid = [{w: idx[edge(v, w)] for w in adj[v]} for v in range(n)]
    full = (1 << n) - 1
    covered0, m0 = 0, 0
    if through is not None:
        u, v = g.check_edge(through)
        covered0 = (1 << u) | (1 << v)
        m0 = 1 << idx[(u, v)]
    out: list[int] = []

    def rec(covered: int, m: int) -> None:
        if covered == full:
            out.append(m)
            return
        low = ~covered & (covered + 1)
        v = low.bit_length() - 1
        for w in adj[v]:
            if not (covered >> w) & 1:
                rec(covered | low | (1 << w), m | (1 << eid[v][w]))

    rec(covered0, m0)
    return out


def enumerate_perfect_matchings(g: CubicGraph, through: Optional[Edge] = None) -> list[frozenset[Edge]]:
    """Every perfect matching of ``g`` (containing ``through`` if given).

    Backtracks over the lowest-indexed uncovered vertex, so the order is
    deterministic.
    """
    return [mask_edges(g, m) for m in matching_masks(g, through)]


# ------------------------------------------------------------- circuits


def enumerate_circuits(g: CubicGraph) -> list[Circuit]:
    """All circuits of ``g``, sorted by length then vertex sequence."""
    adj = g.adj
    found = []
    for s in range(g.n):
        path = [s]
        on_path = {s}

        def dfs(v):
            for w in adj[v]:
                if w == s:
                    if len(path) >= 3 and path[1] < path[-1]:
                        found.append(tuple(path))
                elif w > s and w not in on_path:
                    path.append(w)
                    on_path.add(w)
                    dfs(w)
                    path.pop()
                    on_path.discard(w)

        dfs(s)
    cs = [Circuit(p) for p in found]
    cs.sort(key=lambda c: (len(c), c.vertices))
    return cs


def enumerate_disjoint_circuit_collections(
    g: CubicGraph, max_count: Optional[int] = None, circuits: Optional[Sequence[Circuit]] = None
) -> Iterator[tuple[Circuit, ...]]:
    """Yield every non-empty set of pairwise vertex-disjoint circuits once.

    ``max_count`` caps the number of collections emitted.
    """
    cs = list(circuits) if circuits is not None else enumerate_circuits(g)
    if max_count is not None and max_count <= 0:
        return
    vmask = []
    for c in cs:
        m = 0
        for v in c.vertices:
            m |= 1 << v
        vmask.append(m)
    chosen: list[int] = []

    def rec(start: int, used: int):
        for i in range(start, len(cs)):
            if vmask[i] & used:
                continue
            chosen.append(i)
            yield tuple(cs[j] for j in chosen)
            yield from rec(i + 1, used | vmask[i])
            chosen.pop()

    yield from islice(rec(0, 0), max_count)


def circuits_from_one_plus_factor(g: CubicGraph, f: Iterable[Edge]) -> tuple[Circuit, ...]:
    """Circuit components of ``g`` minus the 1+-factor ``f``."""
    f = check_factor(g, f)
    rest = g.edge_set - f
    nbrs: dict[int, list[int]] = {}
    for u, v in rest:
        nbrs.setdefault(u, []).append(v)
        nbrs.setdefault(v, []).append(u)
    seen: set[int] = set()
    out = []
    for s in sorted(nbrs):
        if s in seen:
            continue
        comp = [s]
        seen.add(s)
        stack = [s]
        while stack:
            x = stack.pop()
            for y in nbrs[x]:
                if y not in seen:
                    seen.add(y)
                    comp.append(y)
                    stack.append(y)
        if all(len(nbrs[x]) == 2 for x in comp):
            members = set(comp)
            out.append(Circuit.from_edges([e for e in rest if e[0] in members]))
    return tuple(sorted(out, key=lambda c: c.vertices))


# ----------------------------------------------------------- subgraphs


@dataclass(frozen=True)
class Subgraph:
    """Spanning subgraph: all ``n`` vertices kept, only ``edges`` retained."""

    n: int
    edges: frozenset

    def components(self) -> list[list[int]]:
        nbrs: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            comp, stack = [s], [s]
            while stack:
                x = stack.pop()
                for y in nbrs[x]:
                    if not seen[y]:
                        seen[y] = True
                        comp.append(y)
                        stack.append(y)
            comps.append(comp)
        return comps


def complement_subgraph(g: CubicGraph, edge_sets: Iterable[Iterable[Edge]]) -> Subgraph:
    removed = set()
    for es in edge_sets:
        for e in es:
            u, v = e
            if not g.has_edge(u, v):
                raise EdgeNotInGraph(f"{tuple(e)} is not an edge of the graph")
            removed.add(edge(u, v))
    return Subgraph(g.n, g.edge_set - frozenset(removed))


def is_acyclic(sub: Subgraph) -> bool:
    # a forest has exactly n - (#components) edges
    return len(sub.edges) == sub.n - len(sub.components())


def component_orders(sub: Subgraph, ignore_isolated: bool = False) -> Counter:
    sizes = Counter(len(c) for c in sub.components())
    if ignore_isolated:
        sizes.pop(1, None)
    return sizes


# ------------------------------------------------------ hamiltonicity


def hamiltonian_circuit(g: CubicGraph) -> Optional[Circuit]:
    """A spanning circuit of ``g`` found by depth-first search, or None."""
    n = g.n
    adj = g.adj
    path = [0]
    used = 1

    def rec(v: int) -> bool:
        nonlocal used
        if len(path) == n:
            return 0 in adj[v]
        for w in adj[v]:
            if not (used >> w) & 1:
                used |= 1 << w
                path.append(w)
                if rec(w):
                    return True
                path.pop()
                used &= ~(1 << w)
        return False

    return Circuit(tuple(path)) if rec(0) else None


def proper_edge_colourings(g: CubicGraph) -> Iterator[tuple[int, ...]]:
    """Every proper 3-edge-colouring, as a colour per edge of ``g.edges``."""
    edges = g.edges
    m = len(edges)
    used = [0] * g.n  # colour bitmask per vertex
    colour = [0] * m

    def rec(i: int):
        if i == m:
            yield tuple(colour)
            return
        u, v = edges[i]
        free = ~(used[u] | used[v]) & 0b111
        for c in range(3):
            if (free >> c) & 1:
                bit = 1 << c
                used[u] |= bit
                used[v] |= bit
                colour[i] = c
                yield from rec(i + 1)
                used[u] &= ~bit
                used[v] &= ~bit

    yield from rec(0)
