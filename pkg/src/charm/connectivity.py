"""Edge cuts, cyclic edge-connectivity, girth and line-graph distance."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Optional

from .graph import CubicGraph, Edge, edge


@dataclass(frozen=True)
class EdgeCut:
    side_a: frozenset[int]
    side_b: frozenset[int]
    crossing: tuple[Edge, ...]
    cyclic: bool

    def __len__(self):
        return len(self.crossing)


def _components(nb: list[int], full: int) -> list[int]:
    comps = []
    remaining = full
    while remaining:
        comp = frontier = remaining & -remaining
        while frontier:
            v = frontier.bit_length() - 1
            frontier ^= 1 << v
            new = nb[v] & ~comp
            comp |= new
            frontier |= new
        comps.append(comp)
        remaining &= ~comp
    return comps


def _bits(mask: int) -> frozenset[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return frozenset(out)


def _has_cycle(comp: int, endpoint_count: dict[int, int]) -> bool:
    # In a cubic graph a component with c vertices and d cut-edge endpoints
    # has (3c - d) / 2 edges, so it contains a circuit iff c >= d.
    c = bin(comp).count("1")
    d = sum(k for v, k in endpoint_count.items() if (comp >> v) & 1)
    return c >= d


def _cut_of_size(g: CubicGraph, size: int) -> Optional[EdgeCut]:
    n = g.n
    full = (1 << n) - 1
    base = [0] * n
    for v, nbrs in enumerate(g.adj):
        for w in nbrs:
            base[v] |= 1 << w
    edges = g.edges
    for combo in combinations(range(len(edges)), size):
        nb = base[:]
        ends: dict[int, int] = {}
        for i in combo:
            u, v = edges[i]
            nb[u] &= ~(1 << v)
            nb[v] &= ~(1 << u)
            ends[u] = ends.get(u, 0) + 1
            ends[v] = ends.get(v, 0) + 1
        comps = _components(nb, full)
        if len(comps) < 2:
            continue
        cyclic = [c for c in comps if _has_cycle(c, ends)]
        if len(cyclic) >= 2:
            side = _bits(cyclic[0])
            crossing = tuple(edges[i] for i in combo)
            return EdgeCut(side, frozenset(range(n)) - side, crossing, True)
    return None


@lru_cache(maxsize=4096)
def _min_cut_cached(g: CubicGraph, max_size: int) -> Optional[EdgeCut]:
    for s in range(1, max_size + 1):
        cut = _cut_of_size(g, s)
        if cut is not None:
            return cut
    return None


def find_cyclic_edge_cut(g: CubicGraph, max_size: int) -> Optional[EdgeCut]:
    """A minimum cyclic edge-cut of size at most ``max_size``, or None.

    Candidate edge sets are tried by size and then lexicographically, so the
    returned cut has the lexicographically least crossing set among minimum
    cuts. Removing a candidate set that leaves two components containing
    circuits proves a cyclic cut of at most that size; scanning sizes upward
    makes the first hit minimal.
    """
    if max_size < 1:
        raise ValueError("max_size must be positive")
    return _min_cut_cached(g, max_size)


def cut_between(g: CubicGraph, side: frozenset[int]) -> EdgeCut:
    """The edge-cut separating ``side`` from the rest, with its cyclic flag."""
    side = frozenset(side)
    other = frozenset(range(g.n)) - side
    crossing = tuple(sorted(edge(u, w) for u in side for w in g.adj[u] if w not in side))
    return EdgeCut(side, other, crossing, _induces_cycle(g, side) and _induces_cycle(g, other))


def _induces_cycle(g: CubicGraph, vs: frozenset[int]) -> bool:
    if not vs:
        return False
    inner = sum(1 for u in vs for w in g.adj[u] if w in vs) // 2
    # cycle exists iff edges > vertices - components
    seen: set[int] = set()
    comps = 0
    for s in vs:
        if s in seen:
            continue
        comps += 1
        stack = [s]
        seen.add(s)
        while stack:
            x = stack.pop()
            for y in g.adj[x]:
                if y in vs and y not in seen:
                    seen.add(y)
                    stack.append(y)
    return inner > len(vs) - comps


def _has_two_disjoint_circuits(g: CubicGraph) -> bool:
    from .enumeration import enumerate_circuits

    cs = enumerate_circuits(g)
    return any(a.vertex_set.isdisjoint(b.vertex_set) for a, b in combinations(cs, 2))


@lru_cache(maxsize=4096)
def cyclic_edge_connectivity(g: CubicGraph) -> int:
    """Smallest size of a cyclic edge-cut; ``|E| - |V| + 1`` if there is none."""
    m = len(g.edges)
    fallback = m - g.n + 1
    gi = girth(g)
    # the boundary of a shortest circuit is a cut of size girth; it is cyclic
    # unless the graph is tiny, where we check for disjoint circuits directly
    if g.n <= 2 * gi - 2 and not _has_two_disjoint_circuits(g):
        return fallback
    for s in range(1, m + 1):
        if _cut_of_size(g, s) is not None:
            return s
    return fallback


def is_cyclically_k_edge_connected(g: CubicGraph, k: int) -> bool:
    if k <= 1:
        return True
    return find_cyclic_edge_cut(g, k - 1) is None


def is_bridgeless(g: CubicGraph) -> bool:
    return find_cyclic_edge_cut(g, 1) is None


def girth(g: CubicGraph) -> int:
    best = g.n + 1
    adj = g.adj
    for s in range(g.n):
        dist = {s: 0}
        parent = {s: -1}
        q = deque([s])
        while q:
            v = q.popleft()
            if 2 * dist[v] >= best:
                break
            for w in adj[v]:
                if w not in dist:
                    dist[w] = dist[v] + 1
                    parent[w] = v
                    q.append(w)
                elif parent[v] != w:
                    best = min(best, dist[v] + dist[w] + 1)
    return best


def edge_distance(g: CubicGraph, e: Edge, f: Edge) -> int:
    """Distance between ``e`` and ``f`` in the line graph of ``g``."""
    e = g.check_edge(e)
    f = g.check_edge(f)
    return edge_distances(g, e).get(f)


def edge_distances(g: CubicGraph, e: Edge) -> dict[Edge, int]:
    e = g.check_edge(e)
    dist = {e: 0}
    q = deque([e])
    while q:
        cur = q.popleft()
        for x in cur:
            for y in g.adj[x]:
                f = edge(x, y)
                if f not in dist:
                    dist[f] = dist[cur] + 1
                    q.append(f)
    return dist
