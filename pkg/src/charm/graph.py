"""Cubic graphs, edges, matchings and circuits.

Edges are plain ``(u, v)`` tuples with ``u < v``; perfect matchings and
1+-factors are frozensets of such tuples. Only :class:`CubicGraph` and
:class:`Circuit` get their own classes since they carry invariants worth
normalizing once.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import (
    BadIndex,
    CircuitsNotDisjoint,
    Disconnected,
    EdgeNotInGraph,
    InvalidCircuit,
    InvalidFactor,
    InvalidMatching,
    NotCubic,
    NotSimple,
)

Edge = tuple[int, int]
Matching = frozenset  # frozenset[Edge]


def edge(u: int, v: int) -> Edge:
    """Canonical (sorted) form of the edge ``uv``."""
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class CubicGraph:
    """A connected simple 3-regular graph on vertices ``0..n-1``.

    ``adj[v]`` is the sorted triple of neighbours of ``v``. Instances are
    validated on construction and never mutated afterwards.
    """

    adj: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        n = len(self.adj)
        norm = []
        for v, nbrs in enumerate(self.adj):
            nbrs = tuple(nbrs)
            if len(nbrs) != 3:
                raise NotCubic(f"vertex {v} has degree {len(nbrs)}")
            for w in nbrs:
                if not isinstance(w, int) or not 0 <= w < n:
                    raise BadIndex(f"vertex {v} lists neighbour {w!r} outside 0..{n - 1}")
                if w == v:
                    raise NotSimple(f"loop at vertex {v}")
            if len(set(nbrs)) != 3:
                raise NotSimple(f"parallel edges at vertex {v}")
            norm.append(tuple(sorted(nbrs)))
        for v, nbrs in enumerate(norm):
            for w in nbrs:
                if v not in norm[w]:
                    raise NotSimple(f"adjacency not symmetric: {v} -> {w}")
        if n < 4 or n % 2:
            raise NotCubic(f"a cubic graph needs an even order >= 4, got {n}")
        seen = {0}
        stack = [0]
        while stack:
            v = stack.pop()
            for w in norm[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        if len(seen) != n:
            raise Disconnected(f"graph has {n} vertices but only {len(seen)} reachable from 0")
        object.__setattr__(self, "adj", tuple(norm))

    @property
    def n(self) -> int:
        return len(self.adj)

    @cached_property
    def edges(self) -> tuple[Edge, ...]:
        return tuple(sorted((u, v) for u, nb in enumerate(self.adj) for v in nb if u < v))

    @cached_property
    def edge_index(self) -> dict[Edge, int]:
        return {e: i for i, e in enumerate(self.edges)}

    @cached_property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and v in self.adj[u]

    def neighbors(self, v: int) -> tuple[int, int, int]:
        return self.adj[v]

    def check_edge(self, e: Sequence[int]) -> Edge:
        """Return ``e`` in canonical form, raising if it is not an edge."""
        u, v = e
        if not self.has_edge(u, v):
            raise EdgeNotInGraph(f"{tuple(e)} is not an edge of the graph")
        return edge(u, v)

    def relabel(self, perm: Sequence[int]) -> "CubicGraph":
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        new = [None] * self.n
        for v, nb in enumerate(self.adj):
            new[perm[v]] = tuple(perm[w] for w in nb)
        return CubicGraph(tuple(new))

    def __repr__(self):
        return f"CubicGraph(n={self.n}, edges={list(self.edges)})"


def from_adjacency(lists: Sequence[Iterable[int]]) -> CubicGraph:
    """Build a validated :class:`CubicGraph` from per-vertex neighbour lists."""
    return CubicGraph(tuple(tuple(nb) for nb in lists))


def from_edges(n: int, edges: Iterable[Sequence[int]]) -> CubicGraph:
    lists: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise BadIndex(f"edge {(u, v)} outside 0..{n - 1}")
        lists[u].append(v)
        lists[v].append(u)
    return from_adjacency(lists)


# ---------------------------------------------------------------- circuits


@dataclass(frozen=True)
class Circuit:
    """A cycle given by its cyclic vertex sequence.

    The sequence is stored in a canonical rotation and direction (smallest
    vertex first, then its smaller cycle neighbour), so two circuits are equal
    iff they have the same vertex cycle.
    """

    vertices: tuple[int, ...]

    def __post_init__(self):
        vs = tuple(self.vertices)
        if len(vs) < 3:
            raise InvalidCircuit(f"a circuit needs at least 3 vertices, got {vs}")
        if len(set(vs)) != len(vs):
            raise InvalidCircuit(f"repeated vertex in {vs}")
        i = vs.index(min(vs))
        vs = vs[i:] + vs[:i]
        if vs[-1] < vs[1]:
            vs = (vs[0],) + tuple(reversed(vs[1:]))
        object.__setattr__(self, "vertices", vs)

    def __len__(self):
        return len(self.vertices)

    @cached_property
    def edges(self) -> frozenset[Edge]:
        vs = self.vertices
        return frozenset(edge(vs[i - 1], vs[i]) for i in range(len(vs)))

    @cached_property
    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.vertices)

    def validate(self, g: CubicGraph) -> "Circuit":
        for u, v in self.edges:
            if not g.has_edge(u, v):
                raise InvalidCircuit(f"{(u, v)} of circuit {self.vertices} is not an edge")
        return self

    @classmethod
    def from_edges(cls, edges: Iterable[Edge]) -> "Circuit":
        """Reassemble a circuit from an unordered connected 2-regular edge set."""
        edges = list(edges)
        nbrs: dict[int, list[int]] = {}
        for u, v in edges:
            nbrs.setdefault(u, []).append(v)
            nbrs.setdefault(v, []).append(u)
        if any(len(x) != 2 for x in nbrs.values()):
            raise InvalidCircuit("edge set is not 2-regular")
        start = min(nbrs)
        seq = [start]
        prev, cur = start, nbrs[start][0]
        while cur != start:
            seq.append(cur)
            a, b = nbrs[cur]
            prev, cur = cur, (b if a == prev else a)
        if len(seq) != len(nbrs):
            raise InvalidCircuit("edge set is not connected")
        return cls(tuple(seq))


CircuitCollection = tuple  # tuple[Circuit, ...]


def as_circuit(c) -> Circuit:
    return c if isinstance(c, Circuit) else Circuit(tuple(c))


def check_collection(g: CubicGraph, circuits: Iterable) -> tuple[Circuit, ...]:
    """Validate circuits against ``g`` and check pairwise vertex-disjointness."""
    out = tuple(as_circuit(c).validate(g) for c in circuits)
    used: set[int] = set()
    for c in out:
        if used & c.vertex_set:
            raise CircuitsNotDisjoint(f"circuit {c.vertices} meets an earlier circuit")
        used |= c.vertex_set
    return out


# ----------------------------------------------------------- matchings


def is_perfect_matching(g: CubicGraph, m: Iterable[Sequence[int]]) -> bool:
    covered = set()
    count = 0
    for u, v in m:
        if not g.has_edge(u, v) or u in covered or v in covered:
            return False
        covered.add(u)
        covered.add(v)
        count += 1
    return count * 2 == g.n


def check_matching(g: CubicGraph, m: Iterable[Sequence[int]]) -> frozenset[Edge]:
    m = frozenset(edge(u, v) for u, v in m)
    if not is_perfect_matching(g, m):
        raise InvalidMatching("edge set is not a perfect matching of the graph")
    return m


def hits_all(m: frozenset, circuits: Iterable[Circuit]) -> bool:
    """True iff every circuit contains at least one edge of ``m``."""
    return all(not m.isdisjoint(c.edges) for c in circuits)


def check_factor(g: CubicGraph, f: Iterable[Sequence[int]]) -> frozenset[Edge]:
    """Validate a 1+-factor: a set of edges touching every vertex."""
    f = frozenset(g.check_edge(e) for e in f)
    covered = {v for e in f for v in e}
    if len(covered) != g.n:
        missing = sorted(set(range(g.n)) - covered)
        raise InvalidFactor(f"vertices {missing} are not covered by the factor")
    return f


def complement(g: CubicGraph, edges: Iterable[Edge]) -> frozenset[Edge]:
    return g.edge_set - frozenset(edges)
