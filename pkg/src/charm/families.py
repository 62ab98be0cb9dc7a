"""Klee graphs, Klee ladders, ladders, Möbius ladders and quasi-ladders.

A Klee graph is K4 or is obtained from a smaller Klee graph by replacing a
vertex with a triangle. Recognition contracts triangles greedily: in a Klee
graph on six or more vertices all triangles are vertex-disjoint, so the
contraction order does not matter and any dead end is a definite rejection.

Labelling of the constructed families (``n`` vertices, grid of ``k`` columns):

* grid column ``i`` (0-based) has top vertex ``2i`` and bottom vertex ``2i+1``,
  joined by a rung; consecutive tops and consecutive bottoms are joined.
* Klee ladder ``KL_n``: ``k = (n - 2) / 2`` columns, ``u = n - 2`` is adjacent
  to the first column and ``v = n - 1`` to the last column, and ``uv`` is an
  edge.
* ``L_n``, ``ML_n``, ``QL_n``: ``k = n/2 - 2`` columns, then ``u'1, u'2`` =
  ``n-4, n-3`` attached to the first column (top, bottom) and ``v'1, v'2`` =
  ``n-2, n-1`` attached to the last column, closed by a 4-cycle on these four
  vertices as described in :func:`make_family`.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .canon import canonical_form
from .enumeration import enumerate_perfect_matchings
from .errors import BadIndex, BadSize, ContractionNotSimple, NotATriangle, NotKlee, NotKleeLadder
from .graph import Circuit, CubicGraph, Edge, as_circuit, edge, from_edges


class Kind(str, enum.Enum):
    KLEE_LADDER = "KleeLadder"
    LADDER = "Ladder"
    MOEBIUS_LADDER = "MoebiusLadder"
    QUASI_LADDER = "QuasiLadder"
    NONE = "None"


@dataclass(frozen=True)
class LadderFamily:
    kind: Kind
    k: int = 0


@dataclass(frozen=True)
class KleeCertificate:
    """Expansion history from K4 up to the certified graph.

    ``expansion_history[i] = (size, vertex)``: expand ``vertex`` of the current graph,
    which has ``size`` vertices. Replaying from :data:`K4` gives a graph
    equal to the certified one under :attr:`isomorphism`
    (``isomorphism[v]`` is the replay-label of input vertex ``v``).
    """

    expansion_history: tuple[tuple[int, int], ...]
    isomorphism: tuple[int, ...]

    def replay(self) -> CubicGraph:
        g = K4
        for size, v in self.expansion_history:
            assert g.n == size
            g = expand_vertex(g, v)
        return g


K4 = from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])


# ------------------------------------------------------------- surgery


def expand_vertex(g: CubicGraph, v: int) -> CubicGraph:
    """Replace ``v`` by a triangle ``{v, n, n+1}``.

    With ``a < b < c`` the old neighbours of ``v``: ``v`` keeps ``a``, the new
    vertex ``n`` takes ``b`` and ``n + 1`` takes ``c``.
    """
    if not 0 <= v < g.n:
        raise BadIndex(f"vertex {v} not in graph of order {g.n}")
    n = g.n
    a, b, c = g.adj[v]
    edges = [e for e in g.edges if e not in (edge(v, b), edge(v, c))]
    edges += [(n, b), (n + 1, c), (v, n), (v, n + 1), (n, n + 1)]
    return from_edges(n + 2, edges)


def _contract(g: CubicGraph, t) -> tuple[CubicGraph, list[int]]:
    t = as_circuit(t)
    if len(t) != 3:
        raise NotATriangle(f"{t.vertices} is not a triangle")
    t.validate(g)
    if g.n < 6:
        raise ContractionNotSimple("contracting a triangle of K4 leaves a multigraph")
    tri = set(t.vertices)
    outside = [next(w for w in g.adj[x] if w not in tri) for x in t.vertices]
    if len(set(outside)) != 3:
        raise ContractionNotSimple(f"triangle {t.vertices} has repeated outside neighbours")
    keep = t.vertices[0]  # smallest vertex of the triangle
    mapping = [0] * g.n
    nxt = 0
    for x in range(g.n):
        if x in tri and x != keep:
            continue
        mapping[x] = nxt
        nxt += 1
    for x in tri:
        mapping[x] = mapping[keep]
    edges = {edge(mapping[x], mapping[y]) for x, y in g.edges if not (x in tri and y in tri)}
    return from_edges(g.n - 2, edges), mapping


def contract_triangle(g: CubicGraph, t) -> CubicGraph:
    """Collapse triangle ``t`` to a single vertex (the inverse of :func:`expand_vertex`)."""
    return _contract(g, t)[0]


def triangles(g: CubicGraph) -> list[Circuit]:
    out = []
    for u, v in g.edges:
        for w in g.adj[u]:
            if w > v and w in g.adj[v]:
                out.append(Circuit((u, v, w)))
    return sorted(out, key=lambda c: c.vertices)


# --------------------------------------------------------- recognition


@lru_cache(maxsize=4096)
def is_klee(g: CubicGraph) -> Optional[KleeCertificate]:
    """A certificate if ``g`` is a Klee graph, else None."""
    tower = [g]
    maps = []
    cur = g
    while cur.n > 4:
        tris = triangles(cur)
        if not tris:
            return None
        try:
            nxt, mapping = _contract(cur, tris[0])
        except ContractionNotSimple:
            return None
        tower.append(nxt)
        maps.append((tris[0], mapping))
        cur = nxt
    if cur.n != 4:
        return None
    # replay upward, tracking an explicit isomorphism onto the replayed graph
    phi = list(range(4))  # K4 on 0..3 is unique, so the bottom graph equals K4
    replay = K4
    steps = []
    for level in range(len(maps) - 1, -1, -1):
        tri, mapping = maps[level]
        upper = tower[level]
        w = mapping[tri.vertices[0]]
        r = phi[w]
        steps.append((replay.n, r))
        a, b, c = replay.adj[r]
        size = replay.n
        replay = expand_vertex(replay, r)
        slot = {a: r, b: size, c: size + 1}
        tri_set = set(tri.vertices)
        new_phi = [0] * upper.n
        for x in range(upper.n):
            if x in tri_set:
                out = next(y for y in upper.adj[x] if y not in tri_set)
                new_phi[x] = slot[phi[mapping[out]]]
            else:
                new_phi[x] = phi[mapping[x]]
        phi = new_phi
    return KleeCertificate(tuple(steps), tuple(phi))


def klee_coloring(g: CubicGraph) -> tuple[frozenset[Edge], frozenset[Edge], frozenset[Edge]]:
    """The unique 3-edge-colouring of a Klee graph, as three perfect matchings.

    K4 is coloured by its three perfect matchings and each expansion step
    extends the colouring in the only possible way.
    """
    cert = is_klee(g)
    if cert is None:
        raise NotKlee("graph is not a Klee graph")
    colour = {e: i for i, m in enumerate([((0, 1), (2, 3)), ((0, 2), (1, 3)), ((0, 3), (1, 2))]) for e in m}
    cur = K4
    for size, r in cert.expansion_history:
        a, b, c = cur.adj[r]
        ca, cb, cc = colour[edge(r, a)], colour[edge(r, b)], colour[edge(r, c)]
        del colour[edge(r, b)], colour[edge(r, c)]
        colour[edge(size, b)] = cb
        colour[edge(size + 1, c)] = cc
        colour[edge(r, size)] = cc
        colour[edge(r, size + 1)] = cb
        colour[edge(size, size + 1)] = ca
        cur = expand_vertex(cur, r)
    inv = {y: x for x, y in enumerate(cert.isomorphism)}
    classes = [set(), set(), set()]
    for (x, y), c in colour.items():
        classes[c].add(edge(inv[x], inv[y]))
    return tuple(frozenset(c) for c in classes)


# ----------------------------------------------------------- families


def _grid_edges(k: int) -> list[Edge]:
    edges = [(2 * i, 2 * i + 1) for i in range(k)]
    for i in range(k - 1):
        edges += [(2 * i, 2 * i + 2), (2 * i + 1, 2 * i + 3)]
    return edges


def make_family(kind, size: int) -> CubicGraph:
    """Construct ``KL_size``, ``L_size``, ``ML_size`` or ``QL_size``.

    The last three start from the grid of ``KL_{size-2}`` and attach
    ``u'1, u'2, v'1, v'2`` closed by K4 minus a perfect matching: the ladder
    misses ``u'1v'2, u'2v'1``, the Möbius ladder misses ``u'1v'1, u'2v'2``
    and the quasi-ladder misses ``u'1u'2, v'1v'2``.
    """
    kind = Kind(kind)
    if size % 2:
        raise BadSize(f"size must be even, got {size}")
    if kind is Kind.KLEE_LADDER:
        if size < 4:
            raise BadSize("Klee ladders start at KL_4")
        k = (size - 2) // 2
        u, v = size - 2, size - 1
        edges = _grid_edges(k) + [(u, 0), (u, 1), (v, 2 * k - 2), (v, 2 * k - 1), (u, v)]
        return from_edges(size, edges)
    if kind is Kind.NONE:
        raise BadSize("no construction for kind None")
    if size < 8:
        raise BadSize(f"{kind.value} needs size >= 8")
    k = size // 2 - 2
    u1, u2, v1, v2 = size - 4, size - 3, size - 2, size - 1
    edges = _grid_edges(k) + [(u1, 0), (u2, 1), (v1, 2 * k - 2), (v2, 2 * k - 1)]
    closing = {
        Kind.LADDER: [(u1, u2), (v1, v2), (u1, v1), (u2, v2)],
        Kind.MOEBIUS_LADDER: [(u1, u2), (v1, v2), (u1, v2), (u2, v1)],
        Kind.QUASI_LADDER: [(u1, v1), (u1, v2), (u2, v1), (u2, v2)],
    }[kind]
    return from_edges(size, edges + closing)


@lru_cache(maxsize=None)
def _family_form(kind: Kind, size: int) -> bytes:
    return canonical_form(make_family(kind, size))


def classify_ladder_family(g: CubicGraph) -> LadderFamily:
    form = None
    for kind in (Kind.KLEE_LADDER, Kind.LADDER, Kind.MOEBIUS_LADDER, Kind.QUASI_LADDER):
        if kind is not Kind.KLEE_LADDER and g.n < 8:
            continue
        if form is None:
            form = canonical_form(g)
        if _family_form(kind, g.n) == form:
            return LadderFamily(kind, g.n // 2)
    return LadderFamily(Kind.NONE, 0)


def klee_ladder_special_edge(g: CubicGraph) -> tuple[Edge, frozenset[Edge]]:
    """The least edge lying in exactly one perfect matching, and that matching."""
    fam = classify_ladder_family(g)
    if fam.kind is not Kind.KLEE_LADDER or g.n < 6:
        raise NotKleeLadder("graph is not a Klee ladder on at least 6 vertices")
    for e in g.edges:
        ms = enumerate_perfect_matchings(g, e)
        if len(ms) == 1:
            return e, ms[0]
    raise NotKleeLadder("no edge lies in a unique perfect matching")
