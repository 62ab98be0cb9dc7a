"""Canonical labelling of small cubic graphs.

Colour refinement followed by individualization of each vertex of the first
non-trivial cell. Every leaf of the search tree is visited (no automorphism
pruning); the canonical form is the lexicographically least relabelled edge
list. That is exponential in the worst case but fine for cubic graphs of a
few dozen vertices.
"""

from __future__ import annotations

from .graph import CubicGraph
from .io import write_graph6


def _refine(adj, cells):
    while True:
        cell_of = {}
        for i, c in enumerate(cells):
            for v in c:
                cell_of[v] = i
        new = []
        split = False
        for c in cells:
            if len(c) == 1:
                new.append(c)
                continue
            sig = {v: tuple(sorted(cell_of[w] for w in adj[v])) for v in c}
            keys = sorted(set(sig.values()))
            if len(keys) > 1:
                split = True
                for k in keys:
                    new.append([v for v in c if sig[v] == k])
            else:
                new.append(c)
        cells = new
        if not split:
            return cells


def canonical_labeling(g: CubicGraph) -> list[int]:
    """A permutation ``perm`` such that ``g.relabel(perm)`` is canonical."""
    adj = g.adj
    edges = g.edges
    best_cert = None
    best_perm = None

    def search(cells):
        nonlocal best_cert, best_perm
        cells = _refine(adj, cells)
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            pos = [0] * len(adj)
            for i, c in enumerate(cells):
                pos[c[0]] = i
            cert = sorted((pos[u], pos[v]) if pos[u] < pos[v] else (pos[v], pos[u]) for u, v in edges)
            if best_cert is None or cert < best_cert:
                best_cert, best_perm = cert, pos
            return
        cell = cells[target]
        for v in cell:
            rest = [w for w in cell if w != v]
            search(cells[:target] + [[v], rest] + cells[target + 1:])

    search([list(range(g.n))])
    return best_perm


def canonical_graph(g: CubicGraph) -> CubicGraph:
    return g.relabel(canonical_labeling(g))


def canonical_form(g: CubicGraph) -> bytes:
    """Byte string equal for two graphs iff they are isomorphic."""
    return write_graph6(canonical_graph(g)).encode("ascii")


def is_isomorphic(g: CubicGraph, h: CubicGraph) -> bool:
    if g.n != h.n:
        return False
    return canonical_form(g) == canonical_form(h)
