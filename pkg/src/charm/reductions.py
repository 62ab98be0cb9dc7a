"""Graph surgeries that shrink a cubic graph, with matching lifts and circuit rewrites.

Every surgery relabels the surviving vertices densely (in increasing order of
their old ids) and appends any new vertices at the end. The returned objects
carry the explicit ``vmap`` (old id -> new id, ``-1`` for deleted vertices),
so lifting never depends on index conventions.

Four families are provided:

* splitting along a cyclic 3-edge-cut into two graphs with hubs ``v'``/``v''``;
* replacing one side of a 4-edge-cut (a 4-circuit or a cyclic 4-cut) by an
  edge ``xy`` whose ends are joined to the cut vertices in a chosen pairing;
* the ``(ab:cd)_{uv}`` edge reduction (delete ``u, v``, add ``ab`` and ``cd``);
* smoothing two vertices of a 5-circuit.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional, Sequence

from .connectivity import EdgeCut, cut_between
from .enumeration import matching_masks, mask_edges
from .errors import (
    BadIndex,
    CircuitCollision,
    EdgeNotInGraph,
    IndexMismatch,
    InvalidMatching,
    NeighborsCollide,
    NotA4Circuit,
    NotA5Circuit,
    NotACyclicCut,
    PairingMismatch,
    ReductionError,
    TooManyCrossings,
    WouldCreateParallel,
    WrongCutSize,
)
from .graph import Circuit, CubicGraph, Edge, as_circuit, check_matching, edge, from_edges

FORMAT_VERSION = 1


def _dense_map(n: int, drop: Iterable[int]) -> tuple[int, ...]:
    drop = set(drop)
    out, nxt = [], 0
    for v in range(n):
        if v in drop:
            out.append(-1)
        else:
            out.append(nxt)
            nxt += 1
    return tuple(out)


def _inverse(vmap: Sequence[int], size: int) -> tuple[int, ...]:
    inv = [-1] * size
    for old, new in enumerate(vmap):
        if new >= 0:
            inv[new] = old
    return tuple(inv)


def _project(circuit: Circuit, vmap: Sequence[int], hub: dict[int, int], hub_edge: Optional[Edge]):
    """Image of ``circuit`` on a side graph.

    Edges inside the kept side are relabelled; each cut edge leaving kept
    vertex ``a`` becomes ``(vmap[a], hub[a])``; if exactly two hub vertices
    end up with degree one they are closed through ``hub_edge``. Returns the
    image circuits and the set of hub vertices used.
    """
    edges = []
    deg: dict[int, int] = {}
    for a, b in circuit.edges:
        ka, kb = vmap[a] >= 0, vmap[b] >= 0
        if ka and kb:
            edges.append(edge(vmap[a], vmap[b]))
        elif ka or kb:
            k = a if ka else b
            h = hub[k]
            edges.append(edge(vmap[k], h))
            deg[h] = deg.get(h, 0) + 1
    odd = sorted(h for h, d in deg.items() if d == 1)
    if odd:
        if hub_edge is None or sorted(odd) != sorted(hub_edge):
            raise CircuitCollision("circuit cannot be closed on this side")
        edges.append(edge(*hub_edge))
    if any(d > 2 for d in deg.values()):
        raise CircuitCollision("circuit uses a hub more than twice")
    if not edges:
        return (), frozenset()
    # split into connected pieces
    nbrs: dict[int, list[int]] = {}
    for a, b in edges:
        nbrs.setdefault(a, []).append(b)
        nbrs.setdefault(b, []).append(a)
    pieces = []
    seen: set[int] = set()
    for s in sorted(nbrs):
        if s in seen:
            continue
        comp = {s}
        stack = [s]
        while stack:
            x = stack.pop()
            for y in nbrs[x]:
                if y not in comp:
                    comp.add(y)
                    stack.append(y)
        seen |= comp
        pieces.append(Circuit.from_edges([e for e in edges if e[0] in comp]))
    return tuple(pieces), frozenset(deg)


def _disjoint(circuits: Sequence[Circuit]) -> bool:
    used: set[int] = set()
    for c in circuits:
        if used & c.vertex_set:
            return False
        used |= c.vertex_set
    return True


def _check_cut(g: CubicGraph, cut: EdgeCut, size: int) -> EdgeCut:
    if len(cut.crossing) != size:
        raise WrongCutSize(f"expected a {size}-edge-cut, got {len(cut.crossing)} edges")
    real = cut_between(g, cut.side_a)
    if set(real.crossing) != {edge(*e) for e in cut.crossing}:
        raise NotACyclicCut("crossing edges do not match the sides")
    if not real.cyclic:
        raise NotACyclicCut("one side of the cut is acyclic")
    return real


def _oriented(cut: EdgeCut, crossing: Sequence[Edge]) -> tuple[tuple[int, int], ...]:
    return tuple((a, b) if a in cut.side_a else (b, a) for a, b in crossing)


# ================================================================ 3-cuts


@dataclass(frozen=True)
class ThreeCutSplit:
    """``g`` cut along ``f_i = (a_i, b_i)``, ``a_i`` on side A, ``b_i`` on side B.

    ``g_prime`` is side A plus hub ``hub_prime`` joined to every ``a_i``;
    ``e_prime[i]`` is the image of ``f_i`` there. Likewise for side B.
    """

    source: CubicGraph
    crossing: tuple[tuple[int, int], ...]
    g_prime: CubicGraph
    g_dprime: CubicGraph
    vmap_prime: tuple[int, ...]
    vmap_dprime: tuple[int, ...]
    hub_prime: int
    hub_dprime: int
    e_prime: tuple[Edge, ...]
    e_dprime: tuple[Edge, ...]


def _hub_side(g: CubicGraph, keep: frozenset[int], ends: Sequence[int]):
    vmap = _dense_map(g.n, set(range(g.n)) - keep)
    hub = len(keep)
    edges = [edge(vmap[a], vmap[b]) for a, b in g.edges if a in keep and b in keep]
    attach = tuple(edge(vmap[a], hub) for a in ends)
    return from_edges(hub + 1, edges + list(attach)), vmap, hub, attach


def split_on_3cut(g: CubicGraph, cut: EdgeCut) -> ThreeCutSplit:
    """Split ``g`` along a cyclic 3-edge-cut into two smaller cubic graphs."""
    real = _check_cut(g, cut, 3)
    crossing = _oriented(real, [edge(*e) for e in cut.crossing])
    a_ends = [a for a, _ in crossing]
    b_ends = [b for _, b in crossing]
    if len(set(a_ends)) != 3 or len(set(b_ends)) != 3:
        raise WouldCreateParallel("cut edges share an endpoint (the graph has a 2-edge-cut)")
    gp, vp, hp, ep = _hub_side(g, real.side_a, a_ends)
    gd, vd, hd, ed = _hub_side(g, real.side_b, b_ends)
    return ThreeCutSplit(g, crossing, gp, gd, vp, vd, hp, hd, ep, ed)


def _used_index(m: frozenset, attach: Sequence[Edge]) -> int:
    hits = [i for i, e in enumerate(attach) if e in m]
    if len(hits) != 1:
        raise InvalidMatching("hub must be covered exactly once")
    return hits[0]


def lift_matching_3cut(split: ThreeCutSplit, m_prime, m_dprime, shared_index: Optional[int] = None) -> frozenset:
    """``M' + M'' + f_i - e'_i - e''_i`` for the cut index ``i`` both sides use."""
    mp = check_matching(split.g_prime, m_prime)
    md = check_matching(split.g_dprime, m_dprime)
    i = _used_index(mp, split.e_prime)
    j = _used_index(md, split.e_dprime)
    if i != j or (shared_index is not None and shared_index != i):
        raise IndexMismatch(f"side matchings use cut edges {i} and {j}")
    ip = _inverse(split.vmap_prime, split.g_prime.n)
    idd = _inverse(split.vmap_dprime, split.g_dprime.n)
    out = {edge(ip[a], ip[b]) for a, b in mp if split.hub_prime not in (a, b)}
    out |= {edge(idd[a], idd[b]) for a, b in md if split.hub_dprime not in (a, b)}
    out.add(edge(*split.crossing[i]))
    return check_matching(split.source, out)


def rewrite_circuits_3cut(split: ThreeCutSplit, circuits) -> tuple[tuple[Circuit, ...], tuple[Circuit, ...]]:
    """Route each circuit to its side; a crossing circuit is closed through both hubs."""
    circuits = [as_circuit(c) for c in circuits]
    cross = set(split.crossing)
    crossing = [c for c in circuits if any((a, b) in c.edges or (b, a) in c.edges for a, b in cross)]
    if len(crossing) > 1:
        raise TooManyCrossings("more than one circuit crosses a 3-edge-cut")
    hub_p = {a: split.hub_prime for a, _ in split.crossing}
    hub_d = {b: split.hub_dprime for _, b in split.crossing}
    side_p, side_d = [], []
    for c in circuits:
        side_p.extend(_project(c, split.vmap_prime, hub_p, None)[0])
        side_d.extend(_project(c, split.vmap_dprime, hub_d, None)[0])
    return tuple(side_p), tuple(side_d)


# ====================================================== 4-circuits, 4-cuts


@dataclass(frozen=True)
class FourCutSide:
    """One side of a 4-edge-cut with the other side replaced by an edge ``xy``.

    ``labels[k] = (kept end, removed end)`` of cut edge ``f_{k+1}``. ``x`` is
    joined to the kept ends of ``f_1`` and ``f_i`` and ``y`` to the other two.
    ``attach[k]`` is the image of ``f_{k+1}``.
    """

    source: CubicGraph
    graph: CubicGraph
    keep: frozenset[int]
    labels: tuple[tuple[int, int], ...]
    i: int
    vmap: tuple[int, ...]
    x: int
    y: int
    attach: tuple[Edge, ...]

    @property
    def xy(self) -> Edge:
        return (self.x, self.y)

    def hub_of(self, k: int) -> int:
        return self.x if k in (0, self.i - 1) else self.y


def build_side(g: CubicGraph, keep: frozenset[int], labels: Sequence[tuple[int, int]], i: int) -> FourCutSide:
    if i not in (2, 3, 4):
        raise BadIndex(f"pairing index must be 2, 3 or 4, got {i}")
    keep = frozenset(keep)
    labels = tuple(labels)
    ends = [a for a, _ in labels]
    if len(set(ends)) != 4:
        raise WouldCreateParallel("cut edges share a kept endpoint")
    vmap = _dense_map(g.n, set(range(g.n)) - keep)
    x, y = len(keep), len(keep) + 1
    hub = {k: (x if k in (0, i - 1) else y) for k in range(4)}
    attach = tuple(edge(vmap[ends[k]], hub[k]) for k in range(4))
    edges = [edge(vmap[a], vmap[b]) for a, b in g.edges if a in keep and b in keep]
    graph = from_edges(x + 2, edges + list(attach) + [(x, y)])
    return FourCutSide(g, graph, keep, labels, i, vmap, x, y, attach)


def four_circuit_labels(g: CubicGraph, c) -> tuple[tuple[int, int], ...]:
    """``(outside neighbour, circuit vertex)`` pairs in circuit order."""
    vs = c.vertices if isinstance(c, Circuit) else tuple(c)
    if len(vs) != 4 or len(set(vs)) != 4:
        raise NotA4Circuit(f"{vs} is not a 4-circuit")
    for k in range(4):
        if not g.has_edge(vs[k], vs[(k + 1) % 4]):
            raise NotA4Circuit(f"{vs} is not a circuit of the graph")
    out = []
    for v in vs:
        outside = [w for w in g.adj[v] if w not in vs]
        if len(outside) != 1:
            raise NotA4Circuit(f"4-circuit {vs} has a chord")
        out.append((outside[0], v))
    return tuple(out)


def build_g1i(g: CubicGraph, structure, i: int, labels=None):
    """Build ``G_1i`` from a 4-circuit, or the pair of sides from a cyclic 4-edge-cut.

    A 4-circuit is given as a vertex sequence or :class:`Circuit`; its order
    fixes ``f_1..f_4``. For an :class:`EdgeCut` the crossing order is used
    unless ``labels`` (pairs ``(side_a end, side_b end)``) is supplied.
    """
    if isinstance(structure, EdgeCut):
        real = _check_cut(g, structure, 4)
        pairs = tuple(labels) if labels is not None else _oriented(real, [edge(*e) for e in structure.crossing])
        a = build_side(g, real.side_a, pairs, i)
        b = build_side(g, real.side_b, tuple((q, p) for p, q in pairs), i)
        return a, b
    lab = four_circuit_labels(g, structure)
    vs = {v for _, v in lab}
    return build_side(g, frozenset(range(g.n)) - vs, lab, i)


@dataclass(frozen=True)
class CircuitImage:
    """How one circuit of ``g`` appears on a 4-cut side.

    ``closures`` lists the new vertices used (``'x'``, ``'y'``) and ``'xy'``
    when the edge ``xy`` closes it. ``images`` is empty for circuits that
    live entirely on the removed side.
    """

    source: Circuit
    images: tuple[Circuit, ...]
    closures: frozenset[str]

    @property
    def crossing(self) -> bool:
        return bool(self.closures)


def rewrite_circuits_4cut(side: FourCutSide, circuits) -> tuple[CircuitImage, ...]:
    hub = {a: side.hub_of(k) for k, (a, _) in enumerate(side.labels)}
    out = []
    for c in circuits:
        c = as_circuit(c)
        images, used = _project(c, side.vmap, hub, side.xy)
        flags = set()
        if side.x in used:
            flags.add("x")
        if side.y in used:
            flags.add("y")
        if any(side.xy == edge(*e) for im in images for e in im.edges):
            flags.add("xy")
        out.append(CircuitImage(c, images, frozenset(flags)))
    return tuple(out)


def _complete(g: CubicGraph, base: set, uncovered: Sequence[int]) -> list[frozenset]:
    """All ways to extend ``base`` by a perfect matching of ``g[uncovered]``."""
    rest = sorted(uncovered)
    if not rest:
        return [frozenset(base)]
    out = []

    def rec(todo: list[int], acc: list[Edge]):
        if not todo:
            out.append(frozenset(base) | frozenset(acc))
            return
        v = todo[0]
        for w in todo[1:]:
            if g.has_edge(v, w):
                rec([z for z in todo[1:] if z != w], acc + [edge(v, w)])

    rec(rest, [])
    return out


def interface(side: FourCutSide, m) -> object:
    """``'xy'`` or the frozenset of cut indices ``k`` whose image lies in ``m``."""
    m = frozenset(edge(*e) for e in m)
    if side.xy in m:
        return "xy"
    return frozenset(k for k, e in enumerate(side.attach) if e in m)


def extend_matching_4side(side: FourCutSide, m_prime) -> list[frozenset]:
    """Every perfect matching of the source extending ``m_prime`` on the kept side.

    Meant for a small removed side such as a 4-circuit; the removed vertices
    not covered by a cut edge are matched among themselves in all possible ways.
    """
    m = check_matching(side.graph, m_prime)
    inv = _inverse(side.vmap, side.graph.n)
    base = set()
    covered = set()
    for a, b in m:
        if a in (side.x, side.y) and b in (side.x, side.y):
            continue
        if a in (side.x, side.y) or b in (side.x, side.y):
            k = side.attach.index(edge(a, b))
            f = side.labels[k]
            base.add(edge(*f))
            covered.add(f[1])
        else:
            base.add(edge(inv[a], inv[b]))
    removed = [v for v in range(side.source.n) if v not in side.keep and v not in covered]
    return _complete(side.source, base, removed)


def combine_4cut(side_a: FourCutSide, m_a, side_b: FourCutSide, m_b) -> frozenset:
    """Glue side solutions that agree on the cut interface."""
    ia, ib = interface(side_a, m_a), interface(side_b, m_b)
    if ia != ib:
        raise IndexMismatch(f"side interfaces differ: {ia} vs {ib}")
    out = set()
    for side, m in ((side_a, m_a), (side_b, m_b)):
        inv = _inverse(side.vmap, side.graph.n)
        for a, b in m:
            if a < side.x and b < side.x:
                out.add(edge(inv[a], inv[b]))
    if ia != "xy":
        for k in ia:
            out.add(edge(*side_a.labels[k]))
    return check_matching(side_a.source, out)


# ========================================================= edge reduction


@dataclass(frozen=True)
class EdgeReduction:
    """``(alpha beta : gamma delta)_{uv}``: delete ``u, v``; add ``alpha beta`` and ``gamma delta``."""

    source: CubicGraph
    graph: CubicGraph
    u: int
    v: int
    alpha: int
    beta: int
    gamma: int
    delta: int
    vmap: tuple[int, ...]

    @property
    def added(self) -> tuple[Edge, Edge]:
        vm = self.vmap
        return edge(vm[self.alpha], vm[self.beta]), edge(vm[self.gamma], vm[self.delta])


def reduce_edge(g: CubicGraph, u: int, v: int, alpha: int, beta: int) -> EdgeReduction:
    """Apply the edge reduction at ``f = uv`` pairing ``alpha`` (a neighbour of ``u``) with ``beta`` (of ``v``).

    A result that falls apart raises :class:`~charm.errors.Disconnected`.
    """
    if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
        raise EdgeNotInGraph(f"{(u, v)} is not an edge")
    if alpha not in g.adj[u] or alpha == v:
        raise BadIndex(f"{alpha} is not a neighbour of {u} other than {v}")
    if beta not in g.adj[v] or beta == u:
        raise BadIndex(f"{beta} is not a neighbour of {v} other than {u}")
    gamma = next(w for w in g.adj[u] if w not in (v, alpha))
    delta = next(w for w in g.adj[v] if w not in (u, beta))
    if len({alpha, beta, gamma, delta}) != 4:
        raise WouldCreateParallel("outer neighbours of the edge are not distinct")
    if g.has_edge(alpha, beta) or g.has_edge(gamma, delta):
        raise WouldCreateParallel("a paired edge already exists")
    vmap = _dense_map(g.n, (u, v))
    edges = [edge(vmap[a], vmap[b]) for a, b in g.edges if u not in (a, b) and v not in (a, b)]
    edges += [edge(vmap[alpha], vmap[beta]), edge(vmap[gamma], vmap[delta])]
    return EdgeReduction(g, from_edges(g.n - 2, edges), u, v, alpha, beta, gamma, delta, vmap)


def extend_matching_edge_reduction(red: EdgeReduction, m_prime) -> frozenset:
    """Lift a perfect matching of the reduced graph.

    If ``gamma delta`` is used it becomes ``u gamma, v delta``; symmetrically
    for ``alpha beta``; otherwise ``uv`` is added. Both added edges cannot be
    used at once in a lift that keeps the rest, so that raises.
    """
    m = check_matching(red.graph, m_prime)
    ab, gd = red.added
    if ab in m and gd in m:
        raise InvalidMatching("both added edges are in the matching")
    inv = _inverse(red.vmap, red.graph.n)
    out = {edge(inv[a], inv[b]) for a, b in m if (a, b) not in (ab, gd)}
    if gd in m:
        out |= {edge(red.u, red.gamma), edge(red.v, red.delta)}
    elif ab in m:
        out |= {edge(red.u, red.alpha), edge(red.v, red.beta)}
    else:
        out.add(edge(red.u, red.v))
    return check_matching(red.source, out)


def map_circuit(red: EdgeReduction, c) -> Circuit:
    """Image of a circuit avoiding ``u`` and ``v``."""
    c = as_circuit(c)
    if red.u in c.vertex_set or red.v in c.vertex_set:
        raise CircuitCollision("circuit passes through a deleted vertex")
    return Circuit(tuple(red.vmap[x] for x in c.vertices))


def rewrite_circuit_through_f(red: EdgeReduction, c_f) -> Circuit:
    """Shortcut the path ``a - u - v - b`` of ``c_f`` by the added edge ``ab``."""
    c = as_circuit(c_f)
    if edge(red.u, red.v) not in c.edges:
        raise PairingMismatch("circuit does not contain f")
    a = next(w for w in red.source.adj[red.u] if w != red.v and edge(w, red.u) in c.edges)
    b = next(w for w in red.source.adj[red.v] if w != red.u and edge(w, red.v) in c.edges)
    if {a, b} not in ({red.alpha, red.beta}, {red.gamma, red.delta}):
        raise PairingMismatch("circuit pairs the outer neighbours the other way")
    drop = {edge(a, red.u), edge(red.u, red.v), edge(red.v, b)}
    vm = red.vmap
    es = [edge(vm[p], vm[q]) for p, q in c.edges if (p, q) not in drop]
    es.append(edge(vm[a], vm[b]))
    return Circuit.from_edges(es)


# ====================================================== 5-circuit smoothing


@dataclass(frozen=True)
class FiveCircuitSmoothing:
    """Delete ``t3 t4`` from the 5-circuit ``t1..t5`` and smooth ``t3``, ``t4``.

    ``t[k]`` are the circuit vertices, ``tp[k]`` their outside neighbours; the
    reduced graph gains ``t2 t'3`` and ``t5 t'4``.
    """

    source: CubicGraph
    graph: CubicGraph
    t: tuple[int, int, int, int, int]
    tp: tuple[int, int, int, int, int]
    vmap: tuple[int, ...]

    @property
    def smoothed(self) -> tuple[Edge, Edge]:
        t, tp, vm = self.t, self.tp, self.vmap
        return edge(vm[t[1]], vm[tp[2]]), edge(vm[t[4]], vm[tp[3]])


def smooth_5circuit(g: CubicGraph, c: Sequence[int]) -> FiveCircuitSmoothing:
    t = tuple(c.vertices if isinstance(c, Circuit) else c)
    if len(t) != 5 or len(set(t)) != 5 or any(not 0 <= x < g.n for x in t):
        raise NotA5Circuit(f"{t} is not a 5-circuit")
    if not all(g.has_edge(t[k], t[(k + 1) % 5]) for k in range(5)):
        raise NotA5Circuit(f"{t} is not a circuit of the graph")
    tp = []
    for k in range(5):
        out = [w for w in g.adj[t[k]] if w not in (t[k - 1], t[(k + 1) % 5])]
        if out[0] in t:
            raise NeighborsCollide(f"5-circuit {t} has a chord at {t[k]}")
        tp.append(out[0])
    if len(set(tp)) != 5:
        raise NeighborsCollide("outside neighbours of the 5-circuit are not distinct")
    t1, t2, t3, t4, t5 = t
    vmap = _dense_map(g.n, (t3, t4))
    edges = [edge(vmap[a], vmap[b]) for a, b in g.edges if t3 not in (a, b) and t4 not in (a, b)]
    edges += [edge(vmap[t2], vmap[tp[2]]), edge(vmap[t5], vmap[tp[3]])]
    return FiveCircuitSmoothing(g, from_edges(g.n - 2, edges), t, tuple(tp), vmap)


def extend_matching_smoothing(sm: FiveCircuitSmoothing, m_prime) -> frozenset:
    """Lift a perfect matching of the smoothed graph.

    With ``t1 t2`` matched: add ``t3 t4`` if ``t5 t'5`` is matched, else trade
    ``t1 t2, t5 t'4`` for ``t1 t5, t2 t3, t4 t'4``. The case ``t1 t5`` is the
    mirror image. If ``t1`` is matched outside the circuit, ``t3 t4`` is added
    when neither smoothed edge is used; otherwise there is no lift.

    A circuit whose image ``m_prime`` meets is met by the lift unless the
    circuit uses ``t1 t'1``.
    """
    m = check_matching(sm.graph, m_prime)
    s2, s5 = sm.smoothed
    inv = _inverse(sm.vmap, sm.graph.n)
    t1, t2, t3, t4, t5 = sm.t
    tp = sm.tp
    base = {edge(inv[a], inv[b]) for a, b in m if (a, b) not in (s2, s5)}
    has2, has5 = s2 in m, s5 in m
    if edge(t1, t2) in base:
        if edge(t5, tp[4]) in base:
            out = base | {edge(t3, t4)}
        else:
            out = (base - {edge(t1, t2)}) | {edge(t1, t5), edge(t2, t3), edge(t4, tp[3])}
    elif edge(t1, t5) in base:
        if edge(t2, tp[1]) in base:
            out = base | {edge(t3, t4)}
        else:
            out = (base - {edge(t1, t5)}) | {edge(t1, t2), edge(t4, t5), edge(t3, tp[2])}
    elif not has2 and not has5:
        out = base | {edge(t3, t4)}
    else:
        raise InvalidMatching("t1 is matched outside the circuit while a smoothed edge is used")
    return check_matching(sm.source, out)


def rewrite_circuits_smoothing(sm: FiveCircuitSmoothing, circuits) -> tuple[Circuit, ...]:
    """Images of the circuits in the smoothed graph.

    A circuit running ``t2 t3 t4 t5`` is rerouted through ``t1``; a circuit
    through ``t3`` (or ``t4``) avoiding ``t3 t4`` follows the smoothed edge.
    Anything else through ``t3 t4`` cannot be represented and raises.
    """
    circuits = [as_circuit(c) for c in circuits]
    t1, t2, t3, t4, t5 = sm.t
    tp = sm.tp
    vm = sm.vmap
    out = []
    for c in circuits:
        es = set(c.edges)
        if t3 not in c.vertex_set and t4 not in c.vertex_set:
            out.append(Circuit(tuple(vm[x] for x in c.vertices)))
            continue
        path = {edge(t2, t3), edge(t3, t4), edge(t4, t5)}
        if path <= es:
            if t1 in c.vertex_set or any(t1 in d.vertex_set for d in circuits):
                raise CircuitCollision("t1 is already used by a circuit")
            es = (es - path) | {edge(t1, t2), edge(t1, t5)}
        elif edge(t3, t4) in es:
            raise CircuitCollision("circuit uses t3 t4 without the path t2..t5")
        else:
            if t3 in c.vertex_set:
                es = (es - {edge(t2, t3), edge(t3, tp[2])}) | {("s2",)}
            if t4 in c.vertex_set:
                es = (es - {edge(t4, t5), edge(t4, tp[3])}) | {("s5",)}
        mapped = []
        for e in es:
            if e == ("s2",):
                mapped.append(edge(vm[t2], vm[tp[2]]))
            elif e == ("s5",):
                mapped.append(edge(vm[t5], vm[tp[3]]))
            else:
                mapped.append(edge(vm[e[0]], vm[e[1]]))
        out.append(Circuit.from_edges(mapped))
    if not _disjoint(out):
        raise CircuitCollision("rewritten circuits overlap")
    return tuple(out)


# ============================================================== utilities


def four_circuits(g: CubicGraph) -> list[Circuit]:
    """All 4-circuits, in canonical order."""
    seen = set()
    for a in range(g.n):
        for b, d in combinations(g.adj[a], 2):
            for c in g.adj[b]:
                if c != a and c != d and g.has_edge(c, d):
                    seen.add(Circuit((a, b, c, d)))
    return sorted(seen, key=lambda c: c.vertices)


def five_circuits_through(g: CubicGraph, u: int, v: int) -> list[tuple[int, ...]]:
    """5-circuits containing edge ``uv``, as sequences starting ``u``."""
    out = []
    for a in g.adj[u]:
        if a == v:
            continue
        for b in g.adj[v]:
            if b in (u, a):
                continue
            for c in g.adj[b]:
                if c not in (u, v, a, b) and g.has_edge(c, a):
                    out.append((u, v, b, c, a))
    return out


def correspondence_block(kind: str, vmaps: dict[str, Sequence[int]], extra: dict[str, object]) -> str:
    """Versioned text block describing old -> new vertex ids."""
    lines = [f"# correspondence v{FORMAT_VERSION} {kind}"]
    for name, vmap in vmaps.items():
        pairs = " ".join(f"{old}>{new}" for old, new in enumerate(vmap) if new >= 0)
        lines.append(f"vmap {name}: {pairs}")
    for k, v in extra.items():
        lines.append(f"{k}: {v}")
    lines.append("# end")
    return "\n".join(lines)


__all__ = [
    "ThreeCutSplit",
    "split_on_3cut",
    "lift_matching_3cut",
    "rewrite_circuits_3cut",
    "FourCutSide",
    "build_side",
    "build_g1i",
    "four_circuit_labels",
    "CircuitImage",
    "rewrite_circuits_4cut",
    "interface",
    "extend_matching_4side",
    "combine_4cut",
    "EdgeReduction",
    "reduce_edge",
    "extend_matching_edge_reduction",
    "map_circuit",
    "rewrite_circuit_through_f",
    "FiveCircuitSmoothing",
    "smooth_5circuit",
    "extend_matching_smoothing",
    "rewrite_circuits_smoothing",
    "four_circuits",
    "five_circuits_through",
    "correspondence_block",
    "ReductionError",
]
