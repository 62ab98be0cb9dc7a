"""Perfect matchings through a prescribed edge that meet every prescribed circuit.

The solver shrinks the graph with the surgeries from :mod:`charm.reductions`
in the order a minimal-counterexample argument would use them (3-cuts,
4-circuits and 4-cuts, then edges at distance two from ``e``), solves the
smaller instances recursively and lifts the answers back. Every lifted
candidate is checked; a failed check moves on to the next surgery choice.
Instances at or below ``brute_force_threshold`` vertices are solved by
exhaustive search, as is the Petersen graph. Exhaustive search is also the
last resort, recorded in the trace as ``oracle-fallback``.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field, replace
from functools import lru_cache
from itertools import combinations
from typing import Iterator, Optional

from .connectivity import EdgeCut, cut_between, edge_distances, find_cyclic_edge_cut, girth
from .enumeration import (
    circuits_from_one_plus_factor,
    edge_mask,
    enumerate_circuits,
    hamiltonian_circuit,
    mask_edges,
    matching_masks,
)
from .errors import (
    CharmError,
    ConnectivityTooLow,
    GraphError,
    InternalNoWitness,
    InvalidMatching,
    KleeInput,
    ReductionError,
)
from .families import Kind, classify_ladder_family, is_klee, klee_coloring, triangles
from .graph import Circuit, CubicGraph, Edge, check_collection, check_factor, check_matching, edge
from .reductions import (
    FourCutSide,
    build_side,
    combine_4cut,
    extend_matching_4side,
    extend_matching_edge_reduction,
    extend_matching_smoothing,
    five_circuits_through,
    four_circuit_labels,
    four_circuits,
    interface,
    lift_matching_3cut,
    map_circuit,
    reduce_edge,
    rewrite_circuit_through_f,
    rewrite_circuits_3cut,
    rewrite_circuits_4cut,
    rewrite_circuits_smoothing,
    smooth_5circuit,
    split_on_3cut,
)

THRESHOLD_ENV = "CHARM_THRESHOLD"


@dataclass(frozen=True)
class SolveConfig:
    brute_force_threshold: int = 16
    max_backtracks: int = 2000
    enable_distance2_reductions: bool = True

    def __post_init__(self):
        if self.brute_force_threshold < 6:
            raise ValueError("brute_force_threshold must be at least 6")
        if self.max_backtracks < 0:
            raise ValueError("max_backtracks must be non-negative")

    @classmethod
    def from_env(cls, **overrides) -> "SolveConfig":
        """Defaults, with ``CHARM_THRESHOLD`` applied unless a threshold is passed."""
        raw = os.environ.get(THRESHOLD_ENV)
        if raw and "brute_force_threshold" not in overrides:
            overrides["brute_force_threshold"] = int(raw)
        return cls(**overrides)


@dataclass(frozen=True)
class ReductionStep:
    kind: str
    n_before: int
    n_after: tuple[int, ...]
    detail: str = ""
    depth: int = 0

    def __str__(self):
        after = ",".join(map(str, self.n_after)) or "-"
        pad = "  " * self.depth
        return f"{pad}{self.kind} {self.n_before}->{after} {self.detail}".rstrip()


@dataclass(frozen=True)
class CharmResult:
    matching: frozenset
    trace: tuple[ReductionStep, ...]

    @property
    def fallbacks(self) -> int:
        return sum(1 for s in self.trace if s.kind == "oracle-fallback")


# ================================================================ oracle


@lru_cache(maxsize=65536)
def _through(g: CubicGraph, e: Edge) -> tuple[int, ...]:
    return tuple(matching_masks(g, e))


def _oracle(g: CubicGraph, e: Edge, circuits) -> Optional[frozenset]:
    cms = [edge_mask(g, c.edges) for c in circuits]
    for m in _through(g, e):
        if all(m & c for c in cms):
            return mask_edges(g, m)
    return None


def oracle_charm(g: CubicGraph, e, circuits=()) -> Optional[frozenset]:
    """First perfect matching (in enumeration order) through ``e`` meeting every circuit."""
    e = g.check_edge(e)
    return _oracle(g, e, check_collection(g, circuits))


# ============================================================== analysis


@dataclass(frozen=True)
class _Info:
    cut: Optional[EdgeCut]
    klee: bool
    girth: int


@lru_cache(maxsize=8192)
def _analyze(g: CubicGraph) -> _Info:
    cut = find_cyclic_edge_cut(g, 4)
    return _Info(cut, is_klee(g) is not None, girth(g))


def _ok(g: CubicGraph, m, e: Edge, circuits) -> bool:
    try:
        m = check_matching(g, m)
    except InvalidMatching:
        return False
    return e in m and all(not m.isdisjoint(c.edges) for c in circuits)


def _map_edge(vmap, e: Edge) -> Edge:
    return edge(vmap[e[0]], vmap[e[1]])


def _disjoint(circuits) -> bool:
    used: set[int] = set()
    for c in circuits:
        if used & c.vertex_set:
            return False
        used |= c.vertex_set
    return True


_SKIP = (ReductionError, GraphError, InvalidMatching)


class _Search:
    """One top-level solve: config, backtrack counter and recursion."""

    def __init__(self, config: SolveConfig):
        self.config = config
        self.backtracks = 0

    @property
    def exhausted(self) -> bool:
        return self.backtracks > self.config.max_backtracks

    # -------------------------------------------------------------- core

    def solve(self, g: CubicGraph, e: Edge, circuits, depth: int = 0):
        """``(matching, trace)`` for the instance, or None."""
        circuits = tuple(c for c in circuits if e not in c.edges)
        if g.n <= self.config.brute_force_threshold:
            m = _oracle(g, e, circuits)
            if m is None:
                return None
            return m, (ReductionStep("oracle", g.n, (), "", depth),)
        info = _analyze(g)
        if info.klee or (info.cut is not None and len(info.cut) <= 2):
            return None
        if g.n == 10 and info.girth == 5:
            # the Petersen graph (the unique 10-vertex cubic graph of girth 5)
            # is settled by direct search; no surgery applies to it usefully
            m = _oracle(g, e, circuits)
            return None if m is None else (m, (ReductionStep("petersen", g.n, (), "", depth),))
        for m, trace in self._candidates(g, e, circuits, info, depth):
            if _ok(g, m, e, circuits):
                return m, trace
            self.backtracks += 1
            if self.exhausted:
                break
        m = _oracle(g, e, circuits)
        if m is None:
            return None
        return m, (ReductionStep("oracle-fallback", g.n, (), "", depth),)

    def _candidates(self, g, e, circuits, info: _Info, depth) -> Iterator[tuple[frozenset, tuple]]:
        size = len(info.cut) if info.cut is not None else None
        if size == 3:
            yield from self._three_cut(g, e, circuits, depth)
        elif info.girth == 4:
            fam = classify_ladder_family(g)
            if fam.kind is not Kind.NONE:
                yield from self._ladder(g, e, fam, depth)
            yield from self._four_circuit(g, e, circuits, depth)
        elif size == 4:
            yield from self._four_cut(g, e, circuits, info.cut, depth)
        elif self.config.enable_distance2_reductions:
            yield from self._distance2(g, e, circuits, depth)

    # ------------------------------------------------------- families

    def _ladder(self, g, e, fam, depth):
        """A matching through ``e`` with Hamiltonian complement, then any other one."""
        ms = [mask_edges(g, m) for m in _through(g, e)]
        ham = []
        for m in ms:
            cs = circuits_from_one_plus_factor(g, g.edge_set - m)
            if len(cs) == 1 and len(cs[0]) == g.n:
                ham.append(m)
                break
        step = ReductionStep("ladder", g.n, (), f"{fam.kind.value} k={fam.k}", depth)
        for m in ham:
            yield m, (step,)
            for other in ms:
                if other != m:
                    yield other, (step,)
                    break

    # ---------------------------------------------------------- 3-cuts

    def _three_cut(self, g, e, circuits, depth):
        tris = triangles(g)
        cut = cut_between(g, tris[0].vertex_set) if tris else find_cyclic_edge_cut(g, 3)
        try:
            split = split_on_3cut(g, cut)
            cp, cd = rewrite_circuits_3cut(split, circuits)
        except _SKIP:
            return
        # A hit on either closure (hub edges included) is a hit on the crossing
        # circuit of g, so a side may drop its closure when the other keeps it.
        def closed(cs, hub):
            return tuple(c for c in cs if hub not in c.vertex_set)

        sides = [
            (split.g_prime, split.vmap_prime, split.e_prime, cp, closed(cp, split.hub_prime)),
            (split.g_dprime, split.vmap_dprime, split.e_dprime, cd, closed(cd, split.hub_dprime)),
        ]
        step = ReductionStep("3cut", g.n, (split.g_prime.n, split.g_dprime.n), f"cut={list(split.crossing)}", depth)

        def lifted(first, k, a, b):
            pair = (a[0], b[0]) if first == 0 else (b[0], a[0])
            return lift_matching_3cut(split, *pair, k), (step,) + a[1] + b[1]

        cross = [edge(*f) for f in split.crossing]
        if e in cross:
            i = cross.index(e)
            for first in (0, 1):
                gf, _, ef, cf, _ = sides[first]
                gs, _, es, cs_full, cs_open = sides[1 - first]
                a = self.solve(gf, ef[i], cf, depth + 1)
                if a is None:
                    continue
                for cs in (cs_full, cs_open):
                    b = self.solve(gs, es[i], cs, depth + 1)
                    if b is not None:
                        yield lifted(first, i, a, b)
            return
        first = 0 if split.vmap_prime[e[0]] >= 0 else 1
        gf, vf, ef, cf, cf_open = sides[first]
        gs, _, es, cs_full, cs_open = sides[1 - first]
        e1 = _map_edge(vf, e)
        if gf.n == 4:
            # triangle side: a matching contains e iff it contains the third cut edge
            k = next(i for i, x in enumerate(ef) if not set(x) & set(e1))
            b = self.solve(gs, es[k], cs_full, depth + 1)
            a = self.solve(gf, e1, cf_open, depth + 1)
            if a is not None and b is not None:
                yield lifted(first, k, a, b)
            return
        a = self.solve(gf, e1, cf, depth + 1)
        if a is None:
            return
        k = next(i for i, x in enumerate(ef) if x in a[0])
        for cs in (cs_full, cs_open):
            b = self.solve(gs, es[k], cs, depth + 1)
            if b is not None:
                yield lifted(first, k, a, b)

    # ----------------------------------------------- 4-circuits / 4-cuts

    @staticmethod
    def _variants(images):
        """Circuit collections for a side: rewrite every crossing circuit, then fewer."""
        inside = [c for im in images if not im.crossing for c in im.images]
        crossing = [im for im in images if im.crossing]
        seen = set()
        for r in range(len(crossing), -1, -1):
            for chosen in combinations(crossing, r):
                cs = tuple(inside) + tuple(c for im in chosen for c in im.images)
                key = frozenset(cs)
                if key in seen or not _disjoint(cs):
                    continue
                seen.add(key)
                yield cs

    def _four_circuit(self, g, e, circuits, depth):
        for c in four_circuits(g)[:3]:
            try:
                lab = list(four_circuit_labels(g, c))
            except _SKIP:
                continue
            cverts = {v for _, v in lab}
            cross = [edge(*p) for p in lab]
            if e in cross:
                r = cross.index(e)
                lab = lab[r:] + lab[:r]
                where, order = "X", (3, 2, 4)
            elif e[0] in cverts and e[1] in cverts:
                where, order = "C", (2, 3, 4)
            else:
                where, order = "out", (3, 2, 4)
            for i in order:
                if self.exhausted:
                    return
                try:
                    side = build_side(g, frozenset(range(g.n)) - cverts, lab, i)
                    images = rewrite_circuits_4cut(side, circuits)
                except _SKIP:
                    continue
                if where == "C":
                    e2 = side.xy
                elif where == "X":
                    e2 = side.attach[0]
                else:
                    e2 = _map_edge(side.vmap, e)
                step = ReductionStep("4circuit", g.n, (side.graph.n,), f"C={c.vertices} i={i}", depth)
                for cs in self._variants(images):
                    sub = self.solve(side.graph, e2, cs, depth + 1)
                    if sub is None:
                        continue
                    for m in extend_matching_4side(side, sub[0]):
                        if e in m:
                            yield m, (step,) + sub[1]

    def _four_cut(self, g, e, circuits, cut: EdgeCut, depth):
        pairs = [(a, b) if a in cut.side_a else (b, a) for a, b in cut.crossing]
        side_a, side_b = cut.side_a, cut.side_b
        cross = [edge(*p) for p in pairs]
        if e in cross:
            r = cross.index(e)
            pairs = pairs[r:] + pairs[:r]
            on_cut = True
        else:
            on_cut = False
            if e[0] in side_b:
                side_a, side_b = side_b, side_a
                pairs = [(b, a) for a, b in pairs]
        rev = [(b, a) for a, b in pairs]
        sides_a: dict[int, FourCutSide] = {}
        sides_b: dict[int, FourCutSide] = {}
        for i in (2, 3, 4):
            try:
                sides_a[i] = build_side(g, side_a, pairs, i)
                sides_b[i] = build_side(g, side_b, rev, i)
            except _SKIP:
                continue
        cache: dict = {}

        def solve_b(j, e2):
            key = (j, e2)
            if key not in cache:
                side = sides_b[j]
                images = rewrite_circuits_4cut(side, circuits)
                cache[key] = [(cs, self.solve(side.graph, e2, cs, depth + 1)) for cs in self._variants(images)]
            return cache[key]

        def step(i, j):
            na, nb = sides_a[i].graph.n, sides_b[j].graph.n
            return ReductionStep("4cut", g.n, (na, nb), f"cut={pairs} i={i} j={j}", depth)

        for i in sides_a:
            if self.exhausted:
                return
            sa = sides_a[i]
            e2 = sa.attach[0] if on_cut else _map_edge(sa.vmap, e)
            for cs in self._variants(rewrite_circuits_4cut(sa, circuits)):
                a = self.solve(sa.graph, e2, cs, depth + 1)
                if a is None:
                    continue
                want = interface(sa, a[0])
                for j in sides_b:
                    sb = sides_b[j]
                    if want == "xy":
                        targets = [sb.xy]
                    else:
                        ks = sorted(want)
                        if sb.hub_of(ks[0]) == sb.hub_of(ks[1]):
                            continue
                        targets = [sb.attach[k] for k in ks]
                    for t in targets:
                        for _, b in solve_b(j, t):
                            if b is None or interface(sb, b[0]) != want:
                                continue
                            try:
                                m = combine_4cut(sa, a[0], sb, b[0])
                            except _SKIP:
                                continue
                            yield m, (step(i, j),) + a[1] + b[1]

    # ------------------------------------------------------ distance 2

    def _distance2(self, g, e, circuits, depth):
        dist = edge_distances(g, e)
        for f in sorted(x for x, d in dist.items() if d == 2):
            for u, v in (f, f[::-1]):
                if self.exhausted:
                    return
                if v in e:
                    continue
                alphas = [w for w in g.adj[u] if w in e]
                if len(alphas) != 1:
                    continue
                yield from self._around(g, e, circuits, u, v, alphas[0], depth)

    def _single(self, g, e, circuits, u, v, alpha, beta, keep, kind, depth, through_f=None):
        try:
            red = reduce_edge(g, u, v, alpha, beta)
            cs = [map_circuit(red, c) for c in keep]
            if through_f is not None:
                cs.append(rewrite_circuit_through_f(red, through_f))
        except _SKIP:
            return
        sub = self.solve(red.graph, _map_edge(red.vmap, e), cs, depth + 1)
        if sub is None:
            return
        try:
            m = extend_matching_edge_reduction(red, sub[0])
        except _SKIP:
            return
        detail = f"f=({u},{v}) pair=({alpha}{beta}:{red.gamma}{red.delta})"
        yield m, (ReductionStep(kind, g.n, (red.graph.n,), detail, depth),) + sub[1]

    def _double(self, g, e, circuits, u, v, alpha, beta, c_v, keep, depth):
        seq = list(c_v.vertices)
        pos = seq.index(beta)
        nxt = seq[(pos + 1) % len(seq)]
        prv = seq[pos - 1]
        y = prv if nxt == v else nxt
        ypos = seq.index(y)
        z = seq[(ypos + 1) % len(seq)] if seq[ypos - 1] == beta else seq[ypos - 1]
        w = next(q for q in g.adj[beta] if q not in (v, y))
        x = next(q for q in g.adj[y] if q not in (beta, z))
        try:
            r1 = reduce_edge(g, u, v, alpha, beta)
            vm = r1.vmap
            r2 = reduce_edge(r1.graph, vm[beta], vm[y], vm[alpha], vm[x])
            cs = [map_circuit(r2, map_circuit(r1, c)) for c in keep]
        except _SKIP:
            return
        e2 = _map_edge(r2.vmap, _map_edge(vm, e))
        sub = self.solve(r2.graph, e2, cs, depth + 1)
        if sub is None:
            return
        try:
            m = extend_matching_edge_reduction(r1, extend_matching_edge_reduction(r2, sub[0]))
        except _SKIP:
            return
        detail = f"f=({u},{v}) then ({beta},{y}) w={w} x={x} z={z}"
        yield m, (ReductionStep("double-edge", g.n, (r2.graph.n,), detail, depth),) + sub[1]

    def _around(self, g, e, circuits, u, v, alpha, depth):
        gamma = next(w for w in g.adj[u] if w not in (v, alpha))
        outer = [w for w in g.adj[v] if w != u]
        fe = edge(u, v)
        c_f = next((c for c in circuits if fe in c.edges), None)
        touching = [c for c in circuits if u in c.vertex_set or v in c.vertex_set]
        rest = [c for c in circuits if c not in touching]
        if c_f is not None:
            a = alpha if edge(u, alpha) in c_f.edges else gamma
            b = next(w for w in outer if edge(v, w) in c_f.edges)
            beta = b if a == alpha else next(w for w in outer if w != b)
            other = next(w for w in outer if w != beta)
            yield from self._single(g, e, circuits, u, v, alpha, beta, rest, "edge", depth, through_f=c_f)
            yield from self._single(g, e, circuits, u, v, alpha, other, rest, "edge-swap", depth)
        elif not touching:
            for beta in outer:
                yield from self._single(g, e, circuits, u, v, alpha, beta, rest, "edge", depth)
        else:
            c_v = next((c for c in touching if edge(v, outer[0]) in c.edges and edge(v, outer[1]) in c.edges), None)
            if c_v is not None:
                others = [c for c in rest]
                if all(u not in c.vertex_set for c in touching):
                    for beta in outer:
                        yield from self._double(g, e, circuits, u, v, alpha, beta, c_v, others, depth)
            for beta in outer:
                yield from self._single(g, e, circuits, u, v, alpha, beta, rest, "edge-drop", depth)
        for t in self._five_orders(g, u, v):
            yield from self._smooth(g, e, circuits, t, depth)

    @staticmethod
    def _five_orders(g, u, v):
        for t in five_circuits_through(g, u, v):
            yield t
            yield (t[0],) + tuple(reversed(t[1:]))

    def _smooth(self, g, e, circuits, t, depth):
        t3, t4 = t[2], t[3]
        if t3 in e or t4 in e:
            return
        try:
            sm = smooth_5circuit(g, t)
            cs = rewrite_circuits_smoothing(sm, circuits)
        except _SKIP:
            return
        sub = self.solve(sm.graph, _map_edge(sm.vmap, e), cs, depth + 1)
        if sub is None:
            return
        try:
            m = extend_matching_smoothing(sm, sub[0])
        except _SKIP:
            return
        yield m, (ReductionStep("smooth", g.n, (sm.graph.n,), f"t={t}", depth),) + sub[1]


# ============================================================ public API


def _prepare(g: CubicGraph, e, circuits):
    e = g.check_edge(e)
    cs = check_collection(g, circuits)
    return e, cs


def _require_3ec(g: CubicGraph):
    cut = find_cyclic_edge_cut(g, 2)
    if cut is not None:
        raise ConnectivityTooLow(f"graph has a cyclic {len(cut)}-edge-cut {list(cut.crossing)}")


def charm_matching(g: CubicGraph, e, circuits=(), config: Optional[SolveConfig] = None) -> CharmResult:
    """A verified perfect matching through ``e`` meeting every circuit.

    ``g`` must be cyclically 3-edge-connected and not a Klee graph.
    """
    config = config or SolveConfig.from_env()
    e, cs = _prepare(g, e, circuits)
    _require_3ec(g)
    if is_klee(g) is not None:
        raise KleeInput("Klee graphs are excluded; use charm_matching_any or oracle_charm")
    res = _Search(config).solve(g, e, cs)
    if res is None:
        raise InternalNoWitness(f"no witness for edge {e} and circuits {[c.vertices for c in cs]}")
    m, trace = res
    if not _ok(g, m, e, cs):
        raise InternalNoWitness("solver produced an invalid witness")
    return CharmResult(m, trace)


def replay(g: CubicGraph, e, circuits, result: CharmResult, config: Optional[SolveConfig] = None) -> bool:
    """Re-run the solve and check it reproduces ``result`` exactly."""
    again = charm_matching(g, e, circuits, config)
    return again.matching == result.matching and again.trace == result.trace


def charm_matching_any(g: CubicGraph, circuits=(), config: Optional[SolveConfig] = None) -> frozenset:
    """A perfect matching meeting every circuit; Klee graphs are allowed.

    Klee inputs try the three colour classes of the unique 3-edge-colouring.
    """
    cs = check_collection(g, circuits)
    _require_3ec(g)
    if is_klee(g) is not None:
        for m in klee_coloring(g):
            if all(not m.isdisjoint(c.edges) for c in cs):
                return m
        raise InternalNoWitness("no colour class of the Klee graph meets every circuit")
    e = min(cs[0].edges) if cs else g.edges[0]
    return charm_matching(g, e, cs, config).matching


def acyclic_complement(g: CubicGraph, f, e, config: Optional[SolveConfig] = None) -> frozenset:
    """A perfect matching ``M`` through ``e`` with ``g - (f + M)`` acyclic."""
    f = check_factor(g, f)
    circuits = circuits_from_one_plus_factor(g, f)
    return charm_matching(g, e, circuits, config).matching


def second_matching(g: CubicGraph, m1, config: Optional[SolveConfig] = None) -> frozenset:
    """A perfect matching ``M2`` with ``g - (m1 + M2)`` acyclic."""
    m1 = check_matching(g, m1)
    circuits = circuits_from_one_plus_factor(g, m1)
    return charm_matching_any(g, circuits, config)


__all__ = [
    "SolveConfig",
    "ReductionStep",
    "CharmResult",
    "oracle_charm",
    "charm_matching",
    "charm_matching_any",
    "acyclic_complement",
    "second_matching",
    "replay",
]
