"""Acceptance criteria 1-9; each test records one PASS/FAIL line.

The lines are printed in the pytest terminal summary, and also when this file
is run directly with ``python tests/test_acceptance.py``.
"""

import random
import sys
import time
from itertools import combinations
from pathlib import Path

import networkx as nx
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from conftest import ACCEPTANCE, PETERSEN_EDGES, K33_EDGES  # noqa: E402
from kleegen import klee_classes, random_klee  # noqa: E402
from props import edge_reduction_trials, smoothing_trials, three_cut_trials  # noqa: E402

from charm.catalog import cubic_graphs, generate_cubic_catalog  # noqa: E402
from charm.connectivity import cut_between, cyclic_edge_connectivity, is_bridgeless  # noqa: E402
from charm.enumeration import (  # noqa: E402
    circuits_from_one_plus_factor,
    enumerate_perfect_matchings,
    proper_edge_colourings,
)
from charm.canon import is_isomorphic  # noqa: E402
from charm.families import Kind, is_klee, klee_coloring, klee_ladder_special_edge, make_family, triangles  # noqa: E402
from charm.graph import edge, from_edges  # noqa: E402
from charm.harness import verify_acyclic_plus, verify_theorem  # noqa: E402
from charm.io import parse_graph6, write_graph6  # noqa: E402
from charm.reductions import four_circuits  # noqa: E402
from charm.solver import SolveConfig, oracle_charm  # noqa: E402


def record(k: int, ok: bool, detail: str):
    line = f"criterion {k}: {'PASS' if ok else 'FAIL'} {detail}"
    ACCEPTANCE[k] = line
    print(line)
    assert ok, line


def _count_matchings(g, must=None):
    """Independent matching counter: branch on the lowest edge, include or exclude."""
    edges = list(g.edges)

    def rec(i, covered):
        if len(covered) == g.n:
            return 1
        if i == len(edges):
            return 0
        u, v = edges[i]
        total = rec(i + 1, covered)
        if u not in covered and v not in covered:
            total += rec(i + 1, covered | {u, v})
        return total

    if must is None:
        return rec(0, frozenset())
    u, v = must
    sub = [x for x in edges if u not in x and v not in x]
    edges = sub
    return rec(0, frozenset((u, v)))


def _nx_complement_is_ham(g, m):
    h = nx.Graph([e for e in g.edges if e not in m])
    return h.number_of_nodes() == g.n and all(d == 2 for _, d in h.degree()) and nx.is_connected(h)


# ------------------------------------------------------------------ 1


def test_criterion_1_prescribed_edge_small():
    start = time.perf_counter()
    default = verify_theorem(n_max=12, mode="exhaustive")
    low = verify_theorem(n_max=12, mode="exhaustive", config=SolveConfig(brute_force_threshold=6))
    wall = time.perf_counter() - start
    ok = default.ok and low.ok and default.instances == low.instances > 0
    c = low.counts
    record(
        1,
        ok,
        f"graphs={len(low.entries)} verified={c['verified']} skipped-Klee={c['skipped-Klee']} "
        f"skipped-connectivity={c['skipped-connectivity']} instances={low.instances} "
        f"FAILED={default.counts['FAILED']}+{c['FAILED']} (threshold 16 + threshold 6) "
        f"oracle-fallbacks@6={low.fallbacks} wall={wall:.0f}s",
    )


# ------------------------------------------------------------------ 2


def test_criterion_2_klee_ladder_counterexample():
    rows = []
    ok = True
    for n in range(6, 22, 2):
        g = make_family(Kind.KLEE_LADDER, n)
        e, m = klee_ladder_special_edge(g)
        cs = circuits_from_one_plus_factor(g, m)
        good = (
            _count_matchings(g, e) == 1
            and e in m
            and _nx_complement_is_ham(g, m)
            and len(cs) == 1
            and oracle_charm(g, e, cs) is None
        )
        ok &= good
        rows.append(f"KL{n}:{'ok' if good else 'bad'}")
    record(2, ok, " ".join(rows))


# ------------------------------------------------------------------ 3


def test_criterion_3_klee_colouring():
    rng = random.Random(2024)
    graphs = list(klee_classes(16)) + [random_klee(rng, rng.choice(range(6, 18, 2))) for _ in range(120)]
    bad = 0
    for g in graphs:
        colourings = list(proper_edge_colourings(g))
        partitions = set()
        for col in colourings:
            classes = [frozenset(e for e, c in zip(g.edges, col) if c == k) for k in range(3)]
            partitions.add(frozenset(classes))
        if len(colourings) != 6 or partitions != {frozenset(klee_coloring(g))}:
            bad += 1
    record(3, bad == 0 and len(graphs) >= 200, f"klee_graphs={len(graphs)} (classes={len(klee_classes(16))}) max_n=16 bad={bad}")


# ------------------------------------------------------------------ 4


def test_criterion_4_klee_triangles():
    graphs = [g for g in klee_classes(16) if g.n >= 6]
    kl = {n: make_family(Kind.KLEE_LADDER, n) for n in range(6, 18, 2)}
    bad = two_tri = joined = 0
    for g in graphs:
        ts = triangles(g)
        if len(ts) < 2 or any(not a.vertex_set.isdisjoint(b.vertex_set) for a, b in combinations(ts, 2)):
            bad += 1
            continue
        if len(ts) == 2 and g.n >= 8:
            two_tri += 1
            fours = four_circuits(g)
            for t in ts:
                if sum(any(e in c.edges for c in fours) for e in t.edges) != 1:
                    bad += 1
            if any(g.has_edge(a, b) for a in ts[0].vertices for b in ts[1].vertices):
                joined += 1
                bad += not is_isomorphic(g, kl[g.n])
    record(4, bad == 0, f"klee_graphs={len(graphs)} two_triangle={two_tri} joined={joined} violations={bad}")


# ------------------------------------------------------------------ 5


def test_criterion_5_ladder_families():
    bad = []
    checked = 0
    for kind in (Kind.LADDER, Kind.MOEBIUS_LADDER, Kind.QUASI_LADDER):
        for size in range(8, 18, 2):
            g = make_family(kind, size)
            for e in g.edges:
                ms = enumerate_perfect_matchings(g, e)
                ham = [m for m in ms if _nx_complement_is_ham(g, m)]
                checked += 1
                if not ham or len(ms) < 2:
                    bad.append(f"{kind.value}{size}:{e}")
    record(5, not bad, f"family_edges={checked} violations={len(bad)} {' '.join(bad[:5])}".rstrip())


# ------------------------------------------------------------------ 6


def _bipartition_min_cut(g):
    best = None
    for mask in range(1, 1 << (g.n - 1)):
        cut = cut_between(g, frozenset(v for v in range(g.n) if mask >> v & 1))
        if cut.cyclic and (best is None or len(cut) < best):
            best = len(cut)
    return best if best is not None else len(g.edges) - g.n + 1


def test_criterion_6_cyclic_connectivity():
    graphs = {
        "K4": from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]),
        "K3,3": from_edges(6, K33_EDGES),
        "Petersen": from_edges(10, PETERSEN_EDGES),
        "prism": make_family(Kind.KLEE_LADDER, 6),
    }
    want = {"K4": 3, "K3,3": 4, "Petersen": 5, "prism": 3}
    got = {k: cyclic_edge_connectivity(g) for k, g in graphs.items()}
    oracle = {k: _bipartition_min_cut(g) for k, g in graphs.items()}
    record(6, got == want == oracle, " ".join(f"{k}={got[k]}" for k in want))


# ------------------------------------------------------------------ 7


def test_criterion_7_reduction_soundness():
    results = {}
    for name, fn, seed in (
        ("lift_matching_3cut", three_cut_trials, 71),
        ("extend_matching_edge_reduction", edge_reduction_trials, 72),
        ("extend_matching_smoothing", smoothing_trials, 73),
    ):
        results[name] = fn(random.Random(seed), 1000)
    ok = all(a >= 1000 and not b for a, b in results.values())
    record(7, ok, " ".join(f"{k}={a}/{len(b)}viol" for k, (a, b) in results.items()))


# ------------------------------------------------------------------ 8


def test_criterion_8_acyclic_plus():
    graphs = [g for n in range(4, 14, 2) for g in cubic_graphs(n) if is_bridgeless(g)]
    graphs.append(from_edges(10, PETERSEN_EDGES))
    bad = 0
    for g in graphs:
        pair = verify_acyclic_plus(g)
        if pair is None:
            bad += 1
            continue
        m1, m2 = pair
        h = nx.Graph()
        h.add_nodes_from(range(g.n))
        h.add_edges_from(e for e in g.edges if e not in m1 and e not in m2)
        sizes = {len(c) for c in nx.connected_components(h)}
        if m1 == m2 or not nx.is_forest(h) or not sizes <= {2, 3}:
            bad += 1
    record(8, bad == 0, f"bridgeless_graphs={len(graphs)} (n<=12 plus Petersen) failures={bad}")


# ------------------------------------------------------------------ 9


def test_criterion_9_graph6_round_trip():
    graphs = list(generate_cubic_catalog(14))
    bad = 0
    for g in graphs:
        code = write_graph6(g)
        h = nx.Graph()
        h.add_nodes_from(range(g.n))
        h.add_edges_from(g.edges)
        if parse_graph6(code) != g or nx.to_graph6_bytes(h, header=False).decode().strip() != code:
            bad += 1
    record(9, bad == 0 and len(graphs) == 1 + 2 + 5 + 19 + 85 + 509, f"catalog_graphs={len(graphs)} mismatches={bad}")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
