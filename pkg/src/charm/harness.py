"""Catalog-wide verification runs and the Klee-ladder counterexample demo."""

from __future__ import annotations

import json
import random
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Iterable, Optional

from .catalog import generate_cubic_catalog
from .connectivity import find_cyclic_edge_cut
from .enumeration import (
    circuits_from_one_plus_factor,
    complement_subgraph,
    component_orders,
    enumerate_circuits,
    enumerate_disjoint_circuit_collections,
    enumerate_perfect_matchings,
    is_acyclic,
    matching_masks,
    mask_edges,
)
from .errors import BadSize, CharmError
from .families import Kind, is_klee, klee_ladder_special_edge, make_family
from .graph import Circuit, CubicGraph, hits_all, is_perfect_matching
from .io import parse_graph6, write_graph6
from .solver import SolveConfig, charm_matching, oracle_charm

SCHEMA_VERSION = 1

VERIFIED = "verified"
SKIPPED_KLEE = "skipped-Klee"
SKIPPED_CONNECTIVITY = "skipped-connectivity"
FAILED = "FAILED"


@dataclass
class GraphEntry:
    graph6: str
    n: int
    status: str
    instances: int = 0
    fallbacks: int = 0
    # replayable instance for FAILED entries: graph6, edge, circuits, error
    failure: Optional[dict] = None


@dataclass
class VerificationReport:
    catalog_id: str
    mode: str
    seed: Optional[int]
    threshold: int
    entries: list[GraphEntry] = field(default_factory=list)
    wall_time: float = 0.0
    schema_version: int = SCHEMA_VERSION

    @property
    def counts(self) -> Counter:
        return Counter(e.status for e in self.entries)

    @property
    def failures(self) -> list[GraphEntry]:
        return [e for e in self.entries if e.status == FAILED]

    @property
    def instances(self) -> int:
        return sum(e.instances for e in self.entries)

    @property
    def fallbacks(self) -> int:
        return sum(e.fallbacks for e in self.entries)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_text(self, timing: bool = True) -> str:
        c = self.counts
        lines = [
            f"# verification report v{self.schema_version}",
            f"catalog {self.catalog_id} mode {self.mode} seed {self.seed} threshold {self.threshold}",
        ]
        for e in self.entries:
            line = f"{e.status} {e.graph6} n={e.n} instances={e.instances} fallbacks={e.fallbacks}"
            if e.failure:
                line += " " + json.dumps(e.failure, sort_keys=True)
            lines.append(line)
        lines.append(
            f"graphs={len(self.entries)} verified={c[VERIFIED]} skipped-Klee={c[SKIPPED_KLEE]} "
            f"skipped-connectivity={c[SKIPPED_CONNECTIVITY]} FAILED={c[FAILED]} "
            f"instances={self.instances} fallbacks={self.fallbacks}"
        )
        if timing:
            lines.append(f"wall_time={self.wall_time:.2f}s")
        return "\n".join(lines) + "\n"

    def to_json(self, timing: bool = True) -> str:
        d = asdict(self)
        d["counts"] = dict(self.counts)
        if not timing:
            d.pop("wall_time")
        return json.dumps(d, sort_keys=True, indent=1)


# ---------------------------------------------------- prescribed edge


def _random_collection(g: CubicGraph, circuits: list[Circuit], rng: random.Random) -> tuple[Circuit, ...]:
    order = rng.sample(range(len(circuits)), len(circuits))
    target = rng.randint(0, 4)
    used: set[int] = set()
    out = []
    for i in order:
        if len(out) >= target:
            break
        c = circuits[i]
        if used.isdisjoint(c.vertex_set):
            out.append(c)
            used |= c.vertex_set
    return tuple(out)


def _instances(g: CubicGraph, mode: str, seed: Optional[int], samples: int):
    if mode == "exhaustive":
        collections = [()] + list(enumerate_disjoint_circuit_collections(g))
        for e in g.edges:
            for cs in collections:
                yield e, cs
        return
    rng = random.Random(f"{seed}:{write_graph6(g)}")
    circuits = enumerate_circuits(g)
    for _ in range(samples):
        yield rng.choice(g.edges), _random_collection(g, circuits, rng)


def check_graph(
    g: CubicGraph,
    mode: str = "exhaustive",
    seed: Optional[int] = None,
    config: Optional[SolveConfig] = None,
    samples: int = 200,
) -> GraphEntry:
    """Run every (edge, collection) instance of ``g`` and cross-check with the oracle."""
    config = config or SolveConfig()
    code = write_graph6(g)
    if find_cyclic_edge_cut(g, 2) is not None:
        return GraphEntry(code, g.n, SKIPPED_CONNECTIVITY)
    if is_klee(g) is not None:
        return GraphEntry(code, g.n, SKIPPED_KLEE)
    entry = GraphEntry(code, g.n, VERIFIED)
    for e, cs in _instances(g, mode, seed, samples):
        entry.instances += 1
        error = None
        try:
            res = charm_matching(g, e, cs, config)
            entry.fallbacks += res.fallbacks
            m = res.matching
            if not (is_perfect_matching(g, m) and e in m and hits_all(m, cs)):
                error = "invalid witness"
            elif oracle_charm(g, e, cs) is None:
                error = "oracle finds no witness"
        except CharmError as exc:
            error = f"{type(exc).__name__}: {exc}"
        if error is not None:
            entry.status = FAILED
            entry.failure = {
                "graph6": code,
                "edge": list(e),
                "circuits": [list(c.vertices) for c in cs],
                "error": error,
            }
            break
    return entry


def _check_code(args) -> GraphEntry:
    code, mode, seed, config, samples = args
    return check_graph(parse_graph6(code), mode, seed, config, samples)


def verify_theorem(
    catalog: Optional[Iterable[CubicGraph]] = None,
    n_max: int = 10,
    mode: str = "exhaustive",
    seed: Optional[int] = 0,
    config: Optional[SolveConfig] = None,
    jobs: int = 1,
    samples: int = 200,
    catalog_id: Optional[str] = None,
) -> VerificationReport:
    """Check the prescribed-edge matching statement over a catalog.

    ``catalog`` defaults to the generated catalog up to ``n_max``; graphs above
    ``n_max`` are ignored. Sampled mode draws ``samples`` instances per graph
    from a generator seeded by ``seed`` and the graph, so results do not depend
    on ``jobs``.
    """
    if mode not in ("exhaustive", "sampled"):
        raise ValueError(f"unknown mode {mode!r}")
    config = config or SolveConfig.from_env()
    start = time.perf_counter()
    if catalog is None:
        catalog = generate_cubic_catalog(n_max)
        catalog_id = catalog_id or f"generated-n{n_max}"
    codes = [write_graph6(g) for g in catalog if g.n <= n_max]
    report = VerificationReport(catalog_id or "external", mode, seed if mode == "sampled" else None, config.brute_force_threshold)
    work = [(c, mode, seed, config, samples) for c in codes]
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as pool:
            report.entries = list(pool.map(_check_code, work, chunksize=1))
    else:
        report.entries = [_check_code(w) for w in work]
    report.wall_time = time.perf_counter() - start
    return report


# ------------------------------------------------------ acyclic pairs


def verify_acyclic_plus(g: CubicGraph) -> Optional[tuple[frozenset, frozenset]]:
    """Two perfect matchings whose union leaves only paths on 2 or 3 vertices.

    Exhaustive over pairs; None when no such pair exists.
    """
    masks = matching_masks(g)
    for i, a in enumerate(masks):
        for b in masks[i + 1 :]:
            m1, m2 = mask_edges(g, a), mask_edges(g, b)
            rest = complement_subgraph(g, (m1, m2))
            if is_acyclic(rest) and set(component_orders(rest)) <= {2, 3}:
                return m1, m2
    return None


# ------------------------------------------------------ counterexample


@dataclass
class CounterexampleDemo:
    n: int
    graph6: str
    edge: tuple[int, int]
    matching: frozenset
    circuit: Circuit
    matchings_through_edge: int
    oracle_result: Optional[frozenset]

    def to_text(self) -> str:
        return "\n".join(
            [
                f"KL_{self.n} {self.graph6}",
                f"edge {self.edge[0]},{self.edge[1]} lies in {self.matchings_through_edge} perfect matching(s)",
                "matching " + " ".join(f"{u}-{v}" for u, v in sorted(self.matching)),
                "complement circuit " + ",".join(map(str, self.circuit.vertices)),
                f"oracle: {'none' if self.oracle_result is None else 'witness found'}",
            ]
        ) + "\n"


def demo_counterexample(n: int) -> CounterexampleDemo:
    """Build ``KL_n`` and the instance on which no prescribed-edge witness exists."""
    if n % 2 or n < 6:
        raise BadSize(f"need an even size of at least 6, got {n}")
    g = make_family(Kind.KLEE_LADDER, n)
    e, m = klee_ladder_special_edge(g)
    circuits = circuits_from_one_plus_factor(g, m)
    (circuit,) = circuits  # the complement of the unique matching is Hamiltonian
    return CounterexampleDemo(
        n=n,
        graph6=write_graph6(g),
        edge=e,
        matching=m,
        circuit=circuit,
        matchings_through_edge=len(enumerate_perfect_matchings(g, e)),
        oracle_result=oracle_charm(g, e, circuits),
    )


__all__ = [
    "SCHEMA_VERSION",
    "GraphEntry",
    "VerificationReport",
    "check_graph",
    "verify_theorem",
    "verify_acyclic_plus",
    "CounterexampleDemo",
    "demo_counterexample",
]
