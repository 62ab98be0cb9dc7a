"""How often each surgery fires, and how often the solver falls back to search.

For every cyclically 3-edge-connected non-Klee graph up to ``--nmax`` and every
(edge, circuit collection) pair, solve at each threshold and tally trace kinds.

    python scripts/trace_census.py --nmax 10 --thresholds 6 8
"""

import argparse
import time
from collections import Counter

from charm.catalog import generate_cubic_catalog
from charm.connectivity import find_cyclic_edge_cut
from charm.enumeration import enumerate_disjoint_circuit_collections
from charm.families import is_klee
from charm.solver import SolveConfig, charm_matching


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--nmax", type=int, default=10)
    ap.add_argument("--thresholds", type=int, nargs="+", default=[6, 8])
    args = ap.parse_args()
    graphs = [g for g in generate_cubic_catalog(args.nmax) if find_cyclic_edge_cut(g, 2) is None and not is_klee(g)]
    for t in args.thresholds:
        cfg = SolveConfig(brute_force_threshold=t)
        kinds, fallbacks, total = Counter(), 0, 0
        start = time.perf_counter()
        for g in graphs:
            cols = [()] + list(enumerate_disjoint_circuit_collections(g))
            for e in g.edges:
                for cs in cols:
                    res = charm_matching(g, e, cs, cfg)
                    kinds.update(s.kind for s in res.trace)
                    fallbacks += res.fallbacks
                    total += 1
        dt = time.perf_counter() - start
        print(f"threshold {t}: instances {total} fallbacks {fallbacks} time {dt:.1f}s")
        for k, v in kinds.most_common():
            print(f"  {k:16s} {v}")


if __name__ == "__main__":
    main()
