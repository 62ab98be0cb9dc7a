"""Exhaustive check up to n = 12, then seeded sampling at n = 14 (and 16 if asked).

Writes text and JSON reports into ``results/``.

    python scripts/theorem_sweep.py --nmax 12 --sample-nmax 14 --seed 2024 --jobs 4
"""

import argparse
from pathlib import Path

from charm.catalog import cubic_graphs
from charm.harness import verify_theorem
from charm.solver import SolveConfig


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--nmax", type=int, default=12)
    ap.add_argument("--sample-nmax", type=int, default=14)
    ap.add_argument("--samples", type=int, default=100)
    ap.add_argument("--seed", type=int, default=2024)
    ap.add_argument("--threshold", type=int, default=6)
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--out", default="results")
    args = ap.parse_args()
    out = Path(args.out)
    out.mkdir(exist_ok=True)
    cfg = SolveConfig(brute_force_threshold=args.threshold)

    rep = verify_theorem(n_max=args.nmax, config=cfg, jobs=args.jobs)
    (out / f"theorem_exhaustive_n{args.nmax}_t{args.threshold}.txt").write_text(rep.to_text())
    (out / f"theorem_exhaustive_n{args.nmax}_t{args.threshold}.json").write_text(rep.to_json())
    print(rep.to_text().splitlines()[-2])

    for n in range(args.nmax + 2, args.sample_nmax + 1, 2):
        rep = verify_theorem(
            cubic_graphs(n), n, "sampled", args.seed, cfg, args.jobs, args.samples, catalog_id=f"generated-n{n}-only"
        )
        (out / f"theorem_sampled_n{n}_seed{args.seed}_t{args.threshold}.txt").write_text(rep.to_text())
        (out / f"theorem_sampled_n{n}_seed{args.seed}_t{args.threshold}.json").write_text(rep.to_json())
        print(n, rep.to_text().splitlines()[-2])


if __name__ == "__main__":
    main()
