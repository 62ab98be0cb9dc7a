"""Klee ladders KL_6..KL_n: the special edge, its unique matching, and the oracle verdict."""

import argparse

from charm.harness import demo_counterexample


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--nmax", type=int, default=20)
    args = ap.parse_args()
    print(f"{'n':>3} {'edge':>8} {'#M(e)':>6} {'|C|':>4} oracle")
    for n in range(6, args.nmax + 1, 2):
        d = demo_counterexample(n)
        verdict = "none" if d.oracle_result is None else "witness"
        print(f"{n:>3} {str(d.edge):>8} {d.matchings_through_edge:>6} {len(d.circuit):>4} {verdict}")


if __name__ == "__main__":
    main()
