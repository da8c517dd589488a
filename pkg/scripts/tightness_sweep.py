"""Build the tight instance for a grid of payoffs and confirm it hits the bound.

    python scripts/tightness_sweep.py --max-alpha 6 --oracle
"""

import argparse
import time
from fractions import Fraction

from coordpoa import classify_edges, exact_poa, is_nash, poa_upper_bound, quotient, realize_graph, validate_params
from coordpoa.oracle import DEFAULT_CAP


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-alpha", type=int, default=5)
    ap.add_argument("--gamma-steps", type=int, default=3, help="gamma = beta*k/steps for k < steps")
    ap.add_argument("--oracle", action="store_true", help="also brute-force instances within the node cap")
    args = ap.parse_args()

    print(f"{'params':>16} {'nodes':>6} {'edges':>6} {'state':>16} {'ratio':>8} {'bound':>8} {'NE':>4} {'oracle':>8}")
    t0 = time.perf_counter()
    bad = 0
    for a in range(1, args.max_alpha + 1):
        for b in range(1, a + 1):
            for k in range(args.gamma_steps):
                p = validate_params(a, b, Fraction(b * k, args.gamma_steps))
                g, s, _ = realize_graph(p)
                n = classify_edges(g, s)
                r, bound = quotient(n, p), poa_upper_bound(p).bound
                ne = is_nash(g, s, p).is_nash
                orc = "-"
                if args.oracle and g.num_nodes <= DEFAULT_CAP:
                    orc = str(exact_poa(g, p).exact_poa)
                bad += (r != bound) or not ne
                print(f"{str(p):>16} {g.num_nodes:>6} {g.num_edges:>6} {str(n):>16} {str(r):>8} {str(bound):>8} {str(ne):>4} {orc:>8}")
    print(f"\n{bad} mismatches, {time.perf_counter() - t0:.2f}s")


if __name__ == "__main__":
    main()
