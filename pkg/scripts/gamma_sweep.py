"""Bound as a function of the compatibility payoff gamma, alpha and beta fixed."""

import argparse
from fractions import Fraction

from coordpoa import poa_upper_bound, to_rational, validate_params


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--alpha", default="3")
    ap.add_argument("--beta", default="2")
    ap.add_argument("--steps", type=int, default=10)
    args = ap.parse_args()
    alpha, beta = to_rational(args.alpha), to_rational(args.beta)

    prev = None
    for k in range(args.steps + 1):
        gamma = beta * Fraction(k, args.steps)
        rep = poa_upper_bound(validate_params(alpha, beta, gamma))
        note = "" if prev is None or rep.bound < prev else "  (not decreasing)"
        print(f"gamma={str(gamma):>6}  bound={str(rep.bound):>10} ~{float(rep.bound):.5f}{note}")
        prev = rep.bound
    print(f"alpha/beta + 1 = {alpha / beta + 1}, alpha/beta = {alpha / beta}")


if __name__ == "__main__":
    main()
