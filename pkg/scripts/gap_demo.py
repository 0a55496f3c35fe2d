#!/usr/bin/env python3
"""Demonstrate the unbounded approximation-ratio gap at desk scale.

Runs the indistinguishability game for both families and prints, per
method, the worst (smallest) empirical ratio across trials.  On default
parameters every trial of the increasing game is forced to a ratio of at
least min{1/eps, 2m/n} = 1000, and the decreasing game almost never
distinguishes, pinning the algorithm's value to 1 while the hidden optimum
sits at eps/(alpha+eps-beta).
"""

import argparse
import sys
from fractions import Fraction

from ratiolab import (
    DecreasingInstance,
    IncreasingInstance,
    make_algorithm,
    run_game_decreasing,
    run_game_increasing,
    summarize_games,
)


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-increasing", type=int, default=30)
    ap.add_argument("--n-decreasing", type=int, default=100)
    ap.add_argument("--epsilon-increasing", default="1/1000")
    ap.add_argument("--epsilon-decreasing", default="1/100")
    ap.add_argument("--m", default="1000000")
    ap.add_argument("--alpha", type=int, default=10)
    ap.add_argument("--beta", type=int, default=5)
    ap.add_argument("--trials", type=int, default=20)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    inc = IncreasingInstance(args.n_increasing, Fraction(args.m), Fraction(args.epsilon_increasing))
    print(f"increasing family: n={inc.n}, m={inc.m}, eps={inc.epsilon}")
    print(f"  guaranteed ratio floor min{{1/eps, 2m/n}} = {inc.gap_bound()}")
    for method in ("random", "local"):
        budget = inc.n ** 3
        reports = run_game_increasing(make_algorithm(method, budget), inc, args.seed, args.trials)
        s = summarize_games(reports)
        print(f"  {method:6s} budget={budget}: min ratio {s['min_ratio']}, median {s['median_ratio']}")

    dec = DecreasingInstance(args.n_decreasing, args.alpha, args.beta, Fraction(args.epsilon_decreasing))
    print(f"decreasing family: n={dec.n}, alpha={dec.alpha}, beta={dec.beta}, eps={dec.epsilon}")
    print(f"  hidden optimum {dec.planted_ratio()}; undistinguished trials score ratio {1 / dec.planted_ratio()}")
    for method in ("random", "local"):
        budget = dec.n ** 2
        reports = run_game_decreasing(make_algorithm(method, budget), dec, args.seed, args.trials)
        s = summarize_games(reports)
        print(
            f"  {method:6s} budget={budget}: distinguished {s['distinguished_count']}/{s['trials']}, "
            f"min ratio {s['min_ratio']}, median {s['median_ratio']}"
        )
    return 0


if __name__ == "__main__":
    sys.exit(main())
