#!/usr/bin/env python
"""How many fixed Halley steps does double precision need?

For each step count, evaluate g on a mixed linear/log grid over [-R, R] and
report the worst scaled residual |h| / (eps * max(1, |x|, e^y)) and the worst
distance to the bisection oracle.  This is the offline calibration behind the
default of four steps.

Usage:
    python scripts/iteration_study.py [--range 1e6] [--points 20000] [--max-steps 6]
"""
import argparse
import math
import sys

import numpy as np

from lambertg import FixedIterations, evaluate
from lambertg.oracle import oracle_g

EPS = sys.float_info.epsilon


def grid(r, n):
    mag = np.logspace(-300, math.log10(r), n // 4)
    return np.concatenate([np.linspace(-r, r, n // 2), mag, -mag]).tolist()


if __name__ == "__main__":
    parser = argparse.ArgumentParser()
    parser.add_argument("--range", type=float, default=1e6)
    parser.add_argument("--points", type=int, default=20_000)
    parser.add_argument("--max-steps", type=int, default=6)
    args = parser.parse_args()

    xs = grid(args.range, args.points)
    refs = [oracle_g(x) for x in xs]
    print(f"{len(xs)} points over [-{args.range:g}, {args.range:g}]")
    print(f"{'steps':>5} {'max scaled residual':>20} {'max oracle gap (ulp)':>21}")
    for steps in range(1, args.max_steps + 1):
        policy = FixedIterations(steps)
        worst_h = worst_u = 0.0
        for x, ref in zip(xs, refs):
            y = evaluate(x, policy).value
            ey = math.exp(y)
            worst_h = max(worst_h, abs(math.fsum((y, ey, -x))) / (EPS * max(1.0, abs(x), ey)))
            unit = EPS if abs(ref) < 1 else math.ulp(ref)
            worst_u = max(worst_u, abs(y - ref) / unit)
        print(f"{steps:>5} {worst_h:>20.4g} {worst_u:>21.4g}")
