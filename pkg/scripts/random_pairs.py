#!/usr/bin/env python3
"""Random-pair census: count bound and residual check for the solver.

Samples random rational pairs, solves |P1| = |P2| = 1, and verifies that
every FINITE verdict respects the (n1+n2)^2 bound and that each certified
point is unimodular for both maps within tolerance.
"""

import argparse
import random
import sys
import time

from levelcurves import count_bound, solve_unimodular_pair
from levelcurves.errors import LevelCurveError
from levelcurves.ratfun import format_ratfun, rf_eval_ball
from levelcurves.sampling import random_ratfun


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--pairs", type=int, default=200)
    ap.add_argument("--max-degree", type=int, default=3)
    ap.add_argument("--height", type=int, default=3)
    ap.add_argument("--seed", type=int, default=2024)
    ap.add_argument("--residual-tol", type=float, default=1e-10)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    finite = degenerate = errors = 0
    worst_residual = 0.0
    max_points = 0
    t0 = time.time()
    for n in range(args.pairs):
        P1 = random_ratfun(rng, args.max_degree, args.height)
        P2 = random_ratfun(rng, args.max_degree, args.height)
        try:
            rep = solve_unimodular_pair(P1, P2)
        except LevelCurveError as exc:
            errors += 1
            print(f"[{n}] {type(exc).__name__}: {format_ratfun(P1)} || "
                  f"{format_ratfun(P2)}", file=sys.stderr)
            continue
        if rep.status == "DEGENERATE":
            degenerate += 1
            continue
        finite += 1
        assert len(rep.points) <= count_bound(P1, P2), "bound violated"
        max_points = max(max_points, len(rep.points))
        for pt in rep.points:
            for P in (P1, P2):
                iv = rf_eval_ball(P, pt.z).abs_interval()
                dev = max(abs(float(iv.hi) - 1), abs(1 - float(iv.lo)))
                worst_residual = max(worst_residual, dev)
                assert dev < args.residual_tol, "unimodularity residual too large"
    dt = time.time() - t0
    print(f"pairs={args.pairs} finite={finite} degenerate={degenerate} "
          f"errors={errors}")
    print(f"max points={max_points} worst residual={worst_residual:.3e} "
          f"elapsed={dt:.1f}s")
    return 0 if errors == 0 else 1


if __name__ == "__main__":
    sys.exit(main())
