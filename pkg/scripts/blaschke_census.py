#!/usr/bin/env python3
"""Cross-validate the two circle-preservation tests on random quotients.

Generates random Blaschke quotients (which must test positive) and slightly
perturbed non-preserving variants (which must test negative), and checks
that the conjugate-reflection criterion and the Cayley reality criterion
always agree.
"""

import argparse
import random
import sys
import time

from levelcurves.circlemaps import _cayley_real, is_circle_preserving
from levelcurves.ratfun import format_ratfun
from levelcurves.sampling import perturb_off_circle, random_blaschke_quotient


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--count", type=int, default=500)
    ap.add_argument("--seed", type=int, default=11)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    disagreements = 0
    t0 = time.time()
    for n in range(args.count):
        Q = random_blaschke_quotient(rng)
        R = perturb_off_circle(rng, Q)
        for sample, expected in ((Q, True), (R, False)):
            a = is_circle_preserving(sample)
            b = _cayley_real(sample)
            if a != b or a != expected:
                disagreements += 1
                print(f"[{n}] reflection={a} cayley={b} expected={expected}: "
                      f"{format_ratfun(sample)}", file=sys.stderr)
    dt = time.time() - t0
    print(f"count={args.count} positives+negatives={2 * args.count} "
          f"disagreements={disagreements} elapsed={dt:.1f}s")
    return 0 if disagreements == 0 else 1


if __name__ == "__main__":
    sys.exit(main())
