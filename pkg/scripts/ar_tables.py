#!/usr/bin/env python3
"""Print gcd(P1^k - 1, P2^k - 1) tables and stabilization horizons.

Samples random multiplicatively independent polynomial pairs, accumulates
the gcd table up to the horizon, and reports where each table stabilizes
together with the root-consistency cross-check against the solver.
"""

import argparse
import random
import sys
import time

from levelcurves.arlab import ar_accumulate, mult_independence, INDEPENDENT
from levelcurves.errors import DependentInputs, HorizonTooSmall
from levelcurves.polynomials import format_unipoly
from levelcurves.sampling import random_unipoly


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--count", type=int, default=20)
    ap.add_argument("--max-degree", type=int, default=3)
    ap.add_argument("--height", type=int, default=2)
    ap.add_argument("--max-k", type=int, default=16)
    ap.add_argument("--seed", type=int, default=5)
    ap.add_argument("--verbose", action="store_true")
    args = ap.parse_args()

    rng = random.Random(args.seed)
    produced = skipped = unstable = inconsistent = 0
    t0 = time.time()
    while produced < args.count:
        P1 = random_unipoly(rng, rng.randint(1, args.max_degree), args.height)
        P2 = random_unipoly(rng, rng.randint(1, args.max_degree), args.height)
        if mult_independence(P1, P2).kind != INDEPENDENT:
            skipped += 1
            continue
        produced += 1
        try:
            rep = ar_accumulate(P1, P2, args.max_k)
        except (DependentInputs, HorizonTooSmall) as exc:
            unstable += 1
            print(f"  {type(exc).__name__}: {format_unipoly(P1, 'z')} || "
                  f"{format_unipoly(P2, 'z')}", file=sys.stderr)
            continue
        if not rep.consistency:
            inconsistent += 1
        print(f"P1 = {format_unipoly(P1, 'z')}   P2 = {format_unipoly(P2, 'z')}")
        print(f"  stabilized_at={rep.stabilized_at} "
              f"F={format_unipoly(rep.stabilized_F, 'z')} "
              f"consistent={rep.consistency}")
        if args.verbose:
            for k, g in rep.table:
                if g.degree > 0:
                    print(f"    k={k:3d}  gcd={format_unipoly(g, 'z')}")
    dt = time.time() - t0
    print(f"pairs={produced} skipped_dependent={skipped} unstable={unstable} "
          f"inconsistent={inconsistent} elapsed={dt:.1f}s")
    return 0 if inconsistent == 0 else 1


if __name__ == "__main__":
    sys.exit(main())
