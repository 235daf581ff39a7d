#!/usr/bin/env python3
"""Family size vs n on generated l-claw-free instances.

Wider than the ``lclaw bench`` default; also reports the recursive call and
memo counters that the bench table leaves out. Worker count follows
LCLAW_THREADS like the CLI.
"""

import argparse
import statistics
import time

from lclaw.family import count_cap, gamma
from lclaw.instances import gen_dense_lclaw_instance, gen_lclaw_instance


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--l", type=int, default=2)
    ap.add_argument("--sizes", default="8,10,12,14,16,18,20,22,26,30")
    ap.add_argument("--trials", type=int, default=5)
    ap.add_argument("--dense", action="store_true", help="rejection-sampled G(n,p) instead of gadgets")
    ap.add_argument("--p", type=float, default=0.5)
    args = ap.parse_args()

    print(f"{'n':>3} {'fam_mean':>9} {'fam_max':>8} {'emb_mean':>9} {'calls':>6} {'memo':>6} {'cap':>4} {'sec':>8}")
    for n in map(int, args.sizes.split(",")):
        fams, embs, calls, hits, secs, caps = [], [], [], [], [], []
        for t in range(args.trials):
            seed = 7919 * n + t
            if args.dense:
                inst = gen_dense_lclaw_instance(seed, n, args.l, p=args.p)
            else:
                inst = gen_lclaw_instance(seed, n, args.l)
            t0 = time.perf_counter()
            fam = gamma(inst.graph, args.l)
            secs.append(time.perf_counter() - t0)
            fams.append(len(fam))
            embs.append(fam.stats.embeddings)
            calls.append(fam.stats.recursive_calls)
            hits.append(fam.stats.memo_hits)
            caps.append(len(fam) <= count_cap(inst.graph, fam))
        print(
            f"{n:>3} {statistics.mean(fams):>9.1f} {max(fams):>8} {statistics.mean(embs):>9.1f} "
            f"{max(calls):>6} {max(hits):>6} {'ok' if all(caps) else 'NO':>4} {statistics.mean(secs):>8.4f}"
        )


if __name__ == "__main__":
    main()
