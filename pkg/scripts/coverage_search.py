#!/usr/bin/env python3
"""Random search for coverage counterexamples against the L1..L14 catalog.

For each draw (G, v) with G - v claw-free and v on a claw, every maximal
independent set through v must fit in white(e) + anti(e) for some embedding e
anchored at v. With --ablate the search is repeated with each pattern left
out; a catalog with no redundant rows shows a counterexample for every k.
"""

import argparse
from collections import Counter

from lclaw.graph import maximal_independent_sets, to_list
from lclaw.instances import gen_anchored_claw
from lclaw.patterns import embedding_member, enumerate_embeddings


def uncovered(mis, members):
    for I in mis:
        if not any(not I & ~(white | anti) for white, anti in members):
            return I
    return None


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--draws", type=int, default=2000)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--max-n", type=int, default=13)
    ap.add_argument("--ablate", action="store_true")
    args = ap.parse_args()

    full_fail = 0
    needed = Counter()
    used = Counter()
    for s in range(args.seed, args.seed + args.draws):
        g, v = gen_anchored_claw(s, args.max_n)
        embs = [(e.k, *embedding_member(g, g.full, e)) for e in enumerate_embeddings(g, g.full, v)]
        used.update(k for k, _, _ in embs)
        mis = [I for I in maximal_independent_sets(g) if I >> v & 1]
        bad = uncovered(mis, [(w, a) for _, w, a in embs])
        if bad is not None:
            full_fail += 1
            print(f"counterexample seed={s} v={v} edges={g.edges()} set={to_list(bad)}")
        if args.ablate:
            for k in range(1, 15):
                if uncovered(mis, [(w, a) for kk, w, a in embs if kk != k]) is not None:
                    needed[k] += 1

    print(f"draws={args.draws} counterexamples={full_fail}")
    print("embeddings per pattern: " + " ".join(f"L{k}={used[k]}" for k in range(1, 15)))
    if args.ablate:
        print("draws broken by dropping: " + " ".join(f"L{k}={needed[k]}" for k in range(1, 15)))


if __name__ == "__main__":
    main()
