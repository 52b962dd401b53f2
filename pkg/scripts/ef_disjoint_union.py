"""Random trials of the disjoint-union lemma with the EF engine.

If (G0, a) and (H0, b) are k-equivalent, and so are (G1, c) and (H1, d), then
the disjoint unions with the concatenated tuples are k-equivalent too.  The
script samples quadruples, reports how often the premise held, and lists any
counterexample.

    python3 scripts/ef_disjoint_union.py --trials 2000 --k 3
"""
import argparse
import random
import time

from hyperset.generators import random_graph, random_permutation
from hyperset.logic.ef import ef_equiv
from hyperset.structures import disjoint_union, format_structure


def main():
    ap = argparse.ArgumentParser(description="disjoint-union lemma trials")
    ap.add_argument("--trials", type=int, default=1000)
    ap.add_argument("--k", type=int, default=3, help="maximum number of rounds")
    ap.add_argument("--max-n", type=int, default=4)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    start = time.perf_counter()
    premises = bad = 0
    for _ in range(args.trials):
        g0, g1 = (random_graph(rng, rng.randint(1, args.max_n)) for _ in range(2))
        h0 = random_permutation(rng, g0) if rng.random() < 0.5 else random_graph(rng, rng.randint(1, args.max_n))
        h1 = random_permutation(rng, g1) if rng.random() < 0.5 else random_graph(rng, rng.randint(1, args.max_n))
        a, b = rng.randrange(g0.size), rng.randrange(h0.size)
        c, d = rng.randrange(g1.size), rng.randrange(h1.size)
        k = rng.randint(0, args.k)
        if not (ef_equiv(g0, (a,), h0, (b,), k) and ef_equiv(g1, (c,), h1, (d,), k)):
            continue
        premises += 1
        if not ef_equiv(disjoint_union(g0, g1), (a, g0.size + c), disjoint_union(h0, h1), (b, h0.size + d), k):
            bad += 1
            print(f"counterexample at k={k}:\n{format_structure(g0)}{format_structure(g1)}{format_structure(h0)}{format_structure(h1)}")
    print(f"{args.trials} trials, {premises} met the premise, {bad} counterexamples, {time.perf_counter() - start:.1f}s")


if __name__ == "__main__":
    main()
