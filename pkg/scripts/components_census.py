"""Census of D-components realized by embedding graphs.

Embeds the disjoint union of all connected graphs on n vertices (loops
allowed, up to isomorphism) and counts how many components of the resulting
D-closed slice match each of them.

    python3 scripts/components_census.py --max-n 4
"""
import argparse
import time

from hyperset.constructions import embed_graph
from hyperset.reducts import d_closure, d_graph
from hyperset.store import Store
from hyperset.structures import components, disjoint_union, graphs_up_to_iso, is_isomorphic


def main():
    ap = argparse.ArgumentParser(description="census of realized D-components")
    ap.add_argument("--max-n", type=int, default=4)
    args = ap.parse_args()

    store = Store()
    print(f"{'n':>2} {'graphs':>7} {'connected':>9} {'components':>10} {'matched':>7} {'seconds':>7}")
    for n in range(1, args.max_n + 1):
        start = time.perf_counter()
        every = graphs_up_to_iso(n)
        connected = [g for g in every if len(components(g)) == 1]
        union = connected[0]
        for g in connected[1:]:
            union = disjoint_union(union, g)
        dg = d_graph(d_closure(embed_graph(union, store).values()))
        found = [dg.restrict(c) for c in components(dg)]
        matched = sum(any(is_isomorphic(f, g) is not None for f in found if f.size == n) for g in connected)
        print(f"{n:>2} {len(every):>7} {len(connected):>9} {len(found):>10} {matched:>7} {time.perf_counter() - start:>7.2f}")


if __name__ == "__main__":
    main()
