"""Rebuild the sets a, b, c of the worked example and print their S/D reducts.

    python3 scripts/figure1.py [--dot]
"""
import argparse

from hyperset.dump import dump
from hyperset.flat import parse_flat_system, solve
from hyperset.reducts import Slice, sd_graph
from hyperset.store import Store, empty, set_of
from hyperset.structures import format_structure, to_dot


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--dot", action="store_true")
    args = ap.parse_args()

    store = Store()
    ab = solve(parse_flat_system("a = { b, #0 }\nb = { a, #1 }", store), store)
    c = solve(parse_flat_system("c = { c, #0, #1 }", store), store)["c"]
    zero = empty(store)
    one = set_of(zero, store=store)
    print(dump({"a": ab["a"], "b": ab["b"], "c": c}))
    for title, members in (("left", [ab["a"], ab["b"], zero, one]), ("right", [c, zero, one])):
        g = sd_graph(Slice.of(members))
        names = {ab["a"]: "a", ab["b"]: "b", c: "c", zero: "0", one: "1"}
        labels = [names[h] for h in g.labels]
        print(f"# {title}: " + " ".join(f"{i}={n}" for i, n in enumerate(labels)))
        print(to_dot(g, labels) if args.dot else format_structure(g))


if __name__ == "__main__":
    main()
