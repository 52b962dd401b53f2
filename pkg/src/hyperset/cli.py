"""Command-line front end.

Inputs are file paths, or ``-`` for standard input, so commands compose::

    hyperset flower 5 | hyperset dgraph - | hyperset components -

Exit status: 0 on success, 1 on a domain error (bad input, violated
precondition), 2 on a usage error.
"""
from __future__ import annotations

import argparse
import json
import random
import sys
from typing import Sequence

from .constructions import (
    ball,
    bouquet,
    check_graft,
    embed_graph,
    flower,
    graft_ball,
    rieger,
    rieger_check,
    rieger_slice,
)
from .dump import canonical_order, dump, load_dump
from .errors import HypersetError, PreconditionError
from .flat import parse_flat_system, solve
from .reducts import Slice, d_closure, d_graph, sd_graph
from .store import Store
from .structures import FiniteStructure, components, format_structure, parse_structure, to_dot
from .logic.ef import ef_equiv
from .logic.formulas import PhiClass, mu, phi_n
from .logic.interpret import interpret_digraph, translate
from .logic.parser import parse, pretty
from .logic.semantics import evaluate


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _formula_arg(args: argparse.Namespace) -> str:
    if args.file:
        return _read(args.file).strip()
    if args.formula is None:
        raise PreconditionError("give a formula or --file")
    return args.formula


def _structure_out(g: FiniteStructure, args: argparse.Namespace, names=None, header: Sequence[str] = ()) -> str:
    if args.dot:
        return to_dot(g, names)
    return "".join(f"# {line}\n" for line in header) + format_structure(g)


def _slice_from_dump(text: str, store: Store) -> tuple[Slice, dict]:
    named, nodes = load_dump(text, store)
    return d_closure(nodes), named


# -- subcommands --------------------------------------------------------------


def cmd_solve(args, store, out):
    system = parse_flat_system(_read(args.system), store)
    sol = solve(system, store)
    out.write(dump(sol) if sol else "")


def cmd_canon_eq(args, store, out):
    def point(path):
        named, _ = load_dump(_read(path), store)
        if args.point:
            if args.point not in named:
                raise PreconditionError(f"{path} has no point named {args.point!r}")
            return named[args.point]
        if len(named) != 1:
            raise PreconditionError(f"{path} names {len(named)} points; pick one with --point")
        return next(iter(named.values()))

    same = point(args.first) == point(args.second)
    out.write(f"equal: {str(same).lower()}\n")


def _reduct(args, store, out, fn):
    s, named = _slice_from_dump(_read(args.dump), store)
    g = fn(s)
    pos = {h: i for i, h in enumerate(g.labels)}
    header = [f"{p} = {pos[h]}" for p, h in sorted(named.items())]
    names = [str(i) for i in g.domain]
    for p, h in sorted(named.items()):
        names[pos[h]] = p
    out.write(_structure_out(g, args, names, header))


def cmd_dgraph(args, store, out):
    _reduct(args, store, out, d_graph)


def cmd_sdgraph(args, store, out):
    _reduct(args, store, out, sd_graph)


def cmd_components(args, store, out):
    g = parse_structure(_read(args.structure))
    for comp in components(g):
        out.write(" ".join(map(str, comp)) + "\n")


def cmd_embed(args, store, out):
    g = parse_structure(_read(args.structure))
    s = embed_graph(g, store)
    out.write(dump({f"v{i}": h for i, h in s.items()}))


def cmd_flower(args, store, out):
    out.write(dump({"apex": flower(args.n, store)}))


def cmd_bouquet(args, store, out):
    out.write(dump({"bouquet": bouquet(args.sizes, store)}))


def cmd_rieger(args, store, out):
    g = parse_structure(_read(args.structure))
    pm, a = rieger(g, store)
    rng = random.Random(args.seed)
    report = rieger_check(g, pm, a, rieger_slice(pm, args.probes, rng))
    names = {f"a{i}": x for i, x in enumerate(a)}
    names.update({f"b{i}": pm.pi(x) for i, x in enumerate(a)})
    if args.sets:
        out.write(dump(names))
    out.write(f"isomorphic: {str(report.isomorphic).lower()}\n")
    for case in ("fixed", "a", "b"):
        seen, bad = report.cases[case]
        out.write(f"case {case}: {seen} pairs, {bad} extraneous\n")
    out.write(f"extraneous: {len(report.extraneous)}\n")
    if not report.ok:
        raise HypersetError("D_N differs from the planted graph")


def cmd_graft(args, store, out):
    try:
        spec = json.loads(_read(args.spec))
    except json.JSONDecodeError as exc:
        raise PreconditionError(f"graft spec is not JSON: {exc}") from None
    for key in ("system", "center", "target"):
        if key not in spec:
            raise PreconditionError(f"graft spec lacks {key!r}")
    sol = solve(parse_flat_system(spec["system"], store), store)

    def lookup(name):
        if name not in sol:
            raise PreconditionError(f"{name!r} is not an indeterminate of the system")
        return sol[name]

    center = lookup(spec["center"])
    src = ball(center, int(spec.get("radius", 1)), d_closure([center]))
    target = Slice.of(lookup(t) for t in spec["target"])
    s_targets = {lookup(d): frozenset(lookup(t) for t in ts) for d, ts in spec.get("s_targets", {}).items()}
    image = graft_ball(src, None, s_targets, target)
    failed = check_graft(src, image, s_targets, target)
    if failed:
        raise HypersetError("grafting postconditions failed: " + ", ".join(failed))
    named_of = {}
    for name in sorted(sol):
        named_of.setdefault(sol[name], name)
    points = {}
    for k, d in enumerate(canonical_order(src.members)):
        label = named_of.get(d, f"d{k}")
        points[label + "'"] = image[d]
    out.write(dump(points))


def cmd_eval(args, store, out):
    g = parse_structure(_read(args.structure))
    f = parse(_formula_arg(args))
    asg = {}
    for item in args.assign:
        var, _, val = item.partition("=")
        try:
            asg[var] = int(val)
        except ValueError:
            raise PreconditionError(f"bad assignment {item!r}, expected var=vertex") from None
    out.write(f"{str(evaluate(g, f, asg)).lower()}\n")


def cmd_mu(args, store, out):
    f = parse(_formula_arg(args))
    if args.symmetric:
        f = PhiClass.syntactic(f).formula
    elif args.checked is not None:
        f = PhiClass.checked(f, args.checked).formula
    out.write(pretty(mu(f, args.var)) + "\n")


def cmd_phi_n(args, store, out):
    out.write(pretty(phi_n(args.n, args.var)) + "\n")


def cmd_interpret(args, store, out):
    if args.translate is not None:
        out.write(pretty(translate(parse(args.translate))) + "\n")
        return
    if args.structure is None:
        raise PreconditionError("give a digraph file or --translate FORMULA")
    d = parse_structure(_read(args.structure))
    g = interpret_digraph(d)
    names = ["v%d" % lab[1] if lab[0] == "vertex" else str(i) for i, lab in enumerate(g.labels)]
    out.write(_structure_out(g, args, names, [f"vertex nodes: 0..{d.size - 1}"]))


def cmd_ef(args, store, out):
    a = parse_structure(_read(args.first))
    b = parse_structure(_read(args.second))
    eq = ef_equiv(a, args.a, b, args.b, args.k)
    out.write(f"equivalent: {str(eq).lower()}\n")


# -- parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hyperset", description="Hypersets, double-membership graphs and finite model theory.")
    p.add_argument("--seed", type=int, default=0, help="seed for randomized checks (default 0)")
    p.add_argument("--dot", action="store_true", help="emit structures as DOT")
    sub = p.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name, fn, help):
        sp = sub.add_parser(name, help=help)
        sp.set_defaults(fn=fn)
        return sp

    def formula_args(sp):
        sp.add_argument("formula", nargs="?", help="formula text")
        sp.add_argument("--file", "-f", help="read the formula from a file")

    sp = add("solve", cmd_solve, "solve a flat system and dump the solution")
    sp.add_argument("system", help="flat-system file, or -")

    sp = add("canon-eq", cmd_canon_eq, "decide whether two pointed graphs denote the same set")
    sp.add_argument("first")
    sp.add_argument("second")
    sp.add_argument("--point", help="point name to compare in both files")

    def dot_flag(sp):
        # also accepted after the subcommand; SUPPRESS keeps the global value otherwise
        sp.add_argument("--dot", action="store_true", default=argparse.SUPPRESS, help="emit DOT")

    for name, fn, what in (("dgraph", cmd_dgraph, "D-graph"), ("sdgraph", cmd_sdgraph, "SD-graph")):
        sp = add(name, fn, f"{what} of the D-closure of a dump")
        sp.add_argument("dump", nargs="?", default="-", help="dump file, or - (default)")
        dot_flag(sp)

    sp = add("components", cmd_components, "D-components of a structure")
    sp.add_argument("structure", nargs="?", default="-")

    sp = add("embed", cmd_embed, "embed a graph into the D-graph")
    sp.add_argument("structure")

    sp = add("flower", cmd_flower, "the n-flower")
    sp.add_argument("n", type=int)

    sp = add("bouquet", cmd_bouquet, "a bouquet with flowers of the given sizes")
    sp.add_argument("sizes", type=int, nargs="*")

    sp = add("rieger", cmd_rieger, "plant a graph by a Rieger permutation and check it")
    sp.add_argument("structure")
    sp.add_argument("--probes", type=int, default=0, help="extra random sets in the test slice")
    sp.add_argument("--sets", action="store_true", help="also dump the swapped sets")
    sp.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="seed for the random probes")

    sp = add("graft", cmd_graft, "graft a D-ball next to a target slice (JSON spec)")
    sp.add_argument("spec")

    sp = add("eval", cmd_eval, "evaluate a formula on a structure")
    sp.add_argument("structure")
    formula_args(sp)
    sp.add_argument("--assign", "-a", action="append", default=[], metavar="VAR=VERTEX")

    sp = add("mu", cmd_mu, "relativize a sentence to a loop-free point's neighbourhood")
    formula_args(sp)
    sp.add_argument("--var", help="name of the new outer variable")
    group = sp.add_mutually_exclusive_group()
    group.add_argument("--symmetric", action="store_true", help="conjoin the symmetry axiom first")
    group.add_argument("--checked", type=int, metavar="BOUND", help="require symmetry to follow on relations up to BOUND points")

    sp = add("phi-n", cmd_phi_n, "print the n-flower formula")
    sp.add_argument("n", type=int)
    sp.add_argument("--var", default="x")

    sp = add("interpret", cmd_interpret, "graph gadget of a digraph, or translation of a sentence")
    sp.add_argument("structure", nargs="?")
    sp.add_argument("--translate", metavar="FORMULA", help="translate an E-sentence instead")
    dot_flag(sp)

    sp = add("ef", cmd_ef, "decide k-equivalence by the Ehrenfeucht-Fraisse game")
    sp.add_argument("first")
    sp.add_argument("second")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--a", type=int, nargs="*", default=[], help="tuple in the first structure")
    sp.add_argument("--b", type=int, nargs="*", default=[], help="tuple in the second structure")
    return p


def run(argv: Sequence[str] | None = None, out=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = out or sys.stdout
    try:
        args.fn(args, Store(), out)
    except HypersetError as exc:
        print(f"hyperset {args.command}: error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"hyperset {args.command}: error: {exc.strerror or exc}: {exc.filename}", file=sys.stderr)
        return 1
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
