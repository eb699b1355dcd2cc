"""Command-line interface.

Exit codes: 0 success or verification pass, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import coalgebra as co
from .golden import determinism_check, golden_suite, render
from .orders import FAMILIES, build
from .posets import FinitePoset
from .projections import REGISTRY, RETRACTS, as_poset_map, verify_retract
from .trees import SPECIES_KINDS, PaintedTree, encode, enumerate_species, parse, parse_tree
from .tubings import GRAPH_FAMILIES, graph_family, lattice_report, maximal_tubings, tubing_poset

FAMILY_KIND = {"tamari": "binary", "weak": "permutation", "multi": "bileveled",
               "compo": "weighted", "boolean": "subset"}


class UsageError(Exception):
    pass


def _rank_range(text: str) -> range:
    try:
        if ".." in text:
            a, b = text.split("..")
            return range(int(a), int(b) + 1)
        return range(int(text), int(text) + 1)
    except ValueError:
        raise UsageError(f"bad rank range {text!r}; use N or A..B") from None


def _format_poset(P: FinitePoset, fmt: str, name: str = "P") -> str:
    if fmt == "dot":
        return P.to_dot(name=name)
    if fmt == "json":
        return P.to_json()
    sep = "\t" if fmt == "tsv" else " < "
    return "\n".join(f"{encode(a)}{sep}{encode(b)}" for a, b in
                     sorted(P.covers, key=lambda ab: (P.index[ab[0]], P.index[ab[1]])))


def _fmt(args) -> str:
    return "dot" if getattr(args, "dot", False) else args.format


# --- verbs --------------------------------------------------------------------------

def cmd_enumerate(args, out):
    kind = FAMILY_KIND.get(args.kind, args.kind)
    if args.kind in FAMILY_KIND:
        items = list(build(args.kind, args.rank, args.bound).poset.elements)
        items.sort(key=encode)
    else:
        items = enumerate_species(kind, args.rank)
    texts = [encode(x) for x in items]
    out.append(json.dumps(texts) if args.format == "json" else "\n".join(texts))
    return 0


def cmd_hasse(args, out):
    P = build(args.family, args.rank, args.bound).poset
    out.append(_format_poset(P, _fmt(args), f"{args.family}{args.rank}"))
    return 0


def cmd_counts(args, out):
    counts = [len(build(args.family, r, args.bound)) for r in _rank_range(args.ranks)]
    out.append(" ".join(map(str, counts)))
    return 0


def cmd_verify(args, out):
    if args.what == "retract":
        if args.name not in RETRACTS:
            raise UsageError(f"unknown retract {args.name!r}; expected one of {sorted(RETRACTS)}")
        rank = int(args.rank)
        rep, mob = verify_retract(args.name, rank)
        out.append(f"retract {args.name} at rank {rank}")
        out.extend(rep.lines())
        out.append(f"moebius_identity: {'pass' if mob.passed else 'FAIL'} ({mob.pairs_checked} pairs)")
        for x, y, want, got in mob.violations[:5]:
            out.append(f"  counterexample: {encode(x)} {encode(y)} expected {want} got {got}")
        ok = rep.passed and mob.passed
    else:
        if args.name not in FAMILIES:
            raise UsageError(f"unknown family {args.name!r}; expected one of {FAMILIES}")
        P = build(args.name, int(args.rank), args.bound).poset
        cx = P.lattice_counterexample()
        ok = cx is None
        out.append(f"lattice {args.name} {args.rank}: {len(P)} elements, {len(P.covers)} covers")
        if cx:
            out.append(f"  counterexample: no {cx[2]} for {encode(cx[0])} {encode(cx[1])}")
    out.append("PASS" if ok else "FAIL")
    return 0 if ok else 1


def cmd_map(args, out):
    if args.action == "apply":
        entry = REGISTRY.get(args.name)
        if entry is None:
            raise UsageError(f"unknown map {args.name!r}; expected one of {sorted(REGISTRY)}")
        out.append(encode(entry.func(parse(entry.source_kind, args.arg))))
        return 0
    try:
        rank = int(args.arg)
    except ValueError:
        raise UsageError("map table needs an integer rank") from None
    f = as_poset_map(args.name, rank)
    out.extend(f"{encode(x)}\t{encode(f(x))}" for x in f.source)
    return 0


def cmd_mobius(args, out):
    P = build(args.family, args.rank, args.bound).poset
    kind = FAMILY_KIND[args.family]
    x, y = parse(kind, args.x), parse(kind, args.y)
    if x not in P.index or y not in P.index:
        raise UsageError("elements do not belong to this lattice")
    out.append(str(P.mobius(x, y)))
    return 0


def _painted_text(text: str) -> bool:
    return "[" in text


def cmd_coproduct(args, out):
    psym = args.coalgebra == "psym" or (args.coalgebra == "auto" and _painted_text(args.tree))
    if psym:
        if args.basis != "F":
            raise UsageError("the painted coalgebra is expanded in the F basis only")
        x = co.LinearCombination.basis(PaintedTree.parse(args.tree))
        out.append(co.coproduct_psym(x).format())
        return 0
    t = parse_tree(args.tree)
    if args.basis == "F":
        out.append(co.coproduct_ysym(co.LinearCombination.basis(t)).format())
        return 0
    # expand in F, split, then rewrite both tensor factors back in M
    image = co.coproduct_ysym(co.m_basis(t))
    result = co.LinearCombination()
    for (a, b), c in image.items():
        result = result + c * co.tensor(co.f_from_m(a), co.f_from_m(b))
    out.append(result.format())
    return 0


def cmd_primitives(args, out):
    records = co.ysym_primitives(args.degree) if args.coalgebra == "ysym" else co.psym_primitives(args.degree)
    for r in records:
        out.append(f"# {r.source}, tree {encode(r.parameter)}: {'primitive' if r.verified else 'NOT primitive'}")
        out.append(r.element.format())
    ok = all(r.verified for r in records)
    out.append(f"{len(records)} elements, {'all verified' if ok else 'FAILURES'}")
    return 0 if ok else 1


def cmd_tubings(args, out):
    bound = args.bound if args.bound is not None else 8
    G = graph_family(args.family, args.n, args.center)
    if args.action == "enumerate":
        texts = [T.encode() for T in maximal_tubings(G, bound)]
        out.append(json.dumps(texts) if args.format == "json" else "\n".join(texts))
        return 0
    if args.action == "poset":
        out.append(_format_poset(tubing_poset(G, bound), _fmt(args), G.name.replace("-", "")))
        return 0
    rep = lattice_report(G, bound)
    if args.format == "json":
        out.append(json.dumps({"graph": rep.graph, "elements": rep.elements, "covers": rep.covers,
                               "is_lattice": rep.is_lattice,
                               "counterexample": None if rep.counterexample is None else
                               [rep.counterexample[0].encode(), rep.counterexample[1].encode(),
                                rep.counterexample[2]]}, indent=2))
    else:
        out.extend(rep.lines())
    return 0


def cmd_golden(args, out):
    results = golden_suite()
    if args.determinism:
        results.append(determinism_check())
    out.append(render(results, args.format))
    return 0 if all(r.passed for r in results) else 1


# --- parser -------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--bound", type=int, default=None, help="override the enumeration limit")
    common.add_argument("--format", choices=("text", "json", "dot", "tsv"), default="text")

    p = argparse.ArgumentParser(prog="treelattices", description="Lattices of trees and their maps.")
    sub = p.add_subparsers(dest="verb", required=True)

    s = sub.add_parser("enumerate", parents=[common], help="list the elements of a family or species")
    s.add_argument("kind", choices=FAMILIES + tuple(k for k in SPECIES_KINDS if k not in FAMILY_KIND.values()))
    s.add_argument("rank", type=int)
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("hasse", parents=[common], help="export a Hasse diagram")
    s.add_argument("family", choices=FAMILIES)
    s.add_argument("rank", type=int)
    s.add_argument("--dot", action="store_true", help="shorthand for --format dot")
    s.set_defaults(func=cmd_hasse)

    s = sub.add_parser("counts", parents=[common], help="element counts over a rank range")
    s.add_argument("family", choices=FAMILIES)
    s.add_argument("ranks", help="N or A..B")
    s.set_defaults(func=cmd_counts)

    s = sub.add_parser("verify", parents=[common], help="check a retract or the lattice property")
    s.add_argument("what", choices=("retract", "lattice"))
    s.add_argument("name")
    s.add_argument("rank", type=int)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("map", parents=[common], help="apply or tabulate a projection")
    s.add_argument("action", choices=("apply", "table"))
    s.add_argument("name")
    s.add_argument("arg", help="an element encoding (apply) or a rank (table)")
    s.set_defaults(func=cmd_map)

    s = sub.add_parser("mobius", parents=[common], help="Moebius function value")
    s.add_argument("family", choices=FAMILIES)
    s.add_argument("rank", type=int)
    s.add_argument("x")
    s.add_argument("y")
    s.set_defaults(func=cmd_mobius)

    s = sub.add_parser("coproduct", parents=[common], help="coproduct of a basis element")
    s.add_argument("basis", choices=("F", "M"))
    s.add_argument("tree")
    s.add_argument("--coalgebra", choices=("auto", "ysym", "psym"), default="auto")
    s.set_defaults(func=cmd_coproduct)

    s = sub.add_parser("primitives", parents=[common], help="verified primitive elements")
    s.add_argument("coalgebra", choices=("ysym", "psym"))
    s.add_argument("degree", type=int)
    s.set_defaults(func=cmd_primitives)

    s = sub.add_parser("tubings", parents=[common], help="maximal tubings of a graph family")
    s.add_argument("action", choices=("enumerate", "poset", "lattice-report"))
    s.add_argument("family", choices=GRAPH_FAMILIES)
    s.add_argument("n", type=int)
    s.add_argument("--center", type=int, default=None, help="star centre (default: node n)")
    s.add_argument("--dot", action="store_true", help="shorthand for --format dot")
    s.set_defaults(func=cmd_tubings)

    s = sub.add_parser("golden", parents=[common], help="run the acceptance suite")
    s.add_argument("--determinism", action="store_true", help="also compare two in-process runs")
    s.set_defaults(func=cmd_golden)
    return p


def run(argv=None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    out: list[str] = []
    try:
        code = args.func(args, out)
    except (UsageError, ValueError, KeyError) as exc:
        msg = exc.args[0] if exc.args else exc
        print(f"error: {msg}", file=sys.stderr)
        return 2
    text = "\n".join(out)
    if text:
        stdout.write(text + "\n")
    return code


def main() -> None:
    sys.exit(run())
