"""Command-line front end: ``arithcordial {construct,verify,search,equiv,zeta}``.

Exit codes: 0 success (cordial / equivalent / found), 1 negative verdict,
2 usage or data error.
"""

import argparse
import json
import sys
import time

from . import constructions as cons
from . import graphs as gr
from .equivalence import EquivalenceWitness, build_psi, verify_equivalence
from .errors import CordialError, PropertyViolation
from .expr import graph_from_expr
from .labeling import labeling_from_json, labeling_to_json, verify
from .search import count_cordial_labelings, find_cordial_labeling
from .structures import (
    ArithmeticStructure,
    PRODUCT,
    check_prop_balance,
    check_prop_congruence,
    check_prop_multiplicative,
    parse_structure,
    parse_zeta,
    residue_classes,
)

FAMILIES = (
    "star-jacobi",
    "ladder",
    "snake",
    "corona-path",
    "tensor-complete",
    "join-kayak",
    "join-path-cycle",
    "corona-k1",
    "corona-gh",
)


class UsageError(CordialError):
    pass


def _need(args, *names):
    for name in names:
        if getattr(args, name) is None:
            raise UsageError(f"--{name} is required for family {args.family}")


def _construct(args):
    fam = args.family
    if fam == "star-jacobi":
        eta = args.eta if args.eta is not None else args.p
        if eta is None:
            raise UsageError("--eta (or --p) is required for star-jacobi")
        return cons.label_star_jacobi(eta, args.m or 1, args.c or 1)
    _need(args, "p")
    if fam == "ladder":
        return cons.label_ladder(args.p)
    if fam == "snake":
        _need(args, "n")
        return cons.label_snake(args.n, args.p)
    if fam == "join-kayak":
        return cons.label_join_kayak(args.p)
    if fam == "join-path-cycle":
        return cons.label_join_path_cycle(args.p)
    _need(args, "g")
    g = graph_from_expr(args.g)
    if fam == "corona-path":
        return cons.label_corona_path(g, args.p)
    if fam == "tensor-complete":
        return cons.label_tensor_complete(g, args.p)
    if fam == "corona-k1":
        return cons.label_corona_k1(g, args.p)
    _need(args, "h", "m")
    return cons.label_corona_gh(g, graph_from_expr(args.h), args.p, args.m)


def _write_json(path, data):
    with open(path, "w") as fh:
        json.dump(data, fh, indent=2)
        fh.write("\n")


def _print_report(report, out):
    print(f"{'u':>4} {'v':>4} {'star':>8} {'res':>5} {'label':>5}  reason", file=out)
    for e in report.edges:
        print(f"{e.u:>4} {e.v:>4} {e.star:>8} {e.residue:>5} {e.label:>5}  {e.reason}", file=out)
    verdict = "cordial" if report.cordial else "NOT cordial"
    print(f"e0={report.e0} e1={report.e1} -> {verdict}", file=out)


def run_report(argv, structure, graph, report, elapsed):
    return {
        "command": list(argv),
        "structure": structure.spec,
        "graph": {"order": graph.order, "size": graph.size},
        "e0": report.e0,
        "e1": report.e1,
        "cordial": report.cordial,
        "report": report.to_json(),
        "elapsed_seconds": round(elapsed, 6),
    }


def cmd_construct(args, argv, out):
    t0 = time.perf_counter()
    result = _construct(args)
    report = result.report()
    data = result.to_json()
    data.update(run_report(argv, result.structure, result.graph, report, time.perf_counter() - t0))
    if args.graph_out:
        _write_json(args.graph_out, result.graph.to_json())
    if args.labels_out:
        _write_json(args.labels_out, labeling_to_json(result.labeling))
    if args.out:
        _write_json(args.out, data)
    else:
        print(f"{result.provenance}: {result.structure.spec}, order {result.graph.order}", file=out)
        _print_report(report, out)
        for note in result.notes:
            print(f"note: {note}", file=out)
    return 0 if report.cordial else 1


def _load_graph(args):
    if args.graph_expr:
        return graph_from_expr(args.graph_expr)
    if args.graph:
        return gr.load(args.graph)
    raise UsageError("give --graph-expr or --graph")


def cmd_verify(args, argv, out):
    graph = _load_graph(args)
    with open(args.labels) as fh:
        labels = labeling_from_json(json.load(fh))
    struct = parse_structure(args.structure, labels)
    t0 = time.perf_counter()
    report = verify(graph, labels, struct)
    if args.out:
        _write_json(args.out, run_report(argv, struct, graph, report, time.perf_counter() - t0))
    else:
        _print_report(report, out)
    return 0 if report.cordial else 1


def cmd_search(args, argv, out):
    graph = _load_graph(args)
    labels = range(args.label_start, args.label_start + graph.order)
    struct = parse_structure(args.structure, labels)
    prune = not args.no_prune
    if args.count:
        outcome = count_cordial_labelings(graph, struct, limit=min(args.limit, 9), prune=prune)
    else:
        outcome = find_cordial_labeling(graph, struct, limit=args.limit, prune=prune)
    data = {
        "command": list(argv),
        "structure": struct.spec,
        "graph": {"order": graph.order, "size": graph.size},
        "found": None if outcome.found is None else list(outcome.found),
        "count": outcome.count,
        "nodes_explored": outcome.nodes_explored,
        "exhausted": outcome.exhausted,
    }
    if outcome.found is not None:
        data["cordial"] = True
        data["report"] = verify(graph, outcome.found, struct).to_json()
    else:
        data["cordial"] = False
    if args.out:
        _write_json(args.out, data)
    else:
        if args.count:
            print(f"count={outcome.count}", file=out)
        if outcome.found is None:
            print("no cordial labeling exists", file=out)
        else:
            print("labels: " + " ".join(map(str, outcome.found)), file=out)
        print(f"nodes explored: {outcome.nodes_explored}", file=out)
    return 0 if outcome.found is not None else 1


def cmd_equiv(args, argv, out):
    z1, z2 = parse_zeta(args.zeta1), parse_zeta(args.zeta2)
    s1 = ArithmeticStructure(args.eta, z1, PRODUCT)
    s2 = ArithmeticStructure(args.eta, z2, PRODUCT)
    labels = tuple(range(1, args.eta * args.m + args.variant + 1))
    if args.psi:
        with open(args.psi) as fh:
            witness = EquivalenceWitness.from_json(json.load(fh))
        s1, s2 = s1.with_labels(labels), s2.with_labels(labels)
    else:
        try:
            witness = build_psi(args.eta, args.m, args.variant, s1, s2)
        except PropertyViolation as exc:
            print(f"property violation: {exc}", file=out)
            return 1
        s1, s2 = witness.source, witness.target
    if args.emit_psi:
        _write_json(args.emit_psi, witness.to_json())
    if args.check or args.psi:
        result = verify_equivalence(s1, s2, witness)
        if result:
            print(f"equivalent: {s1.spec} ~ {s2.spec} on S = {{1..{len(labels)}}}", file=out)
            return 0
        print(f"not equivalent: pair {result.pair} ({result.reason})", file=out)
        return 1
    for k, v in sorted(witness.psi.items()):
        print(f"{k} -> {v}", file=out)
    return 0


def cmd_zeta(args, argv, out):
    struct = parse_structure(args.structure)
    classes = residue_classes(struct)
    fmt = lambda xs: "{" + ",".join(map(str, xs)) + "}"
    if args.table:
        print("residue zeta", file=out)
        for r in range(1, struct.eta):
            z = struct.zeta_value(r)
            print(f"{r:>7} {'-' if z is None else z:>4}", file=out)
    print(f"A0={fmt(classes.A0)}", file=out)
    print(f"A1={fmt(classes.A1)}", file=out)
    print(f"NC={fmt(classes.NC)}", file=out)
    if args.props:
        for check in (check_prop_congruence, check_prop_balance, check_prop_multiplicative):
            res = check(struct)
            print(f"{res.name}: {'pass' if res else 'fail'} {res.detail}".rstrip(), file=out)
    return 0


def build_parser():
    parser = argparse.ArgumentParser(prog="arithcordial", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a labeling from one of the known constructions")
    p.add_argument("--family", required=True, choices=FAMILIES)
    for name in ("p", "n", "m", "c", "eta"):
        p.add_argument(f"--{name}", type=int)
    p.add_argument("--g", help="graph expression for G")
    p.add_argument("--h", help="graph expression for H")
    p.add_argument("--out")
    p.add_argument("--graph-out")
    p.add_argument("--labels-out")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="check a labeling")
    p.add_argument("--graph-expr")
    p.add_argument("--graph", help="edge-list or JSON graph file")
    p.add_argument("--labels", required=True)
    p.add_argument("--structure", required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", help="exhaustive search for a cordial labeling")
    p.add_argument("--graph-expr")
    p.add_argument("--graph")
    p.add_argument("--structure", required=True)
    p.add_argument("--count", action="store_true")
    p.add_argument("--limit", type=int, default=12)
    p.add_argument("--label-start", type=int, default=1)
    p.add_argument("--no-prune", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("equiv", help="build and check a structure equivalence")
    p.add_argument("--eta", type=int, required=True)
    p.add_argument("--m", type=int, default=1)
    p.add_argument("--variant", type=int, default=-1, choices=(-1, 0))
    p.add_argument("--zeta1", required=True)
    p.add_argument("--zeta2", required=True)
    p.add_argument("--emit-psi")
    p.add_argument("--psi", help="check this witness instead of building one")
    p.add_argument("--check", action="store_true")
    p.set_defaults(func=cmd_equiv)

    p = sub.add_parser("zeta", help="show the residue classes of a structure")
    p.add_argument("--structure", required=True)
    p.add_argument("--table", action="store_true")
    p.add_argument("--props", action="store_true")
    p.set_defaults(func=cmd_zeta)
    return parser


def run(argv=None, out=None):
    argv = sys.argv[1:] if argv is None else list(argv)
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    try:
        return args.func(args, argv, out)
    except (ValueError, OSError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
