"""Command-line interface.

    hypercops copnum FILE [--max-k K] [--variant standard|active]
    hypercops dismantle FILE [--certificate OUT]
    hypercops twosection FILE [-o OUT]
    hypercops gen FAMILY PARAMS... [--seed S] [-o OUT]
    hypercops product FILE FILE... [-o OUT]
    hypercops prism FILE --n N --r R [-o OUT]
    hypercops play FILE --cops K --cop S --robber S --max-rounds M [...]
    hypercops verify [--suite ID] [--seed S] [--budget SECONDS] [--report OUT]

Exit status: 0 success, 1 verification failure, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .construct import ConstructionError, PrismSpec, cartesian_product, prism, render_label
from .core import HypergraphError
from .dismantle import dismantling_order
from .io import ParseError, as_string_labels, load_hypergraph, serialise_hypergraph, write_text
from .solver import (
    IllegalMoveError,
    PassCop,
    PassRobber,
    RandomCop,
    RandomRobber,
    Side,
    StrategyError,
    Variant,
    cop_number,
    extract_strategy,
    play_match,
    solve,
)
from .strategies import (
    hypertree_cop_strategy,
    mm_product_cop_strategy,
    multipartite_cop_strategy,
    multipartite_robber_evader,
    prism_cop_strategy,
    prism_robber_evader,
    product_robber_evader,
)
from .suites import SUITES, FamilyError, build_family, partition_from_expr, run_suite

COP_STRATEGIES = ("optimal", "hypertree", "mm", "prism", "multipartite", "random", "pass")
ROBBER_STRATEGIES = ("optimal", "evader-multipartite", "evader-product", "evader-prism", "random", "pass")

USAGE_ERRORS = (ParseError, FamilyError, HypergraphError, ConstructionError, StrategyError,
                IllegalMoveError, ValueError, OSError)


def _variant(name: str) -> Variant:
    return Variant.ACTIVE_ROBBER if name == "active" else Variant.STANDARD


def cmd_copnum(args) -> int:
    h = load_hypergraph(args.file)
    c = cop_number(h, args.max_k, _variant(args.variant))
    print(c if c is not None else f"> {args.max_k if args.max_k else len(h.vertices)}")
    return 0


def cmd_dismantle(args) -> int:
    h = load_hypergraph(args.file)
    cert = dismantling_order(h)
    if cert is None:
        print("not dismantlable")
        return 0
    print("dismantlable: " + " ".join(cert.ordering))
    if args.certificate:
        Path(args.certificate).write_text(json.dumps(cert.to_json(), indent=2) + "\n")
    return 0


def cmd_twosection(args) -> int:
    from .core import two_section
    write_text(args.output, serialise_hypergraph(two_section(load_hypergraph(args.file))))
    return 0


def cmd_gen(args) -> int:
    expr = " ".join([args.family, *args.params])
    h = build_family(expr, args.seed)
    write_text(args.output, serialise_hypergraph(as_string_labels(h), name=expr))
    return 0


def cmd_product(args) -> int:
    if len(args.files) < 2:
        raise ValueError("product needs at least two files")
    h = cartesian_product([load_hypergraph(f) for f in args.files])
    write_text(args.output, serialise_hypergraph(as_string_labels(h)))
    return 0


def cmd_prism(args) -> int:
    h = prism(PrismSpec(load_hypergraph(args.file), args.n, args.r))
    write_text(args.output, serialise_hypergraph(h))
    return 0


def _scripted_cop(name, args, k):
    if name == "hypertree":
        if not args.host:
            raise StrategyError("--host is required for the hypertree strategy")
        t = load_hypergraph(args.file)
        return None, hypertree_cop_strategy(t, load_hypergraph(args.host))
    if name == "mm":
        if len(args.factor or []) != 2:
            raise StrategyError("mm needs exactly two --factor tree files")
        s = mm_product_cop_strategy(*(load_hypergraph(f) for f in args.factor), variant=_variant(args.variant))
        return s.graph, s
    if name == "prism":
        if not (args.base and args.n and args.r):
            raise StrategyError("prism needs --base, --n and --r")
        base = load_hypergraph(args.base)
        inner = extract_strategy(solve(base, k), Side.COP)
        s = prism_cop_strategy(base, args.n, args.r, inner)
        return s.graph, s
    if name == "multipartite":
        if not args.partition:
            raise StrategyError("multipartite needs --partition (e.g. 'K 3 2,2,2')")
        s = multipartite_cop_strategy(partition_from_expr(args.partition))
        return s.graph, s
    return None, None


def _scripted_robber(name, args, k):
    if name == "evader-multipartite":
        if not args.partition:
            raise StrategyError("evader-multipartite needs --partition")
        s = multipartite_robber_evader(partition_from_expr(args.partition))
        return s.graph, s
    if name == "evader-product":
        if len(args.factor or []) != 2:
            raise StrategyError("evader-product needs exactly two --factor files")
        s = product_robber_evader(*(load_hypergraph(f) for f in args.factor))
        return s.graph, s
    if name == "evader-prism":
        if not (args.base and args.n and args.r):
            raise StrategyError("evader-prism needs --base, --n and --r")
        base = load_hypergraph(args.base)
        s = prism_robber_evader(base, args.n, args.r, extract_strategy(solve(base, k), Side.ROBBER))
        return s.graph, s
    return None, None


def cmd_play(args) -> int:
    h_file = load_hypergraph(args.file)
    variant = _variant(args.variant)
    k = args.cops
    g_cop, cop = _scripted_cop(args.cop, args, k)
    g_rob, robber = _scripted_robber(args.robber, args, k)
    native = None
    for g in (g_cop, g_rob):
        if g is None:
            continue
        rendered = as_string_labels(g)
        if set(rendered.vertices) != set(h_file.vertices) or set(rendered.edges) != set(h_file.edges):
            raise StrategyError("the strategy's hypergraph does not match the input file")
        native = native or g
    h = native or h_file
    if cop is None:
        if args.cop == "optimal":
            cop = extract_strategy(solve(h, k, variant), Side.COP, strict=False)
        elif args.cop == "random":
            cop = RandomCop(h, k, args.seed)
        else:
            cop = PassCop(h, k)
    if robber is None:
        if args.robber == "optimal":
            robber = extract_strategy(solve(h, k, variant), Side.ROBBER)
        elif args.robber == "random":
            robber = RandomRobber(h, variant, args.seed)
        else:
            robber = PassRobber(h)
    if cop.k != k:
        raise StrategyError(f"cop strategy {args.cop!r} plays {cop.k} cop(s), not {k}")
    trace = play_match(h, k, cop, robber, args.max_rounds, variant)
    text = json.dumps(trace.to_json(render_label), indent=2) + "\n"
    write_text(args.trace, text)
    return 0


def cmd_verify(args) -> int:
    report = run_suite(args.suite, args.budget, args.seed)
    for r in report.records:
        print(f"{r.status:7s} {r.name}  [{r.anchor}]")
    s = report.summary
    print(f"{s['PASS']} passed, {s['FAIL']} failed, {s['SKIPPED']} skipped")
    if args.report:
        out = Path(args.report)
        out.write_text(json.dumps(report.to_json(), indent=2, default=str) + "\n")
        out.with_suffix(".md").write_text(report.to_markdown())
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hypercops", description="Cops and Robber on hypergraphs")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("copnum", help="exact cop number")
    s.add_argument("file")
    s.add_argument("--max-k", type=int, default=None)
    s.add_argument("--variant", choices=("standard", "active"), default="standard")
    s.set_defaults(func=cmd_copnum)

    s = sub.add_parser("dismantle", help="dismantling order and certificate")
    s.add_argument("file")
    s.add_argument("--certificate")
    s.set_defaults(func=cmd_dismantle)

    s = sub.add_parser("twosection", help="2-section of a hypergraph")
    s.add_argument("file")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_twosection)

    s = sub.add_parser("gen", help="generate a family member",
                       description="families: path N | cycle N | complete N | hypercube D | edge a,b,c | "
                                   "K r n1,n2,.. | L r s n1,n2,.. | hypertree n max_edge edge_count | "
                                   "random n max_rank")
    s.add_argument("family")
    s.add_argument("params", nargs="*")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("product", help="Cartesian product of hypergraph files")
    s.add_argument("files", nargs="+")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_product)

    s = sub.add_parser("prism", help="prism hypergraph P(H, n, r)")
    s.add_argument("file")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--r", type=int, required=True)
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_prism)

    s = sub.add_parser("play", help="play one match and print its trace")
    s.add_argument("file")
    s.add_argument("--cops", type=int, required=True)
    s.add_argument("--cop", choices=COP_STRATEGIES, required=True)
    s.add_argument("--robber", choices=ROBBER_STRATEGIES, required=True)
    s.add_argument("--max-rounds", type=int, required=True)
    s.add_argument("--variant", choices=("standard", "active"), default="standard")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--host", help="host tree file (hypertree)")
    s.add_argument("--factor", action="append", help="factor file (mm, evader-product); give twice")
    s.add_argument("--base", help="prism base file (prism, evader-prism)")
    s.add_argument("--n", type=int)
    s.add_argument("--r", type=int)
    s.add_argument("--partition", help="multipartite descriptor, e.g. 'K 3 2,2,2' or 'L 4 2 1,1,2'")
    s.add_argument("--trace", help="write the trace JSON here instead of stdout")
    s.set_defaults(func=cmd_play)

    s = sub.add_parser("verify", help="run the verification suites")
    s.add_argument("--suite", default="ALL", type=str.upper, choices=SUITES)
    s.add_argument("--seed", type=int, default=1)
    s.add_argument("--budget", type=float, default=None, help="seconds; later checks are SKIPPED")
    s.add_argument("--report", help="JSON report path; a .md twin is written next to it")
    s.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except USAGE_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
