"""Command line front end.

Subcommands: alt-basis, reduce, coeff, cup, betti, graph, verify.
Output is deterministic for a fixed argument list (including the seed);
--format json wraps every result in a {command, params, result} envelope
matching the schema shipped under altperm/schemas/.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import verify as ver
from .blockperm import (
    BlockPerm,
    alt_basis,
    format_index_set,
    parse_index_set,
    parse_perm,
)
from .cache import open_cache
from .coeffgraph import (
    arcs_json,
    build_graph,
    emit_dot,
    graph_coeff,
    reachable_ascending,
    walk_coeff,
)
from .homology import betti_formula, express_in_alt_basis
from .ring import cup, rearrangement_sign
from .straighten import FormalSum, normal_form, rewrite_coeff

USAGE_ERROR = 2


def _envelope(command: str, params: dict, result) -> str:
    doc = {"command": command, "params": params, "result": result}
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def _term_lines(vec: FormalSum) -> list[str]:
    items = sorted(vec.items(), key=lambda t: t[0].entries)
    if not items:
        return ["0"]
    return [f"{'+' if c > 0 else '-'}{abs(c)} {p}" for p, c in items]


def cmd_alt_basis(args) -> int:
    I = parse_index_set(args.set)
    basis = alt_basis(I)
    result = {
        "index_set": format_index_set(I),
        "count": len(basis),
        "basis": [str(a) for a in basis],
    }
    if args.format == "json":
        sys.stdout.write(_envelope("alt-basis", {"set": args.set}, result))
    else:
        for a in basis:
            print(a)
        print(f"count: {len(basis)}")
    return 0


def cmd_reduce(args) -> int:
    x = parse_perm(args.perm)
    cache = open_cache(args.cache_dir)
    key = f"{format_index_set(x.index_set)}|{x}"
    payload = cache.load("normal-form", key) if cache else None
    if payload is None:
        vec = normal_form(x)
        payload = vec.to_json()
        if cache:
            cache.store("normal-form", key, payload)
    result = {"perm": str(x), "normal_form": payload}
    if args.format == "json":
        sys.stdout.write(_envelope("reduce", {"perm": args.perm}, result))
    else:
        vec = FormalSum.from_json(x.index_set, payload)
        for line in _term_lines(vec):
            print(line)
    return 0


def cmd_coeff(args) -> int:
    alpha = parse_perm(args.alpha)
    x = parse_perm(args.x)
    if alpha.index_set != x.index_set:
        raise ValueError("alpha and x must live on the same index set")
    method = args.method or "memo"
    if method == "rewrite":
        value = rewrite_coeff(alpha, x)
    elif method == "walks":
        value = walk_coeff(build_graph(alpha.index_set), alpha, x)
    elif method == "memo":
        value = graph_coeff(build_graph(alpha.index_set), alpha, x)
    elif method == "homology":
        value = express_in_alt_basis(x)[alpha]
    else:
        raise ValueError(f"unknown method {method!r}")
    result = {"alpha": str(alpha), "x": str(x), "method": method, "value": str(value)}
    if args.format == "json":
        sys.stdout.write(_envelope("coeff", {"alpha": args.alpha, "x": args.x, "method": method}, result))
    else:
        print(value)
    return 0


def _parse_graded(text: str) -> FormalSum:
    if ":" not in text:
        raise ValueError("expected GRADE:PERM, e.g. 1,3,4,6:1,4/3,6")
    grade, perm = text.split(":", 1)
    I = parse_index_set(grade)
    if not perm.strip():
        if I:
            raise ValueError("empty permutation only lives on the empty grade")
        return FormalSum((), {BlockPerm(()): 1})
    x = parse_perm(perm)
    if x.index_set != I:
        raise ValueError(f"{x} does not live on grade {I}")
    return normal_form(x)


def cmd_cup(args) -> int:
    a = _parse_graded(args.a)
    b = _parse_graded(args.b)
    cache = open_cache(args.cache_dir)
    key = f"{format_index_set(a.index_set)}|{format_index_set(b.index_set)}|{args.a}|{args.b}"
    payload = cache.load("cup", key) if cache else None
    product = None
    if payload is None:
        product = cup(a, b)
        payload = product.to_json()
        if cache:
            cache.store("cup", key, payload)
    if product is None:
        union_or_diff = tuple(sorted(set(a.index_set) ^ set(b.index_set)))
        product = FormalSum.from_json(union_or_diff, payload)
    result = {"index_set": format_index_set(product.index_set), "terms": payload}
    if args.format == "json":
        sys.stdout.write(_envelope("cup", {"a": args.a, "b": args.b}, result))
    else:
        for line in _term_lines(product):
            print(line)
    return 0


def cmd_betti(args) -> int:
    if args.n is None or args.n < 1:
        raise ValueError("--n must be a positive integer")
    betti = betti_formula(args.n)
    result = {"n": args.n, "betti": betti}
    if args.format == "json":
        sys.stdout.write(_envelope("betti", {"n": args.n}, result))
    else:
        for k, b in enumerate(betti):
            print(f"k={k}: {b}")
    return 0


def cmd_graph(args) -> int:
    I = parse_index_set(args.set)
    graph = build_graph(I)
    restrict = None
    if args.alpha:
        source = parse_perm(args.alpha)
        restrict = sorted(reachable_ascending(graph, source), key=lambda p: p.entries)
    if args.dot or args.format == "dot":
        sys.stdout.write(emit_dot(graph, restrict_to=restrict, include_loops=not args.alpha))
        return 0
    arcs = arcs_json(graph, restrict_to=restrict)
    if args.alpha:
        arcs = [a for a in arcs if a["alpha"] != a["x"]]
    result = {"index_set": format_index_set(I), "arcs": arcs}
    if args.format == "json":
        params = {"set": args.set, "alpha": args.alpha or ""}
        sys.stdout.write(_envelope("graph", params, result))
    else:
        for arc in arcs:
            print(f"{arc['alpha']} ->{arc['weight']} {arc['x']}")
    return 0


def cmd_verify(args) -> int:
    n = args.n if args.n is not None else 3
    seed = args.seed if args.seed is not None else ver.DEFAULT_SEED
    trials = args.trials if args.trials is not None else 25
    report = ver.run_all(n, seed=seed, trials=trials)
    params = {"n": n, "seed": seed, "trials": trials}
    if args.format == "json":
        sys.stdout.write(_envelope("verify", params, report))
    else:
        for suite in report["suites"]:
            status = "pass" if suite["passed"] else "FAIL"
            print(f"{suite['name']}: {status} ({suite['checks']} checks)")
            for witness in suite["failures"]:
                print(f"  witness: {witness}")
        monitor = report["conjecture_monitor"]
        print(
            f"coefficient monitor: {monitor['coefficients_observed']} observed, "
            f"{monitor['nonzero']} nonzero, "
            f"all nonzero unit: {monitor['all_nonzero_are_unit']}"
        )
    return 0 if report["ok"] else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="altperm",
        description="Exact cohomology rings of real permutohedral varieties on the alternating-permutation model.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("text", "json", "dot"), default="text")
        p.add_argument("--cache-dir", default=None)
        p.add_argument("--seed", type=int, default=None)
        p.add_argument("--trials", type=int, default=None)

    p = sub.add_parser("alt-basis", help="list the alternating permutations on a set")
    p.add_argument("--set", required=True, help="comma-separated ascending integers")
    common(p)
    p.set_defaults(func=cmd_alt_basis)

    p = sub.add_parser("reduce", help="normal form of a permutation")
    p.add_argument("--perm", required=True, help="block notation, e.g. 1,2/3,4")
    common(p)
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("coeff", help="straightening coefficient of alpha in x")
    p.add_argument("--alpha", required=True)
    p.add_argument("--x", required=True)
    p.add_argument("--method", choices=("walks", "memo", "rewrite", "homology"), default=None)
    common(p)
    p.set_defaults(func=cmd_coeff)

    p = sub.add_parser("cup", help="product of two graded basis elements")
    p.add_argument("--a", required=True, help="GRADE:PERM, e.g. 1,3,4,6:1,4/3,6")
    p.add_argument("--b", required=True, help="GRADE:PERM, e.g. 2,5:2,5")
    common(p)
    p.set_defaults(func=cmd_cup)

    p = sub.add_parser("betti", help="graded ranks for a given ambient rank")
    p.add_argument("--n", type=int, required=True)
    common(p)
    p.set_defaults(func=cmd_betti)

    p = sub.add_parser("graph", help="coefficient digraph of an index set")
    p.add_argument("--set", required=True)
    p.add_argument("--alpha", default=None, help="restrict to ascending vertices reachable from here")
    p.add_argument("--dot", action="store_true", help="emit DOT text")
    common(p)
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("verify", help="run the invariant suites")
    p.add_argument("--n", type=int, default=None)
    common(p)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE_ERROR if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
