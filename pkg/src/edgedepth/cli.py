"""Command line interface.

Exit codes: 0 success, 2 input/parse error, 3 size cap exceeded,
4 cross-check mismatch, 5 internal invariant violation.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import assoc, depth, graphs, monomials, simplicial, stability
from .errors import (
    EdgeIdealError,
    GraphError,
    InternalError,
    MismatchError,
    NoFullStateError,
    ParseError,
    TooLargeError,
    WitnessCheckFailedError,
)

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_CAPS = 3
EXIT_MISMATCH = 4
EXIT_INTERNAL = 5


def _field_from_arg(spec: str) -> simplicial.FieldChoice:
    if spec == "q":
        return simplicial.QQ
    if spec.startswith("gf:"):
        try:
            return simplicial.FieldChoice.gf(int(spec[3:]))
        except ValueError as exc:
            raise ParseError(str(exc)) from None
    raise ParseError(f"unknown field {spec!r}; use 'q' or 'gf:<p>'")


def _emit(payload: dict, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(payload, sort_keys=True, indent=2))
        return
    for key in sorted(payload):
        value = payload[key]
        if isinstance(value, (list, dict)):
            value = json.dumps(value, sort_keys=True)
        print(f"{key}: {value}")


def _load_graph(path: str, max_r: int) -> graphs.Graph:
    g = graphs.read_graph_file(path)
    if g.r > max_r:
        raise TooLargeError(f"graph has {g.r} vertices, cap is {max_r}")
    return g


def _component_payload(g: graphs.Graph) -> list[dict]:
    dec = graphs.decompose(g)
    out = []
    for comp, bipart in zip(dec.components, dec.bipartitions):
        sub, _ = graphs.induced_subgraph(g, comp)
        prof = graphs.cycle_profile(sub)
        out.append(
            {
                "vertices": list(comp),
                "bipartite": bipart is not None,
                "bipartition": [list(bipart[0]), list(bipart[1])] if bipart else None,
                "kind": prof.kind,
                "max_even_cycle": prof.max_even_len,
                "max_odd_cycle": prof.max_odd_len,
            }
        )
    return out


def cmd_analyze(args) -> int:
    g = _load_graph(args.graph, args.max_r)
    dec = graphs.decompose(g)
    payload = {
        "vertices": g.r,
        "edges": g.num_edges,
        "leaf_edges": graphs.leaf_edges(g),
        "component_count": dec.p,
        "bipartite_components": dec.s,
        "nonbipartite_components": dec.t,
        "limit_depth": stability.depth_limit(g),
        "mt_bound": stability.mt_bound(g),
        "components": _component_payload(g),
    }
    _emit(payload, args.format)
    return EXIT_OK


def cmd_dstab(args) -> int:
    g = _load_graph(args.graph, args.max_r)
    payload: dict = {}
    formula_report = None
    if args.method in ("formula", "both"):
        formula_report = stability.dstab_formula(g)
        payload["formula"] = formula_report.to_json()
    if args.method in ("oracle", "both"):
        oracle = stability.dstab_oracle(g)
        payload["oracle"] = oracle
        if formula_report is not None:
            payload["match"] = (not formula_report.exact) or formula_report.value == oracle
            if formula_report.exact and formula_report.value != oracle:
                _emit(payload, args.format)
                raise MismatchError(
                    f"formula {formula_report.value} != oracle {oracle}"
                )
    _emit(payload, args.format)
    return EXIT_OK


def cmd_depth_seq(args) -> int:
    g = _load_graph(args.graph, args.max_r)
    if args.max_power < 1:
        raise ParseError("--max-power must be >= 1")
    field = _field_from_arg(args.field)
    seq = depth.depth_sequence(g, args.max_power, field=field)
    s = stability.depth_limit(g)
    first = next((i + 1 for i, d in enumerate(seq) if d == s), None)
    payload = {"depths": seq, "limit_depth": s, "first_at_limit": first}
    if args.verify:
        ideal = monomials.edge_ideal(g)
        for n in range(1, args.max_power + 1):
            other = depth.betti_depth_crosscheck(monomials.power(ideal, n), field=field)
            if other != seq[n - 1]:
                raise MismatchError(
                    f"power {n}: scan depth {seq[n - 1]} != betti depth {other}"
                )
        payload["verified"] = True
    _emit(payload, args.format)
    return EXIT_OK


def cmd_ass(args) -> int:
    g = _load_graph(args.graph, args.max_r)
    n = args.power
    if n < 1:
        raise ParseError("--power must be >= 1")
    method = args.method
    if method == "auto":
        try:
            assoc.ass_formula(g, n)
            method = "both"
        except EdgeIdealError:
            method = "bruteforce"
    payload: dict = {"power": n}
    formula_result = brute_result = None
    if method in ("formula", "both"):
        if args.trace:
            prof = graphs.cycle_profile(g)
            k = (len(prof.unique_cycle) + 1) // 2
            if n >= k:
                assoc.cover_states(g, n, trace=True)
        formula_result = assoc.ass_formula(g, n)
        payload["formula"] = [list(p) for p in formula_result]
    if method in ("bruteforce", "both"):
        ideal = monomials.power(monomials.edge_ideal(g), n)
        brute_result = monomials.associated_primes_bruteforce(ideal)
        payload["bruteforce"] = [list(p) for p in brute_result]
    if formula_result is not None and brute_result is not None:
        if formula_result != brute_result:
            _emit(payload, args.format)
            raise MismatchError("formula and brute-force associated primes differ")
        payload["match"] = True
    _emit(payload, args.format)
    return EXIT_OK


def cmd_homology(args) -> int:
    try:
        facets = json.loads(args.facets)
        if not isinstance(facets, list):
            raise ValueError("facets must be a JSON list of lists")
        universe = set()
        for f in facets:
            universe.update(int(v) for v in f)
    except (ValueError, TypeError) as exc:
        raise ParseError(f"bad facet list: {exc}") from None
    field = _field_from_arg(args.field)
    cx = simplicial.from_facets(universe, facets)
    dims = simplicial.reduced_homology_dims(cx, field=field)
    payload = {
        "field": str(field),
        "dims": {str(d): dims[d] for d in sorted(dims)},
        "facets": [list(f) for f in cx.facets],
    }
    _emit(payload, args.format)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="edgedepth",
        description="Depth stability of powers of edge ideals",
    )
    parser.add_argument("--format", choices=("text", "json"), default="text")
    parser.add_argument("--field", default="q", help="coefficient field: q or gf:<p>")
    parser.add_argument("--max-r", type=int, default=10, help="vertex-count cap")
    parser.add_argument("--threads", type=int, default=1, help="reserved; must be >= 1")
    parser.add_argument("--trace", action="store_true", help="debug trace to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="graph invariants and component structure")
    p.add_argument("graph")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("dstab", help="index of depth stability")
    p.add_argument("graph")
    p.add_argument("--method", choices=("formula", "oracle", "both"), default="both")
    p.set_defaults(func=cmd_dstab)

    p = sub.add_parser("depth-seq", help="depth of R/I^n for n = 1..max")
    p.add_argument("graph")
    p.add_argument("--max-power", type=int, required=True)
    p.add_argument("--verify", action="store_true", help="cross-check via Betti numbers")
    p.set_defaults(func=cmd_depth_seq)

    p = sub.add_parser("ass", help="associated primes of R/I^n")
    p.add_argument("graph")
    p.add_argument("--power", type=int, required=True)
    p.add_argument(
        "--method", choices=("formula", "bruteforce", "both", "auto"), default="auto"
    )
    p.set_defaults(func=cmd_ass)

    p = sub.add_parser("homology", help="reduced homology of a simplicial complex")
    p.add_argument("--facets", required=True, help="JSON list of facets")
    p.set_defaults(func=cmd_homology)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.threads < 1:
        print("error: --threads must be >= 1", file=sys.stderr)
        return EXIT_PARSE
    try:
        return args.func(args)
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (ParseError, GraphError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except TooLargeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAPS
    except MismatchError as exc:
        print(f"mismatch: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except (InternalError, NoFullStateError, WitnessCheckFailedError) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
