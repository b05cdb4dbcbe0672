"""Command-line interface: one JSON report per run, deterministic key order.

Exit status is 0 on success, 1 when `verify` finds a failing criterion, and 2
on any input or usage error. Reports echo the input graph's canonical graph6
string so a report alone identifies the instance up to isomorphism.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from .bound_engine import (
    construct_dominating_set,
    extract_forbidden_witness,
    f_value,
    g_value,
    ramsey_upper,
    theorem_bound,
)
from .corpus import canonical_graph6
from .domination import gamma_exact, is_dominating
from .errors import DomcertError
from .graph_core import (
    Graph,
    bfs_layers,
    gen_complete,
    gen_empty,
    gen_k_star,
    gen_path,
    gen_s_star,
    min_eccentricity_vertex,
    parse_edge_list,
    parse_graph6,
    to_graph6,
)
from .subgraph import is_free, leq_relation
from .verify import DEFAULT_SEED, SUITE_NAMES, claw_graph, run_suites


class UsageError(DomcertError):
    """Invalid flag combination or malformed command input."""


# ---------------------------------------------------------------------------
# Input handling
# ---------------------------------------------------------------------------

def _add_graph_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--input", help="path to a graph file")
    parser.add_argument("--graph6", help="inline graph6 string")
    parser.add_argument(
        "--format",
        choices=("graph6", "edgelist"),
        default="graph6",
        help="input format (default graph6)",
    )


def _load_graph(args: argparse.Namespace) -> tuple[Graph, dict]:
    if (args.input is None) == (args.graph6 is None):
        raise UsageError("supply exactly one of --input or --graph6")
    if args.graph6 is not None:
        if args.format != "graph6":
            raise UsageError("--graph6 implies --format graph6")
        source, text = "inline", args.graph6
    else:
        source = args.input
        try:
            with open(args.input) as handle:
                text = handle.read()
        except OSError as exc:
            raise UsageError(f"cannot read {args.input}: {exc}") from exc
    if args.format == "graph6":
        lines = [line for line in text.splitlines() if line.strip()] or [text]
        graph = parse_graph6(lines[0])
    else:
        graph = parse_edge_list(text)
    descriptor = {
        "source": source,
        "format": args.format,
        "n": graph.n,
        "canonical_graph6": canonical_graph6(graph),
    }
    return graph, descriptor


_FAMILIES = {
    "path": gen_path,
    "complete": gen_complete,
    "empty": gen_empty,
    "kstar": gen_k_star,
    "sstar": gen_s_star,
}


def _make_family(family: str, size: Optional[int]) -> Graph:
    if family == "claw":
        if size not in (None, 3):
            raise UsageError("claw has no size parameter")
        return claw_graph()
    if size is None:
        raise UsageError(f"family {family!r} needs --size")
    return _FAMILIES[family](size)


def _parse_family_list(text: str) -> list[Graph]:
    """Comma-separated family:size tokens, e.g. 'kstar:3,path:5,claw'."""
    graphs = []
    for token in text.split(","):
        token = token.strip()
        if not token:
            continue
        name, _, size_text = token.partition(":")
        if name not in _FAMILIES and name != "claw":
            raise UsageError(f"unknown family {name!r} in {text!r}")
        size = None
        if size_text:
            try:
                size = int(size_text)
            except ValueError as exc:
                raise UsageError(f"bad size in token {token!r}") from exc
        graphs.append(_make_family(name, size))
    if not graphs:
        raise UsageError(f"no families given in {text!r}")
    return graphs


def _triple(args: argparse.Namespace) -> tuple[Optional[int], Optional[int], Optional[int]]:
    return args.k, args.l, args.m


# ---------------------------------------------------------------------------
# Command handlers: each returns (report dict, exit status)
# ---------------------------------------------------------------------------

def _cmd_gamma(args) -> tuple[dict, int]:
    graph, descriptor = _load_graph(args)
    result = gamma_exact(graph)
    report = {
        "command": "gamma",
        "input": descriptor,
        "parameters": {},
        "result": {"gamma": result.gamma, "witness": sorted(result.witness)},
    }
    return report, 0


def _cmd_free(args) -> tuple[dict, int]:
    graph, descriptor = _load_graph(args)
    k, ell, m = _triple(args)
    if k is None and ell is None and m is None:
        raise UsageError("free needs at least one of --k, --l, --m")
    patterns: list[tuple[str, int, Graph]] = []
    if k is not None:
        patterns.append(("kstar", k, gen_k_star(k)))
    if ell is not None:
        patterns.append(("sstar", ell, gen_s_star(ell)))
    if m is not None:
        patterns.append(("path", m, gen_path(m)))
    outcome = is_free(graph, [g for _, _, g in patterns])
    result = {
        "free": outcome.free,
        "violated_family": None,
        "violated_size": None,
        "embedding": None,
    }
    if not outcome.free:
        name, size, _ = patterns[outcome.violated_index]
        result["violated_family"] = name
        result["violated_size"] = size
        result["embedding"] = list(outcome.embedding.mapping)
    report = {
        "command": "free",
        "input": descriptor,
        "parameters": {"k": k, "l": ell, "m": m},
        "result": result,
    }
    return report, 0


def _report_bound(report_obj) -> dict:
    return {
        "root": report_obj.root,
        "layer_sizes": list(report_obj.layer_sizes),
        "total_size": report_obj.total_size,
        "k": report_obj.k,
        "l": report_obj.ell,
        "m": report_obj.m,
        "layer_bounds": (
            None if report_obj.layer_bounds is None else list(report_obj.layer_bounds)
        ),
        "total_bound": report_obj.total_bound,
        "bound_held": report_obj.bound_held,
        "freeness_checked": report_obj.freeness_checked,
    }


def _cmd_dominate(args) -> tuple[dict, int]:
    graph, descriptor = _load_graph(args)
    k, ell, m = _triple(args)
    dominating, bound = construct_dominating_set(
        graph,
        root=args.root,
        k=k,
        ell=ell,
        m=m,
        verify_freeness=args.verify_freeness,
    )
    report = {
        "command": "dominate",
        "input": descriptor,
        "parameters": {
            "root": args.root,
            "k": k,
            "l": ell,
            "m": m,
            "verify_freeness": args.verify_freeness,
        },
        "result": {
            "dominating_set": sorted(dominating),
            "size": len(dominating),
            "is_dominating": is_dominating(graph, dominating),
        },
        "bound_report": _report_bound(bound),
    }
    return report, 0


def _cmd_witness(args) -> tuple[dict, int]:
    graph, descriptor = _load_graph(args)
    root = args.root if args.root is not None else min_eccentricity_vertex(graph)
    layers = bfs_layers(graph, root)
    witness = extract_forbidden_witness(graph, layers, args.layer, args.k, args.l)
    witnesses = []
    if witness is not None:
        witnesses.append(
            {
                "shape": witness.shape,
                "size": witness.size,
                "embedding": list(witness.embedding.mapping),
            }
        )
    report = {
        "command": "witness",
        "input": descriptor,
        "parameters": {"root": root, "layer": args.layer, "k": args.k, "l": args.l},
        "result": {"found": witness is not None},
        "witnesses": witnesses,
    }
    return report, 0


def _cmd_leq(args) -> tuple[dict, int]:
    first = _parse_family_list(args.first)
    second = _parse_family_list(args.second)
    holds = leq_relation(first, second)
    report = {
        "command": "leq",
        "input": None,
        "parameters": {"first": args.first, "second": args.second},
        "result": {"holds": holds},
    }
    return report, 0


def _cmd_bounds(args) -> tuple[dict, int]:
    if args.k is None or args.l is None:
        raise UsageError("bounds needs --k and --l")
    if (args.i is None) == (args.m is None):
        raise UsageError("bounds needs exactly one of --i or --m")
    ramsey = ramsey_upper(args.k, args.l)
    ramsey_obj = {
        "s": ramsey.s,
        "t": ramsey.t,
        "bound": ramsey.bound,
        "kind": ramsey.kind,
    }
    if args.i is not None:
        result = {
            "ramsey": ramsey_obj,
            "i": args.i,
            "g": g_value(args.k, args.l, args.i),
            "f": f_value(args.k, args.l, args.i) if args.i >= 2 else None,
        }
        parameters = {"k": args.k, "l": args.l, "i": args.i, "m": None}
    else:
        rows = [
            {"i": i, "g": g_value(args.k, args.l, i), "f": f_value(args.k, args.l, i)}
            for i in range(2, args.m - 1)
        ]
        result = {
            "ramsey": ramsey_obj,
            "theorem_bound": theorem_bound(args.k, args.l, args.m),
            "rows": rows,
        }
        parameters = {"k": args.k, "l": args.l, "i": None, "m": args.m}
    report = {
        "command": "bounds",
        "input": None,
        "parameters": parameters,
        "result": result,
    }
    return report, 0


def _cmd_gen(args) -> tuple[dict, int]:
    graph = _make_family(args.family, args.size)
    report = {
        "command": "gen",
        "input": None,
        "parameters": {"family": args.family, "size": args.size},
        "result": {"n": graph.n, "graph6": to_graph6(graph)},
    }
    return report, 0


def _cmd_verify(args) -> tuple[dict, int]:
    names = args.suite if args.suite else None
    try:
        results = run_suites(names, seed=args.seed)
    except FileNotFoundError as exc:
        raise UsageError(f"fixture corpus missing: {exc}") from exc
    failed = [r.name for r in results if not r.passed]
    report = {
        "command": "verify",
        "input": None,
        "parameters": {
            "suites": list(names) if names else list(SUITE_NAMES),
            "seed": args.seed,
        },
        "result": {"passed": not failed, "failed": failed},
        "criteria": [
            {"name": r.name, "passed": r.passed, "detail": r.detail} for r in results
        ],
    }
    return report, 1 if failed else 0


# ---------------------------------------------------------------------------
# Parser assembly
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="domcert",
        description="Dominating sets with certified size bounds and "
        "forbidden-subgraph witnesses.",
    )
    parser.add_argument("--output", help="write the report to this path")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gamma", help="exact domination number")
    _add_graph_options(p)
    p.set_defaults(handler=_cmd_gamma)

    p = sub.add_parser("free", help="induced-freeness of K*_k, S*_l, P_m")
    _add_graph_options(p)
    p.add_argument("--k", type=int)
    p.add_argument("--l", type=int)
    p.add_argument("--m", type=int)
    p.set_defaults(handler=_cmd_free)

    p = sub.add_parser("dominate", help="layered dominating-set construction")
    _add_graph_options(p)
    p.add_argument("--root", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--l", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--verify-freeness", action="store_true")
    p.set_defaults(handler=_cmd_dominate)

    p = sub.add_parser("witness", help="extract a forbidden-subgraph witness")
    _add_graph_options(p)
    p.add_argument("--root", type=int)
    p.add_argument("--layer", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.set_defaults(handler=_cmd_witness)

    p = sub.add_parser("leq", help="order between forbidden families")
    p.add_argument("--first", required=True, help="e.g. 'kstar:2,sstar:2,path:5'")
    p.add_argument("--second", required=True)
    p.set_defaults(handler=_cmd_leq)

    p = sub.add_parser("bounds", help="bound-function table")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--i", type=int)
    p.add_argument("--m", type=int)
    p.set_defaults(handler=_cmd_bounds)

    p = sub.add_parser("gen", help="emit a named family graph")
    p.add_argument(
        "--family",
        required=True,
        choices=("path", "complete", "empty", "kstar", "sstar", "claw"),
    )
    p.add_argument("--size", type=int)
    p.set_defaults(handler=_cmd_gen)

    p = sub.add_parser("verify", help="run acceptance suites")
    p.add_argument("--suite", action="append", choices=SUITE_NAMES)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.set_defaults(handler=_cmd_verify)

    return parser


def _emit(report: dict, output: Optional[str]) -> None:
    text = json.dumps(report, indent=2) + "\n"
    if output is None:
        sys.stdout.write(text)
    else:
        with open(output, "w") as handle:
            handle.write(text)


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        report, status = args.handler(args)
    except DomcertError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _emit(report, args.output)
    return status


if __name__ == "__main__":
    sys.exit(main())
