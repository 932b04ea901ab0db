"""Command-line front door.

Reads edge-list text, dispatches to a solver, and emits one structured
report (JSON with exact num/den rationals, or aligned text). Vertex labels
in the input may be arbitrary non-negative integers or strings; a
label <-> dense-id map is kept here so the core only ever sees dense ids.

Exit codes: 0 success, 1 malformed input, 2 infeasible parameters,
3 capacity refusal (brute force over its limit).
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from fractions import Fraction
from typing import Optional, Sequence, Union

from . import bruteforce, solvers
from .errors import CapacityError, MalformedInputError, ParameterError
from .flow import parametric_family
from .graph import Weight, WeightedGraph, as_weight, format_weight
from .peeling import chalk, charikar_densest, peel, w_core
from .results import SubgraphResult

SCHEMA_VERSION = 1

Label = Union[int, str]


def load_labeled_graph(text: str, weighted: bool) -> tuple[WeightedGraph, list[Label]]:
    """Parse edge-list text whose endpoint tokens may be arbitrary labels.

    All-integer files keep their numeric ids (gaps become isolated
    vertices, as in the core parser); otherwise labels are mapped to dense
    ids in order of first appearance.
    """
    rows: list[tuple[str, str, Weight]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) == 2:
            w: Weight = 1
        elif len(tokens) == 3 and weighted:
            w = as_weight(tokens[2])
        else:
            raise MalformedInputError(
                f"line {lineno}: expected 'u v'{' or u v w' if weighted else ''}, got {line!r}"
            )
        rows.append((tokens[0], tokens[1], w))

    if all(t.isdigit() for u, v, _ in rows for t in (u, v)):
        n = max((max(int(u), int(v)) for u, v, _ in rows), default=-1) + 1
        labels: list[Label] = list(range(n))
        edges = [(int(u), int(v), w) for u, v, w in rows]
    else:
        ids: dict[str, int] = {}
        for u, v, _ in rows:
            for t in (u, v):
                if t not in ids:
                    ids[t] = len(ids)
        labels = list(ids)
        edges = [(ids[u], ids[v], w) for u, v, w in rows]
    return WeightedGraph(len(labels), edges), labels


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise MalformedInputError(f"cannot read {path}: {exc}") from exc


def _rational(x: Weight) -> dict:
    f = Fraction(x)
    return {"num": f.numerator, "den": f.denominator, "float": float(f)}


def _vertices_out(vertices, labels: list[Label]) -> list[Label]:
    return [labels[v] for v in sorted(vertices)]


def _result_payload(res: SubgraphResult, labels: list[Label]) -> dict:
    return {
        "vertices": _vertices_out(res.vertices, labels),
        "size": res.size,
        "weight": _rational(res.weight),
        "density": _rational(res.density),
        "method": res.method,
        "guarantee": res.guarantee,
    }


def _render_text(report: dict) -> str:
    lines = []
    for key in ("command", "input", "n", "m"):
        lines.append(f"{key}: {report[key]}")
    lines.append(f"total_weight: {_rat_text(report['total_weight'])}")
    res = report["result"]
    lines.append(f"method: {res['method']}")
    lines.append(f"guarantee: {res['guarantee']}")
    lines.append(f"size: {res['size']}")
    lines.append(f"weight: {_rat_text(res['weight'])}")
    if res["density"] is None:
        lines.append("density: undefined (empty set)")
    else:
        lines.append(f"density: {_rat_text(res['density'])}")
    lines.append("vertices: " + " ".join(str(v) for v in res["vertices"]))
    if "trace" in report:
        lines.append(f"trace: {_trace_summary(report['trace'])}")
    lines.append(f"elapsed_ms: {report['elapsed_ms']:.2f}")
    return "\n".join(lines)


def _rat_text(r: dict) -> str:
    exact = str(r["num"]) if r["den"] == 1 else f"{r['num']}/{r['den']}"
    return f"{exact} ({r['float']})"


def _trace_summary(trace: dict) -> str:
    parts = []
    for key, val in trace.items():
        if isinstance(val, list):
            parts.append(f"{key}[{len(val)}]")
        else:
            parts.append(f"{key}={val}")
    return " ".join(parts)


def _emit(report: dict, as_json: bool) -> None:
    if as_json:
        print(json.dumps(report, indent=2))
    else:
        print(_render_text(report))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="densekit",
        description="Dense subgraph solvers over edge-list files.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", default="-", help="edge-list file, '-' for stdin")
    common.add_argument("--weighted", action="store_true", help="accept 'u v w' lines")
    common.add_argument("--json", action="store_true", help="emit a JSON report")
    common.add_argument("--seed", type=int, default=0, help="seed for generation")
    common.add_argument(
        "--exact-limit",
        type=int,
        default=bruteforce.DEFAULT_LIMIT,
        help="largest n accepted by brute-force enumeration",
    )

    p = sub.add_parser("densest", parents=[common], help="densest subgraph, any size")
    p.add_argument("--method", choices=["greedy", "flow", "exact"], default="greedy")

    p = sub.add_parser("dalks", parents=[common], help="densest subgraph on >= k vertices")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--method", choices=["greedy", "flow"], default="greedy")

    p = sub.add_parser("damks", parents=[common], help="densest subgraph on <= k vertices")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--method", choices=["peel", "exact"], default="peel")

    p = sub.add_parser("dks", parents=[common], help="densest subgraph on exactly k vertices")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--oracle", choices=["peel", "exact"], default="peel")

    p = sub.add_parser("cores", parents=[common], help="maximal subgraph with min degree >= w")
    p.add_argument("--w", required=True, help="degree threshold (int, decimal, or p/q)")

    sub.add_parser("peel", parents=[common], help="full peeling trace")

    sub.add_parser("parametric", parents=[common], help="breakpoints and nested maximizer chain")

    p = sub.add_parser("generate", parents=[common], help="emit a seeded random edge list")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)

    return parser


def _solve(args, g: WeightedGraph, labels: list[Label]) -> tuple[SubgraphResult | None, Optional[dict]]:
    """Run the requested solver; returns (result, extra trace payload)."""
    cmd = args.command
    if cmd == "densest":
        if args.method == "greedy":
            return charikar_densest(g), None
        if args.method == "flow":
            return solvers.exact_densest(g), None
        ans = bruteforce.brute_force(g, "densest", limit=args.exact_limit)
        return solvers.make_result(g, ans.witness, "brute-force", "exact"), None

    if cmd == "dalks":
        if args.method == "greedy":
            return chalk(g, args.k), None
        return solvers.dalks_2approx(g, args.k), None

    if cmd == "damks":
        if args.method == "peel":
            found = solvers.damks_peel_heuristic(g, args.k)
            return solvers.make_result(g, found, "peel-heuristic", "heuristic"), None
        found = solvers.damks_bruteforce_oracle(g, args.k, limit=args.exact_limit)
        return solvers.make_result(g, found, "brute-force", "exact"), None

    if cmd == "dks":
        oracle = (
            solvers.bruteforce_oracle(limit=args.exact_limit)
            if args.oracle == "exact"
            else solvers.peel_oracle()
        )
        res, trace = solvers.dks_via_damks(g, args.k, oracle)
        payload = {
            "rounds": [
                {
                    "vertices": _vertices_out(r.vertices, labels),
                    "size": r.size,
                    "weight": _rational(r.weight),
                    "density": _rational(r.density),
                }
                for r in trace.rounds
            ],
            "prefix_union_sizes": [len(u) for u in trace.prefix_unions],
        }
        return res, payload

    if cmd == "cores":
        core = w_core(g, as_weight(args.w))
        payload = {"threshold": format_weight(core.threshold), "index": core.index}
        if core.core:
            return solvers.make_result(g, core.core, "w-core", "exact"), payload
        return None, payload  # empty core; report built by caller

    if cmd == "peel":
        trace = peel(g)
        res = charikar_densest(g)
        payload = {
            "order": [labels[v] for v in trace.order],
            "removal_degrees": [_rational(r) for r in trace.removal_degrees],
            "suffix_weights": [_rational(w) for w in trace.suffix_weights],
        }
        return res, payload

    if cmd == "parametric":
        family = parametric_family(g)
        res = solvers.exact_densest(g, family=family)
        payload = {
            "breakpoints": [_rational(b) for b in family.breakpoints],
            "chain": [
                {
                    "size": len(s),
                    "weight": _rational(w),
                    "vertices": _vertices_out(s, labels),
                }
                for s, w in zip(family.chain, family.weights)
            ],
        }
        return res, payload

    raise AssertionError(f"unhandled command {cmd!r}")


def _run_generate(args) -> int:
    g = bruteforce.random_gnm(args.n, args.m, args.seed)
    rng = random.Random(args.seed)
    out = sys.stdout
    for u, v, _ in g.iter_edges():
        if args.weighted:
            out.write(f"{u} {v} {format_weight(bruteforce.random_weight(rng))}\n")
        else:
            out.write(f"{u} {v}\n")
    return 0


def run(args) -> int:
    if args.command == "generate":
        return _run_generate(args)

    g, labels = load_labeled_graph(_read_input(args.input), args.weighted)
    started = time.perf_counter()
    result, payload = _solve(args, g, labels)
    elapsed_ms = (time.perf_counter() - started) * 1000.0

    if result is not None:
        result_out = _result_payload(result, labels)
    else:
        result_out = {
            "vertices": [],
            "size": 0,
            "weight": _rational(0),
            "density": None,
            "method": "w-core",
            "guarantee": "exact",
        }
    report = {
        "schema_version": SCHEMA_VERSION,
        "command": args.command,
        "input": args.input,
        "n": g.n,
        "m": g.m,
        "total_weight": _rational(g.total_weight),
        "result": result_out,
        "elapsed_ms": elapsed_ms,
    }
    if payload is not None:
        report["trace"] = payload
    _emit(report, args.json)
    return 0


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return run(args)
    except MalformedInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ParameterError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except CapacityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
