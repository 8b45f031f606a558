"""Command line front end.

Subcommands::

    analyze --graph FILE [--checks LIST] [--json]
    multipartite --parts CSV [--emit-graph] [--json]
    validate [--max-partition-total N] [--max-random-n N] [--samples K] [--seed S] [--json]

Exit status: 0 success, 1 input error, 2 resource limit, 3 validation failures.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from .checkers import (
    canonical_shelling_multipartite,
    cohen_macaulay_verdict,
    find_shelling,
    is_unmixed,
    multipartite_is_cm,
    multipartite_is_shellable,
    multipartite_is_unmixed,
    multipartite_is_vd,
    vertex_decomposition,
)
from .complex import count_mis, independence_complex
from .errors import InputError, ResourceLimitError
from .graph import (
    Partition,
    chromatic_number,
    complete_multipartite,
    detect_multipartite,
    format_graph_text,
    parse_graph_text,
)
from .harness import Budgets, cross_validate

SCHEMA_VERSION = "1"
ALL_CHECKS = ("mis", "chromatic", "facets", "shellable", "vd", "unmixed", "cm")
_RESULT_KEY = {"vd": "vertex_decomposable"}

EXIT_OK, EXIT_INPUT, EXIT_LIMIT, EXIT_FAILED = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _parse_checks(text: str) -> list[str]:
    checks = [c.strip() for c in text.split(",") if c.strip()]
    unknown = sorted(set(checks) - set(ALL_CHECKS))
    if unknown:
        raise InputError(f"unknown checks {unknown}; choose from {','.join(ALL_CHECKS)}")
    # report order follows ALL_CHECKS, duplicates collapse
    return [c for c in ALL_CHECKS if c in checks]


def analyze_graph(g, checks=ALL_CHECKS) -> dict:
    """Build the analysis report for ``g``; ``timing_ms`` is the only nondeterministic field."""
    p = detect_multipartite(g) if g.n else None
    results: dict = {}
    timing: dict = {}
    complex_ = None

    def cx():
        nonlocal complex_
        if complex_ is None:
            complex_ = independence_complex(g)
        return complex_

    for check in checks:
        start = time.perf_counter()
        if check == "mis":
            results["mis"] = {"count": count_mis(g)}
        elif check == "chromatic":
            results["chromatic"] = {"value": chromatic_number(g)}
        elif check == "facets":
            results["facets"] = {"facets": cx().facet_lists()}
        elif check == "shellable":
            cert = find_shelling(cx())
            entry = {"value": cert is not None}
            if cert is not None:
                entry["certificate"] = cert.to_dict(cx())
            results["shellable"] = entry
        elif check == "vd":
            tree = vertex_decomposition(cx())
            entry = {"value": tree is not None}
            if tree is not None:
                entry["tree"] = tree.to_dict()
            results["vertex_decomposable"] = entry
        elif check == "unmixed":
            results["unmixed"] = {"value": is_unmixed(g)}
        elif check == "cm":
            verdict = cohen_macaulay_verdict(g)
            results["cm"] = {"state": verdict.state.value, "reason": verdict.reason.value}
        timing[_RESULT_KEY.get(check, check)] = round((time.perf_counter() - start) * 1000, 3)

    return {
        "schema_version": SCHEMA_VERSION,
        "input": {"n": g.n, "edge_count": g.edge_count, "partition": list(p.parts) if p else None},
        "results": results,
        "timing_ms": timing,
    }


def multipartite_report(p: Partition) -> dict:
    g = complete_multipartite(p)
    shellable = multipartite_is_shellable(p)
    canonical = None
    if shellable:
        cert = canonical_shelling_multipartite(p)
        canonical = cert.to_dict(independence_complex(g))
    return {
        "schema_version": SCHEMA_VERSION,
        "parts": list(p.parts),
        "total": p.total,
        "t": p.t,
        "edge_count": g.edge_count,
        "shellable": shellable,
        "vertex_decomposable": multipartite_is_vd(p),
        "unmixed": multipartite_is_unmixed(p),
        "cohen_macaulay": multipartite_is_cm(p),
        "canonical_shelling": canonical,
    }


def _render_analysis(report: dict) -> str:
    inp = report["input"]
    part = ",".join(map(str, inp["partition"])) if inp["partition"] else "-"
    lines = [f"n = {inp['n']}  edges = {inp['edge_count']}  multipartite = {part}"]
    for key, entry in report["results"].items():
        if key == "mis":
            value = entry["count"]
        elif key == "facets":
            value = " ".join("{" + ",".join(map(str, f)) + "}" for f in entry["facets"])
        elif key == "cm":
            value = f"{entry['state']} ({entry['reason']})"
        else:
            value = str(entry["value"]).lower()
        ms = report["timing_ms"][key]
        lines.append(f"  {key:<20} {value}   [{ms} ms]")
    return "\n".join(lines) + "\n"


def _render_multipartite(report: dict) -> str:
    lines = [f"partition {','.join(map(str, report['parts']))}  (n = {report['total']}, t = {report['t']})"]
    for key in ("shellable", "vertex_decomposable", "unmixed", "cohen_macaulay"):
        lines.append(f"  {key:<20} {str(report[key]).lower()}")
    if report["canonical_shelling"]:
        facets = report["canonical_shelling"]["facets"]
        lines.append("  shelling             " + " ".join("{" + ",".join(map(str, f)) + "}" for f in facets))
    return "\n".join(lines) + "\n"


def _render_validation(report: dict) -> str:
    lines = [f"{'check':<48} {'instances':>9} {'failures':>8}"]
    for c in report["checks"]:
        lines.append(f"{c['name']:<48} {c['instances']:>9} {c['failures']:>8}")
    lines.append("PASSED" if report["passed"] else "FAILED")
    for c in report["checks"]:
        if c["counterexample"]:
            lines.append(f"\ncounterexample for {c['name']}:\n{c['counterexample']}")
    return "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="indcomplex", description="Independence complexes of graphs and their properties.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    a = sub.add_parser("analyze", help="analyze a graph file")
    a.add_argument("--graph", required=True, type=Path)
    a.add_argument("--checks", default=",".join(ALL_CHECKS))
    a.add_argument("--json", action="store_true")

    m = sub.add_parser("multipartite", help="closed-form answers for a complete multipartite graph")
    m.add_argument("--parts", required=True)
    m.add_argument("--emit-graph", action="store_true")
    m.add_argument("--json", action="store_true")

    v = sub.add_parser("validate", help="cross-validate closed forms against the general checkers")
    v.add_argument("--max-partition-total", type=int, default=8)
    v.add_argument("--max-random-n", type=int, default=8)
    v.add_argument("--samples", type=int, default=200)
    v.add_argument("--seed", type=int, default=42)
    v.add_argument("--json", action="store_true")
    return parser


def run(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    out = sys.stdout
    try:
        if args.command == "analyze":
            try:
                text = args.graph.read_text(encoding="utf-8")
            except OSError as exc:
                raise InputError(f"cannot read {args.graph}: {exc.strerror}") from None
            report = analyze_graph(parse_graph_text(text), _parse_checks(args.checks))
            out.write(_dump(report) if args.json else _render_analysis(report))
        elif args.command == "multipartite":
            p = Partition.from_csv(args.parts)
            if args.emit_graph:
                out.write(format_graph_text(complete_multipartite(p), comment=f"complete multipartite {p}"))
            else:
                report = multipartite_report(p)
                out.write(_dump(report) if args.json else _render_multipartite(report))
        else:
            if min(args.max_partition_total, args.max_random_n, args.samples) < 1:
                raise InputError("validation budgets must be positive")
            budgets = Budgets(args.max_partition_total, args.max_random_n, args.samples, args.seed)
            report = cross_validate(budgets).to_dict()
            out.write(_dump(report) if args.json else _render_validation(report))
            if not report["passed"]:
                return EXIT_FAILED
    except InputError as exc:
        print(f"indcomplex: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ResourceLimitError as exc:
        print(f"indcomplex: resource limit: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    return EXIT_OK


def main() -> None:
    sys.exit(run())
