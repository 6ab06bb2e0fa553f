"""
Descent Census - CLI Commands
Each handler takes the parsed arguments, writes its result to stdout and
returns the exit code. Status lines go to stderr.
"""
import csv
import io
import json
import sys
from argparse import Namespace

from census.config import settings
from census.models import FamilyTable, VerificationReport
from census.services import chromatic_service, family_service, identity_service, oracle_service, table_service
from census.services.poly_service import MultiPoly, pretty, to_json

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


def status(message: str) -> None:
    print(message, file=sys.stderr)


def emit(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


def _csv(rows: list[list]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerows(rows)
    return buffer.getvalue()


# ============== Rendering ==============

def render_poly(p: MultiPoly, fmt: str) -> str:
    if fmt == "json":
        return _json(to_json(p))
    return pretty(p)


def render_table(table: FamilyTable, fmt: str) -> str:
    header = [table.row_header] + [f"n={n}" for n in table.n_values]
    body = [[row.label] + row.values for row in table.rows]
    total = ["TOTAL"] + table.totals
    if fmt == "json":
        return _json(table.model_dump())
    if fmt == "csv":
        return _csv([header] + body + [total])
    cells = [header] + [[str(v) for v in line] for line in body + [total]]
    widths = [max(len(line[k]) for line in cells) for k in range(len(header))]
    return "\n".join("  ".join(cell.rjust(w) for cell, w in zip(line, widths)) for line in cells)


def render_checks(report: VerificationReport, fmt: str) -> str:
    if fmt == "json":
        return _json({"suite": report.suite, "passed": report.passed, "checks": [c.model_dump() for c in report.checks]})
    if fmt == "csv":
        return _csv([["name", "n", "passed", "detail"]] + [
            [c.name, "" if c.n is None else c.n, c.passed, c.detail] for c in report.checks
        ])
    lines = []
    for check in report.checks:
        where = "" if check.n is None else f" (n={check.n})"
        mark = "✅" if check.passed else "❌"
        lines.append(f"{mark} {check.name}{where}" + ("" if check.passed else f": {check.detail}"))
    lines.append(f"{len(report.checks) - len(report.failures)}/{len(report.checks)} checks passed")
    return "\n".join(lines)


def _finish(report: VerificationReport, fmt: str) -> int:
    emit(render_checks(report, fmt))
    if report.passed:
        status(f"✅ {report.suite}: all {len(report.checks)} checks passed")
        return EXIT_OK
    status(f"❌ {report.suite}: {len(report.failures)} of {len(report.checks)} checks failed")
    return EXIT_FAILED


# ============== Commands ==============

def cmd_table(args: Namespace) -> int:
    """Family coefficients laid out like the printed tables"""
    n_values = table_service.parse_n_range(args.n)
    specialization = "uy" if args.uy else "u1" if args.u1 else "y1" if args.y1 else "none"
    status(f"📊 {args.family} for n={n_values[0]}..{n_values[-1]}")
    table = table_service.build_family_table(args.family, n_values, specialization)
    emit(render_table(table, args.format))
    return EXIT_OK


def cmd_verify(args: Namespace) -> int:
    status(f"🔍 Running {args.suite} suite" + (" (long)" if args.long else ""))
    report = identity_service.run_suite(args.suite, n_max=args.n, long=args.long, threads=args.threads)
    return _finish(report, args.format)


def cmd_series(args: Namespace) -> int:
    if args.order > settings.series_order_limit:
        raise ValueError(f"order {args.order} exceeds the limit {settings.series_order_limit}")
    status(f"🧮 {args.identity} to order {args.order}")
    report = VerificationReport(suite=f"series {args.identity}")
    report.extend(identity_service.run_series_identity(args.identity, args.order))
    return _finish(report, args.format)


def cmd_chromatic(args: Namespace) -> int:
    graph = chromatic_service.load_graph(args.graph)
    status(f"🎨 Graph on {graph.n} vertices with {len(graph.edges)} edges")
    if args.reciprocity:
        report = VerificationReport(suite="reciprocity", checks=[chromatic_service.reciprocity_check(graph)])
        return _finish(report, args.format)
    if args.interpolate:
        value = chromatic_service.refined_chromatic_poly(graph, "interpolate")
    else:
        value = chromatic_service.refined_chromatic_poly(graph, "evaluate", colors=args.colors)
    emit(render_poly(value, args.format))
    return EXIT_OK


def cmd_poly(args: Namespace) -> int:
    """One family polynomial, raw"""
    result = family_service.family_polynomial(args.family, args.n, args.method)
    if args.format == "json":
        emit(_json({"family": result.family, "n": result.n, "provenance": result.provenance, "value": to_json(result.value)}))
    else:
        emit(pretty(result.value))
    return EXIT_OK


def cmd_oracle(args: Namespace) -> int:
    """Raw enumeration histogram"""
    if args.stats and args.kind != "digraphs":
        raise ValueError(f"--stats applies to digraphs only, not {args.kind}")
    if args.filter and args.kind == "trees":
        raise ValueError("--filter does not apply to trees")
    status(f"🔢 Enumerating {args.kind} on [{args.n}]")
    if args.kind == "tournaments":
        table = oracle_service.enumerate_tournaments(args.n, args.filter or "all", args.threads)
    elif args.kind == "digraphs":
        stats = tuple(args.stats.split(",")) if args.stats else ("des", "e")
        table = oracle_service.enumerate_digraphs(args.n, args.filter or "all", stats, long=args.long, threads=args.threads)
    else:
        table = oracle_service.enumerate_trees(args.n)
    if args.format == "json":
        emit(_json(table.to_json_dict()))
    elif args.format == "csv":
        emit(table.to_csv())
    else:
        lines = [f"{' '.join(str(v) for v in key)}: {count}" for key, count in table.sorted_rows()]
        lines.append(f"TOTAL: {table.total()}")
        emit(f"{' '.join(table.stats)}\n" + "\n".join(lines))
    return EXIT_OK


COMMANDS = {
    "table": cmd_table,
    "verify": cmd_verify,
    "series": cmd_series,
    "chromatic": cmd_chromatic,
    "poly": cmd_poly,
    "oracle": cmd_oracle,
}
