"""
Descent Census - Main Application
"""
import argparse
import sys

from census.cli.commands import COMMANDS, EXIT_USAGE, status
from census.config import settings
from census.services import identity_service, table_service
from census.services.family_service import FAMILIES, METHODS
from census.services.oracle_service import DIGRAPH_FILTERS


def _common_options() -> argparse.ArgumentParser:
    """Global flags, accepted before or after the subcommand"""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "csv", "pretty"], default=argparse.SUPPRESS)
    common.add_argument("--threads", type=int, default=argparse.SUPPRESS, help="oracle worker threads")
    common.add_argument("--long", action="store_true", default=argparse.SUPPRESS, help="allow long enumerations")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = argparse.ArgumentParser(
        prog="census",
        description="Descent polynomials of labeled digraph families, cross-checked by enumeration",
        parents=[common],
    )
    sub = parser.add_subparsers(dest="command", required=True)

    table = sub.add_parser("table", parents=[common], help="family coefficient tables")
    table.add_argument("family", choices=list(table_service.TABLE_FAMILIES))
    table.add_argument("-n", default="1..6", help="N or A..B")
    flags = table.add_mutually_exclusive_group()
    flags.add_argument("--u1", action="store_true", help="set u = 1 (rows by edges)")
    flags.add_argument("--y1", action="store_true", help="set y = 1 (rows by descents)")
    flags.add_argument("--uy", action="store_true", help="set u = y = 1 (totals only)")

    verify = sub.add_parser("verify", parents=[common], help="run verification suites")
    verify.add_argument("suite", choices=list(identity_service.SUITES))
    verify.add_argument("-n", type=int, default=5, help="largest digraph order for oracle checks")

    series = sub.add_parser("series", parents=[common], help="check one series identity")
    series.add_argument("identity", choices=list(identity_service.SERIES_IDENTITIES))
    series.add_argument("-N", "--order", type=int, default=6)

    chromatic = sub.add_parser("chromatic", parents=[common], help="refined chromatic polynomial of a graph file")
    chromatic.add_argument("graph", help="edge-list file: n, then one 'u v' per line")
    mode = chromatic.add_mutually_exclusive_group(required=True)
    mode.add_argument("--lambda", dest="colors", type=int, help="evaluate at this many colors")
    mode.add_argument("--interpolate", action="store_true")
    mode.add_argument("--reciprocity", action="store_true")

    poly = sub.add_parser("poly", parents=[common], help="print one family polynomial")
    poly.add_argument("family", choices=list(FAMILIES))
    poly.add_argument("n", type=int)
    poly.add_argument("--method", choices=list(METHODS), default="recurrence")

    oracle = sub.add_parser("oracle", parents=[common], help="raw brute-force histogram")
    oracle.add_argument("kind", choices=["tournaments", "digraphs", "trees"])
    oracle.add_argument("n", type=int)
    oracle.add_argument("--filter", choices=list(DIGRAPH_FILTERS), help="tournaments and digraphs only (default all)")
    oracle.add_argument("--stats", help="digraphs only: comma-separated statistics from des,e,sources,ssc")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    # global flags default to SUPPRESS in every parser
    for key, value in {"format": "pretty", "threads": settings.threads, "long": False}.items():
        if not hasattr(args, key):
            setattr(args, key, value)
    try:
        return COMMANDS[args.command](args)
    except (ValueError, OSError) as e:
        status(f"❌ {e}")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
