"""Command-line front end.

Commands:
    index TYPE            index, dimension, rank, component counts
    wind TYPE             signature and homotopy type
    table KIND            census tables as csv/json/md, with golden check
    verify SUITE          run a verification suite
    render TYPE           SVG or TikZ drawing of the meander

TYPE is `a1|a2|.../b1|b2|...`, e.g. `2|4/1|2|3` (no whitespace).

Exit codes: 0 success; 1 failed golden check or failed verify suite;
2 parse/usage error; 3 enumeration limit exceeded; 4 I/O failure.
"""

from __future__ import annotations

import argparse
import os
import sys

from .compositions import parse_seaweed_type
from .enumeration import (
    build_table,
    c22_meander_limit,
    census_limit,
    diff_golden,
    load_golden,
)
from .errors import LimitExceeded, ParseError
from .meander import (
    build_meander,
    component_summary,
    meander_svg,
    meander_tikz,
    seaweed_dimension,
    seaweed_index,
    seaweed_rank,
)
from .verify import SUITES, run_suite
from .winding import format_signature, wind_down

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_LIMIT = 3
EXIT_IO = 4

_TABLE_DEFAULT_MAX_N = {"cnk": 10, "c21": 12, "c22": 11}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="seaweeds",
        description=(
            "Meander-based index and homotopy-type computations for seaweed "
            "subalgebras of sl(n), with exhaustive verification of the "
            "counting formulas."
        ),
        epilog=(
            "Type grammar: a composition is parts joined by '|' (e.g. 2|4); "
            "a type is top/bottom (e.g. 2|4/1|2|3). Polynomials print as "
            "ascending powers like 6x^3-10x^4. Environment: "
            "SEAWEEDS_CENSUS_LIMIT bounds full-pair censuses (default "
            f"{census_limit()}), SEAWEEDS_C22_MEANDER_LIMIT bounds the "
            f"two-over-two meander oracle (default {c22_meander_limit()})."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("index", help="index, dimension, rank, components")
    p.add_argument("type", help="seaweed type, e.g. 2|4/1|2|3")

    p = sub.add_parser("wind", help="signature and homotopy type")
    p.add_argument("type")

    p = sub.add_parser("table", help="generate or golden-check a census table")
    p.add_argument("kind", choices=["cnk", "c21", "c22"])
    p.add_argument("--max-n", type=int, default=None,
                   help="largest n row (defaults: cnk 10, c21 12, c22 11)")
    p.add_argument("--format", choices=["csv", "json", "md"], default="csv")
    p.add_argument("--oracle", choices=["gcd", "meander"], default="gcd",
                   help="index oracle for c22 tables")
    p.add_argument("--workers", type=int, default=os.cpu_count() or 1,
                   help="parallel workers for cnk (1 = reference path)")
    p.add_argument("--output", default=None, help="write here instead of stdout")
    p.add_argument("--check-golden", action="store_true",
                   help="compare against the shipped reference table")

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=list(SUITES))

    p = sub.add_parser("render", help="draw the meander of a type")
    p.add_argument("type")
    p.add_argument("--format", choices=["svg", "tikz"], default="svg")
    p.add_argument("--output", default=None)
    return parser


def _emit(text: str, output: str | None) -> None:
    if output is None:
        sys.stdout.write(text)
    else:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)


def cmd_index(args) -> int:
    st = parse_seaweed_type(args.type)
    summary = component_summary(build_meander(st))
    print(f"type {st}")
    print(f"index {seaweed_index(st)}")
    print(f"dimension {seaweed_dimension(st)}")
    print(f"rank {seaweed_rank(st.n)}")
    print(f"cycles {summary.cycles}")
    print(f"paths {summary.paths}")
    return EXIT_OK


def cmd_wind(args) -> int:
    st = parse_seaweed_type(args.type)
    sig, h = wind_down(st)
    print(f"signature {format_signature(sig)}")
    print(f"homotopy {h}")
    return EXIT_OK


def cmd_table(args) -> int:
    max_n = args.max_n if args.max_n is not None else _TABLE_DEFAULT_MAX_N[args.kind]
    table = build_table(args.kind, max_n, oracle=args.oracle, workers=args.workers)
    if args.check_golden:
        golden = load_golden(args.kind)
        problems = diff_golden(table, golden)
        lo, hi = table.n_range()
        cells = sum(1 for n in golden.rows if lo <= n <= hi) * golden.width()
        if problems:
            for line in problems:
                print(f"golden mismatch: {line}", file=sys.stderr)
            print(f"{args.kind}: {len(problems)} problem(s) in {cells} cells checked")
            return EXIT_CHECK_FAILED
        print(f"{args.kind}: OK ({cells} cells match the reference)")
        return EXIT_OK
    rendered = {"csv": table.to_csv, "json": table.to_json, "md": table.to_markdown}
    _emit(rendered[args.format](), args.output)
    return EXIT_OK


def cmd_verify(args) -> int:
    report = run_suite(args.suite)
    print(report.format())
    return EXIT_OK if report.passed else EXIT_CHECK_FAILED


def cmd_render(args) -> int:
    st = parse_seaweed_type(args.type)
    m = build_meander(st)
    text = meander_svg(m) if args.format == "svg" else meander_tikz(m)
    _emit(text, args.output)
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "index": cmd_index,
        "wind": cmd_wind,
        "table": cmd_table,
        "verify": cmd_verify,
        "render": cmd_render,
    }
    try:
        return handlers[args.command](args)
    except ParseError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except LimitExceeded as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_LIMIT
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_IO


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
