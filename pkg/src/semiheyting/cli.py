"""Command-line interface.

Subcommands::

    count      --n N --method {recursive,product,construct,oracle-pure,oracle-forced}
    enumerate  --n N [--format {text,json}] [--out FILE] [--limit K]
    verify     FILE
    crosscheck [--max-pure P] [--max-forced F] [--max-construct C] [--max-formula M]

Exit codes: 0 success / table valid, 1 semantic failure (axiom
violation, crosscheck disagreement), 2 input errors (bad arguments,
unparseable files, over-cap requests).
"""

from __future__ import annotations

import argparse
import sys
from itertools import islice

from .construct import enumerate_tables
from .counting import count_product, count_recursive
from .crosscheck import run_crosscheck
from .formats import TableParseError, TableValidationError, parse, serialize
from .oracle import DEFAULT_FORCED_CAP, DEFAULT_PURE_CAP, SearchSpaceError, oracle_count
from .tables import check_sh2, check_sh3, check_sh4, check_structural, is_heyting

DEFAULT_CONSTRUCT_CAP = 6
DEFAULT_FORMULA_CAP = 200


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="semiheyting",
        description="Construct, verify, enumerate and count the semi-Heyting "
        "algebras on finite chains.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_count = sub.add_parser("count", help="print how many valid tables exist")
    p_count.add_argument("--n", type=int, required=True, help="chain size")
    p_count.add_argument(
        "--method",
        choices=["recursive", "product", "construct", "oracle-pure", "oracle-forced"],
        default="recursive",
    )
    p_count.add_argument("--max-pure", type=int, default=DEFAULT_PURE_CAP)
    p_count.add_argument("--max-forced", type=int, default=DEFAULT_FORCED_CAP)
    p_count.add_argument("--max-construct", type=int, default=DEFAULT_CONSTRUCT_CAP)

    p_enum = sub.add_parser("enumerate", help="stream every valid table")
    p_enum.add_argument("--n", type=int, required=True, help="chain size")
    p_enum.add_argument("--format", choices=["text", "json"], default="text")
    p_enum.add_argument("--out", default=None, help="output file (default stdout)")
    p_enum.add_argument("--limit", type=int, default=None, help="stop after K tables")

    p_verify = sub.add_parser("verify", help="check a table document")
    p_verify.add_argument("file", help="table document, or - for stdin")

    p_cross = sub.add_parser(
        "crosscheck", help="run the full agreement matrix between all routes"
    )
    p_cross.add_argument("--max-pure", type=int, default=DEFAULT_PURE_CAP)
    p_cross.add_argument("--max-forced", type=int, default=DEFAULT_FORCED_CAP)
    p_cross.add_argument("--max-construct", type=int, default=DEFAULT_CONSTRUCT_CAP)
    p_cross.add_argument("--max-formula", type=int, default=DEFAULT_FORMULA_CAP)

    return parser


def _fail(message: str, code: int) -> int:
    print(f"semiheyting: {message}", file=sys.stderr)
    return code


def _cmd_count(args) -> int:
    n = args.n
    if n < 1:
        return _fail("chain size must be >= 1", 2)
    try:
        if args.method == "recursive":
            value = count_recursive(n)
        elif args.method == "product":
            value = count_product(n)
        elif args.method == "construct":
            if n > args.max_construct:
                return _fail(
                    f"streaming construction at n={n} exceeds the cap "
                    f"n<={args.max_construct}; use --method recursive or "
                    f"--method product instead",
                    2,
                )
            value = sum(1 for _ in enumerate_tables(n))
        elif args.method == "oracle-pure":
            value = oracle_count(n, "pure", cap=args.max_pure)
        else:
            value = oracle_count(n, "forced", cap=args.max_forced)
    except SearchSpaceError as exc:
        return _fail(f"{exc}; try --method recursive or --method product", 2)
    print(value)
    return 0


def _cmd_enumerate(args) -> int:
    if args.n < 1:
        return _fail("chain size must be >= 1", 2)
    if args.limit is not None and args.limit < 0:
        return _fail("limit must be nonnegative", 2)

    stream = enumerate_tables(args.n)
    if args.limit is not None:
        stream = islice(stream, args.limit)

    try:
        out = open(args.out, "wb") if args.out else sys.stdout.buffer
    except OSError as exc:
        return _fail(f"cannot write {args.out}: {exc}", 2)
    try:
        if args.format == "json":
            for t in stream:
                out.write(serialize(t, "json"))
                out.write(b"\n")
        else:
            first = True
            for t in stream:
                if not first:
                    out.write(b"\n")
                out.write(serialize(t, "text"))
                first = False
        out.flush()
    except BrokenPipeError:
        return 0
    finally:
        if args.out:
            out.close()
    return 0


def _element(index: int) -> str:
    return f"a{index}"


def _cmd_verify(args) -> int:
    try:
        if args.file == "-":
            data = sys.stdin.buffer.read()
        else:
            with open(args.file, "rb") as fh:
                data = fh.read()
    except OSError as exc:
        return _fail(f"cannot read {args.file}: {exc}", 2)
    try:
        table = parse(data)
    except (TableParseError, TableValidationError) as exc:
        return _fail(str(exc), 2)

    for report in (
        check_sh2(table),
        check_sh3(table),
        check_sh4(table),
        check_structural(table),
    ):
        if not report.passed:
            names = ("x", "y", "z")
            where = ",".join(
                f"{name}={_element(v)}" for name, v in zip(names, report.witness)
            )
            print(f"{report.violated_axiom} fails at {where}")
            return 1
    flag = "yes" if is_heyting(table) else "no"
    print(f"VALID heyting={flag}")
    return 0


def _cmd_crosscheck(args) -> int:
    for name in ("max_pure", "max_forced", "max_construct", "max_formula"):
        if getattr(args, name) < 1:
            return _fail(f"--{name.replace('_', '-')} must be >= 1", 2)
    print(
        f"crosscheck caps: pure<={args.max_pure} forced<={args.max_forced} "
        f"construct<={args.max_construct} formula<={args.max_formula}"
    )
    results = run_crosscheck(
        max_pure=args.max_pure,
        max_forced=args.max_forced,
        max_construct=args.max_construct,
        max_formula=args.max_formula,
    )
    for result in results:
        print(result.line())
    failed = sum(1 for r in results if not r.passed)
    print(f"{len(results)} checks: {len(results) - failed} passed, {failed} failed")
    return 1 if failed else 0


def main(argv=None) -> int:
    # Counts at large n overflow the interpreter's default int-to-str guard.
    sys.set_int_max_str_digits(0)
    args = _build_parser().parse_args(argv)
    if args.command == "count":
        return _cmd_count(args)
    if args.command == "enumerate":
        return _cmd_enumerate(args)
    if args.command == "verify":
        return _cmd_verify(args)
    return _cmd_crosscheck(args)


if __name__ == "__main__":
    sys.exit(main())
