"""``camplet``: check, run and dump process programs, and run the law suite.

Exit codes:
  check  0 accepted, 1 type errors, 2 unreadable file or syntax error
  run    0 finished, 1 type errors, 2 syntax error, 3 deadlock, 4 step limit,
         5 runtime fault
  laws   0 every law passes, 1 otherwise
  ast    0 parsed, 2 syntax error
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from . import suite
from .lang import pretty
from .lang.diagnostics import CampletError, render, use_color
from .lang.parser import parse_program
from .lang.runtime import DEFAULT_STEP_LIMIT, DEADLOCK, LIMIT, RuntimeFault, run_to_completion
from .lang.typecheck import check_program

EXIT_OK, EXIT_TYPE, EXIT_SYNTAX, EXIT_DEADLOCK, EXIT_LIMIT, EXIT_FAULT = 0, 1, 2, 3, 4, 5

# largest bound per instance; finset bounds are atom counts, quantale bounds element counts
BOUND_CAPS = {suite.FINSET: 3, suite.QUANTALE: 16}


def positive_int(text: str) -> int:
    n = int(text)
    if n <= 0:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return n


def non_negative_int(text: str) -> int:
    n = int(text)
    if n < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text}")
    return n


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="camplet", description=__doc__,
                                 formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = ap.add_subparsers(dest="command", required=True)

    def fmt(p):
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("check", help="parse and typecheck a .cpl file")
    p.add_argument("path")
    fmt(p)

    p = sub.add_parser("run", help="typecheck and run a .cpl file from its main proc")
    p.add_argument("path")
    p.add_argument("--seed", type=non_negative_int, default=0)
    p.add_argument("--step-limit", type=positive_int, default=DEFAULT_STEP_LIMIT)
    p.add_argument("--main", default="main", help="entry proc (default: main)")
    p.add_argument("--trace", metavar="FILE", help="write the event trace as JSON ('-' for stdout)")
    fmt(p)

    p = sub.add_parser("laws", help="run the categorical law suite")
    p.add_argument("--instance", choices=(*suite.INSTANCES, "all"), default="all")
    p.add_argument("--bound", type=positive_int, default=None,
                   help="finset: atoms per seed set (default 2); quantale: elements (default 16)")
    p.add_argument("--law", action="append", choices=suite.LAW_NAMES, metavar="NAME",
                   help="run only this law (repeatable)")
    p.add_argument("--mutate", help=argparse.SUPPRESS)
    fmt(p)

    p = sub.add_parser("ast", help="print the parsed AST")
    p.add_argument("path")
    p.add_argument("--source", action="store_true", help="print canonical source instead of the tree")
    return ap


def _read(path: str) -> Optional[str]:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except (OSError, UnicodeDecodeError) as exc:
        print(f"camplet: cannot read {path}: {exc}", file=sys.stderr)
        return None


def _report_errors(errors: list, source: str, path: str, as_json: bool) -> None:
    if as_json:
        return
    color = use_color(sys.stderr)
    for e in errors:
        print(render(e, source, path, color), file=sys.stderr)


def _parse(path: str, as_json: bool):
    """(source, program) or an exit code after reporting the failure."""
    source = _read(path)
    if source is None:
        return EXIT_SYNTAX
    try:
        return source, parse_program(source)
    except CampletError as e:
        if as_json:
            print(json.dumps({"ok": False, "procs": [], "diagnostics": [e.to_json()]}, indent=2))
        else:
            _report_errors([e], source, path, False)
        return EXIT_SYNTAX


def cmd_check(args) -> int:
    as_json = args.format == "json"
    parsed = _parse(args.path, as_json)
    if isinstance(parsed, int):
        return parsed
    source, prog = parsed
    report = check_program(prog)
    if as_json:
        print(json.dumps(report.to_json(), indent=2))
    else:
        _report_errors(report.diagnostics, source, args.path, False)
        for p in report.procs:
            print(f"{'ok' if p.ok else 'FAIL':4} {p.name}")
        print("accepted" if report.ok else f"rejected: {len(report.diagnostics)} error(s)")
    return EXIT_OK if report.ok else EXIT_TYPE


def cmd_run(args) -> int:
    as_json = args.format == "json"
    parsed = _parse(args.path, as_json)
    if isinstance(parsed, int):
        return parsed
    source, prog = parsed
    report = check_program(prog)
    if not report.ok:
        if as_json:
            print(json.dumps(report.to_json(), indent=2))
        _report_errors(report.diagnostics, source, args.path, as_json)
        return EXIT_TYPE
    try:
        result = run_to_completion(prog, args.main, args.seed, args.step_limit)
    except RuntimeFault as e:
        print(f"camplet: runtime fault: {e.message}", file=sys.stderr)
        return EXIT_FAULT
    if args.trace:
        text = json.dumps(result.trace, indent=1, sort_keys=True) + "\n"
        if args.trace == "-":
            sys.stderr.write(text)
        else:
            with open(args.trace, "w", encoding="utf-8") as fh:
                fh.write(text)
    if as_json:
        print(json.dumps(result.to_json(), indent=2))
    else:
        for v in result.to_json()["output"]:
            print(json.dumps(v) if isinstance(v, bool) else v)
        if result.status != "finished":
            print(f"camplet: {result.status} after {result.steps} steps", file=sys.stderr)
        for b in result.blocked:
            where = f" on {b['channel']} ({b['channel_id']}, {b['protocol']}, {b['polarity']})" \
                if "channel" in b else ""
            print(f"  blocked: instance {b['instance']} {b['proc']}: {b['op']}{where}", file=sys.stderr)
    return {DEADLOCK: EXIT_DEADLOCK, LIMIT: EXIT_LIMIT}.get(result.status, EXIT_OK)


def cmd_laws(args) -> int:
    as_json = args.format == "json"
    instances = suite.INSTANCES if args.instance == "all" else (args.instance,)
    if args.mutate and args.instance != suite.FINSET:
        print("camplet: --mutate needs --instance finset", file=sys.stderr)
        return EXIT_SYNTAX
    for inst in instances:
        if args.bound is not None and args.bound > BOUND_CAPS[inst]:
            print(f"camplet: bound {args.bound} exceeds the cap {BOUND_CAPS[inst]} for {inst}",
                  file=sys.stderr)
            return EXIT_SYNTAX

    def progress(r):
        if not as_json:
            print("\n".join(r.lines()), flush=True)

    reports = []
    for inst in instances:
        try:
            reports += suite.run_suite(inst, args.bound, args.law, args.mutate, progress)
        except ValueError as exc:
            print(f"camplet: {exc}", file=sys.stderr)
            return EXIT_SYNTAX
    ok = all(r.ok for r in reports)
    if as_json:
        print(json.dumps({"ok": ok, "reports": [r.to_json() for r in reports]}, indent=2))
    else:
        passed = sum(r.ok for r in reports)
        print(f"{passed}/{len(reports)} laws passed")
    return EXIT_OK if ok else EXIT_TYPE


def cmd_ast(args) -> int:
    parsed = _parse(args.path, False)
    if isinstance(parsed, int):
        return parsed
    _, prog = parsed
    print(pretty.pretty_print(prog) if args.source else pretty.dump(prog))
    return EXIT_OK


COMMANDS = {"check": cmd_check, "run": cmd_run, "laws": cmd_laws, "ast": cmd_ast}


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    return COMMANDS[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
