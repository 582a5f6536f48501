"""Command-line front end.

Exit codes: 0 success, 1 a mathematical check failed or the input is not a
ppc, 2 usage, parse, or range error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import core, oracle, production, verify
from .core import Composition, format_composition, is_ppc, parse_composition

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def composition_record(c: Composition) -> dict:
    record = {"n": c.total, "parts": list(c.parts), "ppc": is_ppc(c)}
    if record["ppc"]:
        record["type"] = core.classify(c).value
    return record


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _parse_input(text: str) -> Composition:
    try:
        return parse_composition(text)
    except core.InvalidComposition as exc:
        raise UsageError(str(exc)) from None


def _check_n(n: int, cap: int) -> None:
    try:
        oracle.check_n(n, cap)
    except oracle.NOutOfRange as exc:
        raise UsageError(str(exc)) from None


def cmd_enum(args, out) -> int:
    _check_n(args.n, args.cap)
    if args.format == "dot":
        raise UsageError("dot output is only available for 'forest'")
    stream = oracle.enumerate_ppcs if args.ppc_only else oracle.enumerate_compositions
    for c in stream(args.n, args.cap):
        if args.format == "json":
            out.write(_dump(composition_record(c)) + "\n")
        else:
            out.write(format_composition(c, args.compact) + "\n")
    return EXIT_OK


def cmd_count(args, out) -> int:
    brute = formula = None
    if args.method in ("brute", "both"):
        _check_n(args.n, args.cap)
        brute = oracle.count_ppcs_brute(args.n, args.cap, jobs=args.jobs)
    if args.method in ("formula", "both"):
        if args.n < 1:
            raise UsageError(f"n={args.n} must be positive")
        try:
            formula = oracle.count_ppcs_formula(args.n)
        except oracle.FormulaOverflow as exc:
            raise UsageError(str(exc)) from None
    values = [v for v in (brute, formula) if v is not None]
    out.write(" ".join(map(str, values)) + "\n")
    if args.method == "both" and brute != formula:
        return EXIT_FAIL
    return EXIT_OK


def cmd_classify(args, out) -> int:
    c = _parse_input(args.composition)
    if not is_ppc(c):
        print("not a ppc", file=sys.stderr)
        return EXIT_FAIL
    out.write(f"{core.classify(c)}\n")
    return EXIT_OK


def cmd_produce(args, out) -> int:
    c = _parse_input(args.composition)
    if not is_ppc(c):
        print("not a ppc", file=sys.stderr)
        return EXIT_FAIL
    if c.total < 2:
        raise UsageError("producers must have total >= 2")
    for prod in production.produce(c):
        out.write(production.format_production(prod, args.compact) + "\n")
    return EXIT_OK


def _dot_id(c: Composition) -> str:
    return '"%s"' % format_composition(c)


def _dot_label(c: Composition) -> str:
    return '"%s"' % format_composition(c, compact=True)


def forest_dot(levels: list[production.ForestLevel]) -> str:
    lines = ["digraph forest {"]
    for level in levels:
        for c in level.members:
            lines.append(f"    {_dot_id(c)} [label={_dot_label(c)}];")
    for level in levels[1:]:
        for c in level.members:
            parent, rule = level.provenance[c]
            lines.append(f'    {_dot_id(parent)} -> {_dot_id(c)} [label="{rule}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def cmd_forest(args, out) -> int:
    try:
        levels = production.build_forest(args.parity, args.max_total)
    except (production.ParityMismatch, production.TotalTooSmall) as exc:
        raise UsageError(str(exc)) from None
    if args.max_total > args.cap:
        raise UsageError(f"max_total={args.max_total} exceeds cap {args.cap}")
    if args.format == "dot":
        out.write(forest_dot(levels))
        return EXIT_OK
    for index, level in enumerate(levels):
        if args.format == "json":
            members = []
            for c in level.members:
                entry = {"parts": list(c.parts)}
                if not level.is_seed:
                    parent, rule = level.provenance[c]
                    entry["parent"] = list(parent.parts)
                    entry["rule"] = rule.value
                members.append(entry)
            out.write(_dump({"level": index, "total": level.total,
                             "seed": level.is_seed, "members": members}) + "\n")
            continue
        kind = "seed" if level.is_seed else f"{len(level)} ppcs"
        out.write(f"total {level.total} ({kind})\n")
        for c in level.members:
            text = format_composition(c, args.compact)
            if level.is_seed:
                out.write(f"  {text}\n")
            else:
                parent, rule = level.provenance[c]
                out.write(f"  {text} <- {format_composition(parent, args.compact)} {rule}\n")
    return EXIT_OK


def cmd_verify(args, out) -> int:
    if args.max_total < verify.MIN_TOTAL or args.max_total > args.cap:
        raise UsageError(f"--max must lie in [{verify.MIN_TOTAL}, {args.cap}]")
    report = verify.run_verification(args.max_total, jobs=args.jobs, cap=args.cap)
    if args.format == "json":
        out.write(_dump(report.as_dict()) + "\n")
    else:
        out.write(report.text())
    return EXIT_OK if report.passed else EXIT_FAIL


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid integer {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"{value} must be positive")
    return value


def build_parser() -> argparse.ArgumentParser:
    # Global options are accepted both before and after the subcommand. Parent
    # parsers share action objects, so each level gets its own copy.
    def global_options(default):
        opts = argparse.ArgumentParser(add_help=False)
        opts.add_argument("--cap", type=_positive,
                          default=oracle.DEFAULT_CAP if default else argparse.SUPPRESS,
                          help=f"enumeration cap (default {oracle.DEFAULT_CAP})")
        opts.add_argument("--compact", action="store_true",
                          default=False if default else argparse.SUPPRESS,
                          help="write compositions as digit strings when all parts <= 9")
        return opts

    parser = argparse.ArgumentParser(prog="ppc", parents=[global_options(True)],
                                     description="Parity palindrome compositions.")
    shared = global_options(False)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enum", parents=[shared], help="list compositions of n")
    p.add_argument("n", type=int)
    p.add_argument("--ppc-only", action="store_true")
    p.add_argument("--format", choices=("text", "json", "dot"), default="text")
    p.set_defaults(func=cmd_enum)

    p = sub.add_parser("count", parents=[shared], help="count ppcs of n")
    p.add_argument("n", type=int)
    p.add_argument("--method", choices=("brute", "formula", "both"), default="both")
    p.add_argument("--jobs", type=_positive, default=1)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("classify", parents=[shared], help="type A, B or C of a ppc")
    p.add_argument("composition")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("produce", parents=[shared], help="apply the production rules")
    p.add_argument("composition")
    p.set_defaults(func=cmd_produce)

    p = sub.add_parser("forest", parents=[shared], help="emit the production forest")
    p.add_argument("parity", choices=("even", "odd"))
    p.add_argument("max_total", type=int)
    p.add_argument("--format", choices=("text", "json", "dot"), default="text")
    p.set_defaults(func=cmd_forest)

    p = sub.add_parser("verify", parents=[shared], help="run the full verification suite")
    p.add_argument("--max", dest="max_total", type=int, required=True)
    p.add_argument("--jobs", type=_positive, default=1)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, out)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"ppc: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BrokenPipeError:
        return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
