"""Command-line entry point: ``skewverify list | check <name> | all``."""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict

from .checks import (
    RunContext,
    UnknownCheckError,
    list_checks,
    render,
    run_all,
    run_check,
)
from .overrides import (
    ConstantsOverride,
    ConstantsOverrideError,
    load_constants_override,
)


def _common_options() -> argparse.ArgumentParser:
    opts = argparse.ArgumentParser(add_help=False)
    opts.add_argument("--seed", type=int, default=0, help="seed for randomized checks (default 0)")
    opts.add_argument("--trials", type=int, default=100, help="samples per randomized check (default 100)")
    opts.add_argument("--precision", type=int, default=12, help="series cutoff for random series (default 12)")
    opts.add_argument("--format", choices=("text", "json"), default="text")
    opts.add_argument("--constants", metavar="PATH", help="JSON file overriding c_ij, λ and/or d_ij")
    return opts


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = argparse.ArgumentParser(
        prog="skewverify",
        description="Exact verification of the data defining D((x, σ̃)) over Q((t)).",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("list", parents=[common], help="list registered checks")
    chk = sub.add_parser("check", parents=[common], help="run a single check")
    chk.add_argument("name")
    sub.add_parser("all", parents=[common], help="run every check")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.trials < 1 or args.precision < 1:
        print("error: --trials and --precision must be positive", file=sys.stderr)
        return 2
    if not 0 <= args.seed < 2**64:
        print("error: --seed must be an unsigned 64-bit integer", file=sys.stderr)
        return 2

    if args.command == "list":
        checks = list_checks()
        if args.format == "json":
            print(json.dumps([{"name": n, "anchor": a} for n, a in checks], indent=2, ensure_ascii=False))
        else:
            width = max(len(n) for n, _ in checks)
            for name, anchor in checks:
                print(f"{name:<{width}}  {anchor}")
        return 0

    try:
        constants = load_constants_override(args.constants) if args.constants else ConstantsOverride()
    except (OSError, ConstantsOverrideError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    if args.command == "check":
        ctx = RunContext(constants, args.seed, args.trials, args.precision)
        try:
            result = run_check(args.name, ctx=ctx)
        except UnknownCheckError as exc:
            print(f"error: {exc.args[0]}", file=sys.stderr)
            return 2
        if args.format == "json":
            print(json.dumps(asdict(result), indent=2, ensure_ascii=False))
        else:
            print(render([result], "text", ctx))
            if result.passed:
                print(f"       {result.detail}")
        return 0 if result.passed else 1

    report, code = run_all(args.seed, args.trials, args.format, precision=args.precision, constants=constants)
    print(report)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
