"""Command-line interface.

One subcommand per pipeline stage: critical values, switch points,
matching distance, the audit suites, the counts experiment, and the
worst-case bound.  Exit codes: 0 success, 2 input error, 3 violated
invariant in an audit.
"""

from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction
from pathlib import Path

from . import formats
from .experiments import AUDITS, experiment_counts, rows_to_csv
from .formats import FormatError
from .matching import matching_distance
from .persistence import PARENT_M, PARENT_N, CritSet, critical_points
from .switchpoints import all_switch_points, dedup, switch_point_sort_key, theoretical_bound

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_VIOLATION = 3


def _default_threads() -> int:
    try:
        return max(1, int(os.environ.get("MATCHDIST_THREADS", "1")))
    except ValueError:
        return 1


def _read(path: str) -> bytes:
    try:
        return Path(path).read_bytes()
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc}") from exc


def _emit(text: str, out: str | None):
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _crit_points_from_file(path: str):
    kind, value = formats.load_input_file(_read(path))
    if kind == "module":
        return critical_points(value)
    return value


def _module_from_file(path: str):
    kind, value = formats.load_input_file(_read(path))
    if kind != "module":
        raise FormatError(f"{path}: matching-distance needs a {formats.MODULE_TAG} file")
    return value


def _fmt_rat(value: Fraction) -> str:
    return str(formats.rat_to_json(value))


def cmd_critvals(args) -> int:
    points = _crit_points_from_file(args.module)
    if args.format == "json":
        _emit(formats.serialize_crit_file(sorted(points)), args.out)
    else:
        _emit(formats.points_to_csv(sorted(points)), args.out)
    return EXIT_OK


def cmd_switch_points(args) -> int:
    cm = CritSet.tagged(_crit_points_from_file(args.m), PARENT_M)
    cn = CritSet.tagged(_crit_points_from_file(args.n), PARENT_N)
    raw = all_switch_points(cm, cn, threads=args.threads)
    sps = raw if args.raw else sorted(dedup(raw), key=switch_point_sort_key)
    if args.format == "json":
        _emit(formats.switch_points_to_json(sps), args.out)
    else:
        _emit(formats.switch_points_to_csv(sps), args.out)
    return EXIT_OK


def cmd_matching_distance(args) -> int:
    mod_m = _module_from_file(args.m)
    mod_n = _module_from_file(args.n)
    result = matching_distance(mod_m, mod_n, per_line=args.per_line, threads=args.threads)
    lines = [
        f"distance {_fmt_rat(result.distance)}",
        f"witness m={_fmt_rat(result.witness.m)} q={_fmt_rat(result.witness.q)}",
    ]
    if args.per_line:
        lines.append("m_num,m_den,q_num,q_den,value_num,value_den")
        for line, value in result.per_line:
            lines.append(
                f"{line.m.numerator},{line.m.denominator},"
                f"{line.q.numerator},{line.q.denominator},"
                f"{value.numerator},{value.denominator}"
            )
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    audit = AUDITS[args.suite]
    kwargs = {"seed": args.seed}
    if args.suite == "zero-gap":
        kwargs["trials"] = args.trials
        if args.checks:
            kwargs["pairs"] = args.checks
    elif args.suite == "separability":
        kwargs["trials"] = args.trials
        if args.checks:
            kwargs["configs"] = args.checks
    elif args.suite == "bottleneck":
        if args.checks:
            kwargs["instances"] = args.checks
    else:
        kwargs["samples"] = args.trials
        if args.checks:
            kwargs["pairs"] = args.checks
    result = audit(**kwargs)
    for message in result.messages:
        print(message, file=sys.stderr)
    print(result.summary())
    return EXIT_OK if result.ok else EXIT_VIOLATION


def cmd_experiment_counts(args) -> int:
    try:
        sizes = [int(s) for s in args.sizes.split(",") if s != ""]
    except ValueError as exc:
        raise FormatError(f"bad --sizes value {args.sizes!r}: {exc}") from exc
    rows = experiment_counts(
        sizes, args.runs, args.seed, coord_max=args.coord_max, threads=args.threads
    )
    _emit(rows_to_csv(rows), args.out)
    return EXIT_OK


def cmd_bound(args) -> int:
    print(theoretical_bound(args.n))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="matchdist",
        description="Exact matching distance and switch points for "
        "rectangle-decomposable bi-persistence modules.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("critvals", help="critical values of a module file")
    p.add_argument("module")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out")
    p.set_defaults(func=cmd_critvals)

    p = sub.add_parser("switch-points", help="switch points of two inputs")
    p.add_argument("--m", required=True, help="rectmod or critset file for module M")
    p.add_argument("--n", required=True, help="rectmod or critset file for module N")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--raw", action="store_true", help="raw multiset with duplicates")
    group.add_argument("--dedup", action="store_true", help="deduplicated set (default)")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--threads", type=int, default=_default_threads())
    p.add_argument("--out")
    p.set_defaults(func=cmd_switch_points)

    p = sub.add_parser("matching-distance", help="exact matching distance")
    p.add_argument("--m", required=True)
    p.add_argument("--n", required=True)
    p.add_argument("--per-line", action="store_true", dest="per_line")
    p.add_argument("--threads", type=int, default=_default_threads())
    p.add_argument("--out")
    p.set_defaults(func=cmd_matching_distance)

    p = sub.add_parser("verify", help="run a reproducible audit suite")
    p.add_argument("suite", choices=sorted(AUDITS))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=50)
    p.add_argument("--checks", type=int, default=0, help="override instance count")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("experiment", help="experiment harness")
    esub = p.add_subparsers(dest="experiment", required=True)
    pc = esub.add_parser("counts", help="switch-point counts for random modules")
    pc.add_argument("--sizes", required=True, help="comma-separated rectangle counts")
    pc.add_argument("--runs", type=int, default=5)
    pc.add_argument("--seed", type=int, default=0)
    pc.add_argument("--coord-max", type=int, default=12, dest="coord_max")
    pc.add_argument("--threads", type=int, default=_default_threads())
    pc.add_argument("--out")
    pc.set_defaults(func=cmd_experiment_counts)

    p = sub.add_parser("bound", help="worst-case switch point count")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_bound)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except FormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
