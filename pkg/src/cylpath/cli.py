"""Command-line entry point.

Exit status: 0 when every check passes, 1 when a check fails, 2 for bad input.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .enrichment.complex import function_complex
from .formats import DocumentError, parse_sset, print_map, print_sset
from .harness.fixtures import FIXTURE_SETS, AuditError
from .harness.suites import SUITES, SuiteConfig, run_suite
from .kernel import TruncationError, enumerate_maps, named, times
from .kernel.zoo import NAMED


class InputError(Exception):
    pass


def load_sset(ref: str):
    """A built-in name such as ``delta1`` or a path to a ``.sset`` document."""
    if ref in NAMED:
        return named(ref)
    path = Path(ref)
    if path.suffix == ".sset" or path.exists():
        try:
            return parse_sset(path.read_text())
        except OSError as exc:
            raise InputError(f"cannot read {ref}: {exc.strerror}") from None
        except DocumentError as exc:
            raise InputError(f"{ref}: {exc}") from None
    raise InputError(f"unknown simplicial set {ref!r}; built-ins: {', '.join(sorted(NAMED))}")


def _hom(args, out) -> int:
    X, Y = load_sset(args.source), load_sset(args.target)
    maps = enumerate_maps(X, Y)
    if args.list:
        for f in maps:
            out.write(print_map(f))
    out.write(f"{len(maps)}\n")
    return 0


def _product(args, out) -> int:
    out.write(print_sset(times(load_sset(args.left), load_sset(args.right))))
    return 0


def _fncx(args, out) -> int:
    X, Y = load_sset(args.source), load_sset(args.target)
    if args.level < 0:
        raise InputError("level must be non-negative")
    h = function_complex(X, Y, args.level)
    for n in range(args.level + 1):
        out.write(f"level {n}: {len(h.level(n))} simplices, {len(h.nondeg(n))} nondegenerate\n")
    return 0


def _emit(report, fmt: str, out) -> int:
    out.write(report.to_machine() if fmt == "machine" else report.to_text())
    return 0 if report.passed else 1


def _verify(args, out) -> int:
    config = SuiteConfig(suites=[args.suite], fixtures=args.fixtures, D=args.level)
    return _emit(run_suite(config), args.format, out)


def _report(args, out) -> int:
    config = SuiteConfig(suites=args.suites or list(SUITES), fixtures=args.fixtures, D=args.level)
    return _emit(run_suite(config), args.format, out)


def _fixtures_arg(p):
    p.add_argument(
        "--fixtures",
        default="default",
        help=f"named set ({', '.join(FIXTURE_SETS)}) or comma-separated built-ins, e.g. delta0,delta1",
    )
    p.add_argument("--level", type=int, default=2, help="check levels 0..LEVEL (default 2)")
    p.add_argument("--format", choices=("text", "machine"), default="text")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cylpath", description="Finite simplicial sets, function complexes and exact checks.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("hom", help="count the simplicial maps X -> Y")
    p.add_argument("source")
    p.add_argument("target")
    p.add_argument("--list", action="store_true", help="print every map as a .smap document first")
    p.set_defaults(run=_hom)

    p = sub.add_parser("product", help="print X x Y as a .sset document")
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(run=_product)

    p = sub.add_parser("fncx", help="level sizes of the function complex from X to Y")
    p.add_argument("source")
    p.add_argument("target")
    p.add_argument("level", type=int)
    p.set_defaults(run=_fncx)

    p = sub.add_parser("verify", help="run one verification suite")
    p.add_argument("suite", choices=SUITES)
    _fixtures_arg(p)
    p.set_defaults(run=_verify)

    p = sub.add_parser("report", help="run several suites and print one merged report")
    p.add_argument("--suites", nargs="*", choices=SUITES)
    _fixtures_arg(p)
    p.set_defaults(run=_report)
    return parser


def main(argv: list[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.run(args, out)
    except AuditError as exc:
        err.write(f"audit error: {exc}\n")
    except (InputError, TruncationError, KeyError, ValueError) as exc:
        err.write(f"error: {exc.args[0] if exc.args else exc}\n")
    return 2


def main_exit() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_exit()
