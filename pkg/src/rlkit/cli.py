"""``rlkit`` command line.

Exit codes: 0 success, 1 validation or parse error, 2 usage error,
3 theorem violation.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import corpus, report
from .algebra import Algebra
from .document import load
from .errors import (
    ElementError,
    ImproperFilter,
    NotClosedSystem,
    OrderCapExceeded,
    ParseError,
    TheoremViolation,
    UnknownPredicate,
    ValidationError,
)
from .filters import FilterSet, filter_lattice, generated_filter
from .fractions import ClosedSystem
from .modelgen import ModelQuery, iter_mine, write_hit
from .theorems import verify

EXIT_OK, EXIT_INVALID, EXIT_USAGE, EXIT_VIOLATION = 0, 1, 2, 3


class UsageError(Exception):
    pass


def resolve_algebra(spec: str) -> Algebra:
    """Load ``spec`` as a path, falling back to the bundled corpus by name."""
    if os.path.exists(spec):
        return load(spec)
    stem = Path(spec).name
    stem = stem[:-3] if stem.endswith(".rl") else stem
    if stem in corpus.names():
        return corpus.load(stem)
    raise UsageError(f"no such file or bundled algebra: {spec}")


def _elements(A: Algebra, text: str, what: str) -> list[int]:
    out = []
    for tok in text.split(","):
        tok = tok.strip()
        if not tok:
            continue
        try:
            out.append(A.index(tok))
        except ElementError:
            raise UsageError(f"{what}: unknown element {tok!r}; elements are {' '.join(A.names)}")
    if not out:
        raise UsageError(f"{what}: no elements given")
    return out


def parse_filter(A: Algebra, text: str) -> FilterSet:
    return generated_filter(A, _elements(A, text, "--filter"))


def parse_system(A: Algebra, text: str) -> ClosedSystem:
    """Close the given elements (plus 1) under ∧."""
    mask = 1 << A.top
    for x in _elements(A, text, "--system"):
        mask |= 1 << x
    while True:
        xs = [x for x in A.elements if mask >> x & 1]
        grown = mask
        for x in xs:
            for y in xs:
                grown |= 1 << A.meet[x][y]
        if grown == mask:
            return ClosedSystem(A, mask)
        mask = grown


def _echo(args, what: str, given: str, closure: Sequence[str]) -> None:
    if not args.json:
        print(f"{what} {given} closes to {{{', '.join(closure)}}}")


def _filters_arg(args, A: Algebra, *, default_all: bool) -> list[FilterSet]:
    if args.filter is None:
        if default_all:
            return list(filter_lattice(A))
        raise UsageError("--filter is required")
    F = parse_filter(A, args.filter)
    _echo(args, "filter", args.filter, F.names())
    return [F]


def cmd_check(args) -> tuple[dict, int]:
    return report.check_report(resolve_algebra(args.file)), EXIT_OK


def cmd_filters(args) -> tuple[dict, int]:
    return report.filters_report(resolve_algebra(args.file)), EXIT_OK


def cmd_blp(args) -> tuple[dict, int]:
    A = resolve_algebra(args.file)
    return report.blp_report(A, _filters_arg(args, A, default_all=True)), EXIT_OK


def cmd_quotient(args) -> tuple[dict, int]:
    A = resolve_algebra(args.file)
    (F,) = _filters_arg(args, A, default_all=False)
    return report.quotient_report(F), EXIT_OK


def cmd_spectrum(args) -> tuple[dict, int]:
    A = resolve_algebra(args.file)
    rep = report.spectrum_report(A, "max" if args.max else "spec", dot=args.dot is not None)
    if args.dot not in (None, "-"):
        Path(args.dot).write_text(rep["result"]["dot"], encoding="utf-8")
    elif args.dot == "-" and not args.json:
        print(rep["result"]["dot"], end="")
    return rep, EXIT_OK


def cmd_fractions(args) -> tuple[dict, int]:
    A = resolve_algebra(args.file)
    S = parse_system(A, args.system)
    _echo(args, "system", args.system, [A.names[x] for x in S])
    F = None
    if args.filter is not None:
        F = parse_filter(A, args.filter)
        _echo(args, "filter", args.filter, F.names())
    return report.fractions_report(S, F), EXIT_OK


def cmd_radical(args) -> tuple[dict, int]:
    A = resolve_algebra(args.file)
    return report.radical_report(A, _filters_arg(args, A, default_all=True)), EXIT_OK


def cmd_tprd(args) -> tuple[dict, int]:
    return report.tprd_report(resolve_algebra(args.file)), EXIT_OK


def cmd_verify(args) -> tuple[dict, int]:
    vr = verify(resolve_algebra(args.file), args.only)
    return report.verify_report(vr), EXIT_OK if vr.ok else EXIT_VIOLATION


def cmd_mine(args) -> tuple[dict, int]:
    if args.order < 1:
        raise UsageError("--order must be positive")
    query = ModelQuery(args.order, args.where, limit=args.limit, min_order=args.min_order)
    hits, paths = [], []
    for k, hit in enumerate(iter_mine(query)):
        hits.append(hit)
        if args.out:
            paths.append(write_hit(hit, k, args.out))
    return report.mine_report(args.where, args.order, hits, paths if args.out else None), EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="rlkit", description="Finite residuated lattice calculator")
    p.add_argument("--json", action="store_true", help="emit one rlkit/1 JSON report")
    # accepted after the subcommand too; SUPPRESS keeps a leading --json intact
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help=argparse.SUPPRESS)
    sub = p.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name, func, help_, filter_opt=False, filter_required=False):
        sp = sub.add_parser(name, help=help_, parents=[common])
        if name != "mine":
            sp.add_argument("file", metavar="FILE", help="an .rl document or a bundled corpus name")
        if filter_opt:
            sp.add_argument(
                "--filter", metavar="GENS", required=filter_required, help="comma-separated generators, e.g. a,c"
            )
        sp.set_defaults(func=func)
        return sp

    add("check", cmd_check, "validate, classify and run the identity suite")
    add("filters", cmd_filters, "enumerate filters with their flags")
    add("blp", cmd_blp, "Boolean lifting property per filter", filter_opt=True)
    add("quotient", cmd_quotient, "quotient by a filter", filter_opt=True, filter_required=True)
    sp = add("spectrum", cmd_spectrum, "prime (or maximal) spectrum and its clopens")
    sp.add_argument("--max", action="store_true", help="use maximal filters")
    sp.add_argument("--dot", metavar="PATH", help="write the specialization order as Graphviz ('-' for stdout)")
    fr = add("fractions", cmd_fractions, "lattice of fractions L[S]", filter_opt=True)
    fr.add_argument("--system", required=True, metavar="ELEMS", help="elements of S; closed under ∧ with 1 added")
    add("radical", cmd_radical, "radicals and their comaximal decompositions", filter_opt=True)
    add("tprd", cmd_tprd, "transfer of decompositions from radicals")
    v = add("verify", cmd_verify, "run every theorem-invariant check")
    v.add_argument("--only", nargs="+", metavar="CHECK", help="restrict to named checks")
    m = add("mine", cmd_mine, "search generated algebras for a predicate")
    m.add_argument("--order", type=int, required=True, metavar="N", help="maximum order")
    m.add_argument("--min-order", type=int, default=1, metavar="N")
    m.add_argument("--where", required=True, metavar="EXPR", help='e.g. "weak_mtl and not mtl"')
    m.add_argument("--limit", type=int, metavar="K", help="stop after K hits")
    m.add_argument("--out", metavar="DIR", help="write one .rl document per hit")
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    code = EXIT_OK
    try:
        rep, code = args.func(args)
    except (UsageError, UnknownPredicate, OrderCapExceeded, NotClosedSystem, ImproperFilter, ElementError, KeyError) as exc:
        print(f"rlkit: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ParseError as exc:
        print(f"rlkit: parse error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except ValidationError as exc:
        print(f"rlkit: invalid algebra: {exc}", file=sys.stderr)
        if exc.witness:
            print(f"rlkit: witness {exc.witness}", file=sys.stderr)
        return EXIT_INVALID
    except TheoremViolation as exc:
        print(f"rlkit: theorem violation: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    if args.json:
        sys.stdout.write(report.to_json(rep) + "\n")
    else:
        sys.stdout.write(report.render_text(rep))
    return code


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
