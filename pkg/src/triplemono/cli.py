"""Command line interface: ``triplemono analyze | pencil | verify | export``.

Exit codes: 0 success, 1 invalid arrangement, 2 hypothesis violation or not
a pencil, 3 parse error, 4 parameter rejection, 5 verification failure.
"""

from __future__ import annotations

import argparse
import sys

from . import catalog
from .arrangement import build_lattice, certify_triple_only
from .errors import ArrangementError, ArrangementParseError, NotAPencil
from .exactfield import parse_rational
from .fileio import format_arrangement, read_arrangement, report_json
from .monodromy import analyze, classify, cross_validate
from .pencil import format_partition, parse_partition, profile, search_pencil, validate_partition
from .verify import verify_catalog

EXIT_OK = 0
EXIT_VERIFY_FAILED = 5


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise ArrangementParseError(f"{self.prog}: {message}")


def _catalog_params(args) -> dict:
    params = {}
    try:
        if getattr(args, "c", None) is not None:
            params["c"] = parse_rational(args.c)
        if getattr(args, "hyperplane", None) is not None:
            parts = args.hyperplane.split(",")
            if len(parts) != 3:
                raise ValueError("--hyperplane needs three comma-separated rationals")
            params["hyperplane"] = tuple(parse_rational(t) for t in parts)
    except ValueError as exc:
        raise ArrangementParseError(str(exc)) from exc
    return params


def _load(args):
    if getattr(args, "catalog", None):
        return catalog.build(args.catalog, **_catalog_params(args)).arrangement
    if not getattr(args, "path", None):
        raise ArrangementParseError("give an arrangement file or --catalog NAME")
    return read_arrangement(args.path)


def _print_text_report(a, cert, rep, pred, validation, out):
    p = pred.pencil
    print(f"arrangement: {a.label or '(unnamed)'}  d = {a.d}" + (f", m = {rep.m}" if rep.m else ""), file=out)
    print(f"lattice: {len(cert.double_points)} double points, {len(cert.triple_points)} triple points", file=out)
    if p is None:
        print("pencil: none", file=out)
    else:
        prof = profile(p)
        print(
            f"pencil: {format_partition(p.partition)}  |T0| = {len(p.T0)}, "
            f"(|T1|, |T2|, |T3|) = {prof.sizes}, sigma = {prof.sigma}",
            file=out,
        )
        for i, q in enumerate(p.Q, 1):
            print(f"  Q{i} = {q}", file=out)
    if rep.trivial_monodromy and rep.m is None:
        print("monodromy: trivial (d is not a multiple of 3)", file=out)
    print(f"monodromy: s = dim H^1,0(F)_eps = dim H^0,1(F)_eps^2 = {rep.s}", file=out)
    print(f"  dim H^1,0(F)_eps^2 = dim H^0,1(F)_eps = {rep.h10_epsbar}", file=out)
    print(f"  b1(F) = {rep.b1_F}, characteristic polynomial {rep.char_poly_str()}", file=out)
    ps = "n/a" if pred.predicted_s is None else pred.predicted_s
    print(f"theorem: branch {pred.branch}, predicted s = {ps}", file=out)
    for e in pred.conics:
        if e.conic is None:
            print(f"  {e.points_set}: on no conic (max {e.max_collinear} collinear)", file=out)
        else:
            kind = "smooth" if e.smooth else "singular"
            print(f"  {e.points_set}: on conic {e.conic} ({kind}, max {e.max_collinear} collinear)", file=out)
    if validation is not None:
        for c in validation.checks:
            print(f"  [{'pass' if c.passed else 'FAIL'}] {c.name}: {c.detail}", file=out)
        if validation.witness is not None:
            print(f"  mismatch witness written to {validation.witness}", file=out)


def cmd_analyze(args, out) -> int:
    a = _load(args)
    cert = certify_triple_only(build_lattice(a))
    validation = None
    if args.check_prop1:
        validation = cross_validate(a, cert, witness_dir=args.witness_dir)
        rep, pred = validation.report, validation.prediction
    else:
        rep = analyze(a, cert)
        pred = classify(a, cert)
    if args.json:
        out.write(report_json(a, rep, pred, len(cert.double_points), validation))
    else:
        _print_text_report(a, cert, rep, pred, validation, out)
    return EXIT_OK


def cmd_pencil(args, out) -> int:
    a = _load(args)
    cert = certify_triple_only(build_lattice(a))
    if args.partition is not None:
        try:
            parts = parse_partition(args.partition)
        except ValueError as exc:
            raise ArrangementParseError(str(exc)) from exc
        p = validate_partition(a, parts, cert)
    else:
        p = search_pencil(a, cert)
        if p is None:
            print("no pencil", file=out)
            return EXIT_OK
    print(f"partition: {format_partition(p.partition)}", file=out)
    for i, q in enumerate(p.Q, 1):
        print(f"Q{i} = {q}", file=out)
    for i, T in enumerate(p.T):
        print(f"T{i} ({len(T)}):" + "".join(f" {t}" for t in T), file=out)
    return EXIT_OK


def cmd_verify(args, out) -> int:
    names = None if args.all else [args.name]
    results = verify_catalog(names, invariance_trials=args.trials)
    failed = 0
    for name, checks in results.items():
        for c in checks:
            failed += not c.passed
            print(f"{name:12s} {c.name:32s} {'pass' if c.passed else 'FAIL'}  {c.detail}", file=out)
    print(f"{'all checks passed' if not failed else f'{failed} check(s) failed'}", file=out)
    return EXIT_OK if not failed else EXIT_VERIFY_FAILED


def cmd_export(args, out) -> int:
    out.write(format_arrangement(_load(args)))
    return EXIT_OK


def _add_source(p, path_required=False):
    p.add_argument("path", nargs=None if path_required else "?", help="arrangement file")
    p.add_argument("--catalog", choices=catalog.NAMES, help="use a built-in arrangement instead of a file")
    p.add_argument("--c", help="parameter c of yoshinaga18 (rational)")
    p.add_argument("--hyperplane", help="section hyperplane of d4section, e.g. 2,3,5")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="triplemono", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("analyze", help="monodromy eigenspace dimensions")
    _add_source(p)
    p.add_argument("--json", action="store_true", help="emit the JSON report")
    p.add_argument("--check-prop1", action="store_true", help="also run the cross-validation checks")
    p.add_argument("--witness-dir", help="where to write mismatch witnesses")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("pencil", help="validate or search a reduced pencil")
    _add_source(p)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--partition", help='three groups of 0-based line indices, e.g. "0,1;2,3;4,5"')
    g.add_argument("--search", action="store_true", help="search the canonical pencil (default)")
    p.set_defaults(func=cmd_pencil)

    p = sub.add_parser("verify", help="run the catalog verification suite")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--all", action="store_true")
    g.add_argument("--name", choices=catalog.NAMES)
    p.add_argument("--trials", type=int, default=2, help="random coordinate changes per entry")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("export", help="write an arrangement in canonical file form")
    _add_source(p)
    p.set_defaults(func=cmd_export)
    return parser


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        return args.func(args, out)
    except NotAPencil as exc:
        print(f"not a pencil: {exc}", file=err)
        return exc.exit_code
    except ArrangementError as exc:
        print(f"error: {exc}", file=err)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
