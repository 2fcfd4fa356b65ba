"""Command-line front end: ``yamabif analyze | diagram | spectrum``.

Exit codes: 0 success, 1 usage or input error, 2 degenerate pair,
3 insufficient truncation.
"""

import argparse
import json
import os
import sys

from .errors import (
    DegeneratePairError,
    InsufficientTruncationError,
    YamabifError,
)
from .family import make_family
from .rationals import parse_rational
from .report import build_report, check_telescoping, diagram_csv, report_to_json
from .spectra import (
    catalog_count,
    catalog_factor,
    factor_to_dict,
    load_factor,
    parse_catalog,
    write_atomic,
)

EXIT_OK, EXIT_USAGE, EXIT_DEGENERATE, EXIT_TRUNCATION = 0, 1, 2, 3


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(f"{self.prog}: error: {message}")


def _is_catalog(source):
    return not os.path.exists(source) and ":" in source


def _load_source(source):
    if _is_catalog(source):
        return catalog_factor(source)
    return load_factor(source)


def _refine_truncation(exc, sources):
    source = sources[exc.factor]
    if _is_catalog(source):
        kind, n, _ = parse_catalog(source)
        return exc.with_needed(catalog_count(kind, n, exc.threshold))
    return exc


def _emit(text, output):
    if output is None or output == "-":
        sys.stdout.write(text)
    else:
        write_atomic(output, text)


def _cmd_analyze(args):
    fam = make_family(_load_source(args.factor0), _load_source(args.factor1))
    lo, hi = (parse_rational(x) for x in args.window)
    report = build_report(fam, lo, hi, obstruction=args.obstruction)
    if not check_telescoping(report):
        raise YamabifError("internal error: index samples do not telescope with the instant jumps")
    _emit(report_to_json(report), args.output)
    return EXIT_OK


def _cmd_diagram(args):
    if args.branches is not None and args.branches < 1:
        raise _UsageError("--branches must be >= 1")
    if args.samples < 1:
        raise _UsageError("--samples must be >= 1")
    fam = make_family(_load_source(args.factor0), _load_source(args.factor1))
    lo, hi = (parse_rational(x) for x in args.window)
    _emit(diagram_csv(fam, lo, hi, args.samples, args.branches), args.output)
    return EXIT_OK


def _cmd_spectrum(args):
    spec = catalog_factor(args.descriptor)
    _emit(json.dumps(factor_to_dict(spec), indent=2) + "\n", args.output)
    return EXIT_OK


def build_parser():
    parser = _Parser(prog="yamabif", description="Degeneracy and bifurcation instants of product Yamabe families.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add_family_args(p):
        p.add_argument("factor0", help="catalog descriptor (sphere:n:count, rp:n:count) or spectrum JSON file")
        p.add_argument("factor1", help="second factor, same forms")
        p.add_argument("--window", nargs=2, required=True, metavar=("LO", "HI"), help="rational bounds, e.g. 1/10 3")
        p.add_argument("--output", "-o", default=None, help="output path (default: stdout)")

    p = sub.add_parser("analyze", help="instants, index jumps and rigidity intervals as JSON")
    add_family_args(p)
    p.add_argument("--obstruction", action="store_true", help="add non-Yamabe certificates")
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("diagram", help="CSV samples of the eigenvalue branches")
    add_family_args(p)
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--branches", type=int, default=None, help="only branches with i, j below this cap")
    p.set_defaults(func=_cmd_diagram)

    p = sub.add_parser("spectrum", help="write a catalog spectrum as a spectrum file")
    p.add_argument("descriptor", help="sphere:n:count or rp:n:count")
    p.add_argument("--output", "-o", default=None)
    p.set_defaults(func=_cmd_spectrum)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except _UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except DegeneratePairError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    except InsufficientTruncationError as exc:
        print(f"error: {_refine_truncation(exc, [args.factor0, args.factor1])}", file=sys.stderr)
        return EXIT_TRUNCATION
    except (YamabifError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
