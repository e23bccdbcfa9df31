"""Command-line front end: compute, classify, verify, density.

Exit codes: 0 success / verified, 1 verification found mismatches, 2 usage
error, 3 resource limit exceeded.
"""

import argparse
import csv
import itertools
import json
import sys
from contextlib import contextmanager

from . import checks, density, engines
from .classify import Mod8Kind, classify_div5, classify_mod3, classify_mod8

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_USAGE = 2
EXIT_RESOURCE_LIMIT = 3

_EPILOG = (
    "Ranges are half-open: '0..10' means indices 0 through 9, a bare '7' "
    "means just 7.  The environment variable "
    f"{engines.CEILING_ENV_VAR} overrides the default engine ceiling "
    f"({engines.DEFAULT_CEILING})."
)


def _range_type(text: str) -> "tuple[int, int]":
    if ".." in text:
        left, right = text.split("..", 1)
        lo, hi = int(left), int(right)
    else:
        lo = int(text)
        hi = lo + 1
    if lo < 0 or hi < lo:
        raise ValueError(f"bad range {text!r}")
    return lo, hi


def _fraction_str(value) -> str:
    return f"{value.numerator}/{value.denominator}"


def _decimal(value) -> str:
    return f"{float(value):.12g}"


class _Emitter:
    """One table with a fixed column schema, as CSV or JSON lines."""

    def __init__(self, columns, fmt: str, handle) -> None:
        self.columns = columns
        self.fmt = fmt
        self.handle = handle
        if fmt == "csv":
            self.writer = csv.writer(handle, lineterminator="\n")
            self.writer.writerow(columns)

    def row(self, values) -> None:
        if self.fmt == "csv":
            self.writer.writerow(["" if v is None else v for v in values])
        else:
            record = dict(zip(self.columns, values))
            self.handle.write(json.dumps(record, separators=(",", ":")) + "\n")


@contextmanager
def _emitter(args, columns):
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as handle:
            yield _Emitter(columns, args.format, handle)
    else:
        yield _Emitter(columns, args.format, sys.stdout)


def _add_output_options(sub) -> None:
    sub.add_argument("--format", choices=("csv", "jsonl"), default="csv",
                     help="output format (default: csv)")
    sub.add_argument("--out", default=None, metavar="PATH",
                     help="write output to PATH instead of stdout")


def _compute_rows(engine: str, lo: int, hi: int, modulus):
    if lo == hi:
        return
    if engine == "convolution":
        stream = engines.motzkin_mod_stream(modulus, hi)
        for n in range(lo, hi):
            yield n, stream.values[n]
        return
    if engine == "sum":
        values = (engines.motzkin_exact(n) for n in range(lo, hi))
    else:
        engines.ensure_within_ceiling(hi, "stream length")
        values = itertools.islice(engines.iter_motzkin_exact(), lo, hi)
    for n, value in zip(range(lo, hi), values):
        yield n, (value if modulus is None else value % modulus)


def _cmd_compute(parser, args) -> int:
    lo, hi = args.range
    if args.mod is not None and args.mod < 2:
        parser.error("--mod must be at least 2")
    engine = args.engine or ("convolution" if args.mod is not None else "holonomic")
    if engine == "convolution" and args.mod is None:
        parser.error("engine 'convolution' requires --mod")
    columns = ("n", "value") if args.mod is None else ("n", "residue")
    with _emitter(args, columns) as emit:
        for row in _compute_rows(engine, lo, hi, args.mod):
            emit.row(row)
    return EXIT_OK


_CLASSIFY_COLUMNS = {
    2: ("n", "residue", "eps", "delta", "i", "j"),
    3: ("n", "residue"),
    4: ("n", "class", "eps", "delta", "i", "j"),
    5: ("n", "divisible", "form", "i", "j"),
    8: ("n", "class", "eps", "delta", "i", "j", "y"),
}


def _classify_row(modulus: int, n: int):
    if modulus in (2, 4, 8):
        outcome = classify_mod8(n)
        witness = outcome.witness
        if modulus == 2:
            head = (n, 0 if outcome.is_even else 1)
        elif modulus == 4:
            if outcome.kind is Mod8Kind.ODD:
                label = "odd"
            elif outcome.kind is Mod8Kind.RESIDUE_4:
                label = "0"
            else:
                label = "2"
            head = (n, label)
        else:
            head = (n, outcome.kind.value)
        tail = (witness.eps, witness.delta, witness.i, witness.j) if witness \
            else (None, None, None, None)
        if modulus == 8:
            tail = tail + (outcome.ones_count,)
        return head + tail
    if modulus == 3:
        return n, classify_mod3(n)
    outcome = classify_div5(n)
    if outcome.divisible:
        return n, 1, outcome.form, outcome.witness.i, outcome.witness.j
    return n, 0, None, None, None


def _cmd_classify(parser, args) -> int:
    lo, hi = args.range
    with _emitter(args, _CLASSIFY_COLUMNS[args.mod]) as emit:
        for n in range(lo, hi):
            emit.row(_classify_row(args.mod, n))
    return EXIT_OK


def _cmd_verify(parser, args) -> int:
    report = checks.verify_classifiers(args.mod, args.count)
    columns = ("modulus", "checked", "mismatches", "first_mismatch")
    with _emitter(args, columns) as emit:
        emit.row((report.modulus, report.checked, report.mismatches,
                  report.first_mismatch))
    return EXIT_OK if report.ok else EXIT_VERIFICATION_FAILED


_CLOSED_COLUMNS = ("label", "limit", "limit_decimal")
_EMPIRICAL_COLUMNS = ("label", "limit", "limit_decimal", "N", "count",
                      "ratio", "abs_discrepancy", "error_bound")


def _cmd_density(parser, args) -> int:
    if args.selector == "table":
        with _emitter(args, _CLOSED_COLUMNS) as emit:
            for label, value in density.density_table():
                emit.row((label, _fraction_str(value), _decimal(value)))
        return EXIT_OK
    try:
        limit_value = density.density_limit(args.selector)
    except ValueError as exc:
        parser.error(str(exc))
    if args.closed:
        with _emitter(args, _CLOSED_COLUMNS) as emit:
            emit.row((args.selector, _fraction_str(limit_value),
                      _decimal(limit_value)))
        return EXIT_OK
    if args.horizon is None:
        parser.error("-N/--horizon is required unless --closed")
    if args.horizon < 1:
        parser.error("-N/--horizon must be at least 1")
    if args.parts < 1:
        parser.error("--parts must be at least 1")
    report = density.empirical_density(args.selector, args.horizon,
                                       parts=args.parts)
    with _emitter(args, _EMPIRICAL_COLUMNS) as emit:
        emit.row((
            report.label,
            _fraction_str(report.limit_value),
            _decimal(report.limit_value),
            report.horizon,
            report.observed_count,
            _decimal(report.observed_ratio),
            _decimal(report.abs_discrepancy),
            None if report.error_bound is None else _decimal(report.error_bound),
        ))
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="motzkinlab",
        description="Motzkin numbers modulo small moduli: values, digit "
                    "classifications, verification sweeps, densities.",
        epilog=_EPILOG,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    compute = sub.add_parser("compute", help="emit Motzkin values or residues",
                             epilog=_EPILOG)
    compute.add_argument("range", type=_range_type,
                         help="index range a..b (half-open) or single index")
    compute.add_argument("--mod", type=int, default=None,
                         help="reduce values modulo this integer (>= 2)")
    compute.add_argument("--engine", choices=("sum", "holonomic", "convolution"),
                         default=None,
                         help="default: holonomic, or convolution with --mod")
    _add_output_options(compute)
    compute.set_defaults(func=_cmd_compute)

    classify = sub.add_parser("classify",
                              help="digit-classify indices without computing M(n)",
                              epilog=_EPILOG)
    classify.add_argument("range", type=_range_type,
                          help="index range a..b (half-open) or single index")
    classify.add_argument("--mod", type=int, choices=(2, 3, 4, 5, 8),
                          required=True, help="modulus to classify against")
    _add_output_options(classify)
    classify.set_defaults(func=_cmd_classify)

    verify = sub.add_parser("verify",
                            help="compare classifiers with engine residues",
                            epilog=_EPILOG)
    verify.add_argument("count", type=int,
                        help="check all indices n < count")
    verify.add_argument("--mod", type=int, choices=(2, 3, 4, 5, 8),
                        required=True, help="modulus to verify")
    _add_output_options(verify)
    verify.set_defaults(func=_cmd_verify)

    dens = sub.add_parser("density",
                          help="closed-form and empirical class densities",
                          epilog=_EPILOG)
    dens.add_argument("selector",
                      help="class label (see 'density table'), or 'table'")
    dens.add_argument("-N", "--horizon", type=int, default=None,
                      help="count class members among n < N")
    mode = dens.add_mutually_exclusive_group()
    mode.add_argument("--closed", action="store_true",
                      help="emit only the exact limit")
    mode.add_argument("--empirical", action="store_true",
                      help="emit the finite-N report")
    mode.add_argument("--both", action="store_true",
                      help="limit plus finite-N report (default)")
    dens.add_argument("--parts", type=int, default=1,
                      help="count over this many consecutive partitions")
    _add_output_options(dens)
    dens.set_defaults(func=_cmd_density)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(parser, args)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    except engines.ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE_LIMIT


if __name__ == "__main__":
    sys.exit(main())
