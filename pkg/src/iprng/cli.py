"""Command-line interface.

Exit codes: 0 success, 1 usage error or unachievable period, 2 verification
mismatch, 3 invalid modulus, 4 size guard, 5 internal inconsistency.
"""

from __future__ import annotations

import argparse
import contextlib
import csv
import sys
from typing import List, Optional

from . import census
from .analytic import predict_period
from .design import Unachievable, VerificationFailed, design
from .errors import ModulusTooSmall, NotPrime, TooLarge
from .field import PrimeModulus, modulus
from .generator import IprngParams, measure_period, sequence

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_MISMATCH = 2
EXIT_MODULUS = 3
EXIT_TOO_LARGE = 4
EXIT_INTERNAL = 5


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _add_modulus(p: argparse.ArgumentParser) -> None:
    p.add_argument("-N", "--modulus", type=int, required=True, help="prime modulus N > 3")


def _add_triple(p: argparse.ArgumentParser) -> None:
    p.add_argument("-a", type=int, required=True)
    p.add_argument("-b", type=int, required=True)
    p.add_argument("-x", "--x0", type=int, required=True)


def _add_output(p: argparse.ArgumentParser) -> None:
    p.add_argument("--output", help="write to this file instead of standard output")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="iprng", description="Periods of inversive generators x -> a/x + b over Z_N.")
    sub = parser.add_subparsers(dest="subcommand", required=True, parser_class=_Parser)

    p = sub.add_parser("period", help="period of one (a, b, x0)")
    _add_modulus(p)
    _add_triple(p)
    p.add_argument("--method", choices=["brute", "analytic", "both"], default="both")
    _add_output(p)

    p = sub.add_parser("seq", help="print x_1 .. x_n")
    _add_modulus(p)
    _add_triple(p)
    p.add_argument("-n", "--count", type=int, default=10)
    _add_output(p)

    p = sub.add_parser("census", help="period distribution of a parameter family as CSV")
    _add_modulus(p)
    p.add_argument("--family", choices=[f.value for f in census.Family], required=True)
    p.add_argument("--verify", action="store_true", help="also enumerate every instance and compare")
    p.add_argument("--scatter", action="store_true", help="emit one row per instance instead")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--force-large", action="store_true", help=f"allow enumeration above N={census.MAX_BRUTE_N}")
    _add_output(p)

    p = sub.add_parser("periods", help="achievable periods with analytic counts")
    _add_modulus(p)
    p.add_argument("--family", choices=[f.value for f in census.Family], default="units")
    _add_output(p)

    p = sub.add_parser("design", help="parameter triples achieving a target period")
    _add_modulus(p)
    p.add_argument("--period", type=int, required=True)
    p.add_argument("-n", "--count", type=int, default=1)
    _add_output(p)
    return parser


@contextlib.contextmanager
def _open_output(path: Optional[str]):
    if path is None:
        yield sys.stdout
    else:
        with open(path, "w", newline="") as fh:
            yield fh


def _reduce(name: str, value: int, n: int) -> int:
    if not 0 <= value < n:
        print(f"warning: {name}={value} reduced mod {n} to {value % n}", file=sys.stderr)
    return value % n


def _params(args, m: PrimeModulus) -> IprngParams:
    n = m.value
    return IprngParams.of(m, _reduce("a", args.a, n), _reduce("b", args.b, n), _reduce("x0", args.x0, n))


def cmd_period(args, m: PrimeModulus) -> int:
    params = _params(args, m)
    code = EXIT_OK
    with _open_output(args.output) as out:
        print(f"N={m.value} a={params.a.residue} b={params.b.residue} x0={params.x0.residue}", file=out)
        measured = predicted = None
        if args.method in ("brute", "both"):
            measured = measure_period(params)
            hz = "true" if measured.hits_zero else "false"
            print(f"measured: preperiod={measured.preperiod} period={measured.period} hits_zero={hz}", file=out)
        if args.method in ("analytic", "both"):
            predicted = predict_period(params)
            k = "-" if predicted.k is None else predicted.k
            print(f"predicted: class={predicted.tag.value} k={k} period={predicted.predicted_period}", file=out)
        if measured is not None and predicted is not None:
            if measured.period == predicted.predicted_period:
                print("match", file=out)
            else:
                print("MISMATCH", file=out)
                code = EXIT_MISMATCH
    return code


def cmd_seq(args, m: PrimeModulus) -> int:
    if args.count < 0:
        print("error: count must be >= 0", file=sys.stderr)
        return EXIT_USAGE
    params = _params(args, m)
    with _open_output(args.output) as out:
        for x in sequence(params, args.count):
            out.write(f"{x.residue}\n")
    return EXIT_OK


def cmd_census(args, m: PrimeModulus) -> int:
    family = census.Family(args.family)
    if args.scatter:
        records = census.scatter_dump(m, family, workers=args.workers, force_large=args.force_large)
        first = next(records)  # trips the size guard before any output is opened
        with _open_output(args.output) as out:
            census.write_scatter_csv(_chain(first, records), out)
        return EXIT_OK
    analytic = census.analytic_distribution(m, family)
    if args.verify:
        brute = census.brute_force_distribution(m, family, workers=args.workers, force_large=args.force_large)
        report = census.compare(analytic, brute)
    else:
        report = census.analytic_report(analytic)
    with _open_output(args.output) as out:
        census.write_census_csv(report, out)
    if args.verify and not report.all_match:
        print(f"mismatch at periods {report.mismatches}", file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK


def _chain(first, rest):
    yield first
    yield from rest


def cmd_periods(args, m: PrimeModulus) -> int:
    table = census.analytic_distribution(m, census.Family(args.family))
    with _open_output(args.output) as out:
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["period", "count"])
        writer.writerows((p, c) for p, c in table.counts.items() if c)
    return EXIT_OK


def cmd_design(args, m: PrimeModulus) -> int:
    if args.count < 1:
        print("error: count must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    try:
        triples = design(m, args.period, args.count)
    except Unachievable as exc:
        print(f"{exc}; achievable periods: {','.join(map(str, exc.achievable))}", file=sys.stderr)
        return EXIT_USAGE
    except VerificationFailed as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    if len(triples) < args.count:
        print(f"warning: only {len(triples)} triples of period {args.period} exist", file=sys.stderr)
    with _open_output(args.output) as out:
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["a", "b", "x0", "period"])
        for params in triples:
            writer.writerow([params.a.residue, params.b.residue, params.x0.residue, args.period])
    return EXIT_OK


COMMANDS = {
    "period": cmd_period,
    "seq": cmd_seq,
    "census": cmd_census,
    "periods": cmd_periods,
    "design": cmd_design,
}


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        m = modulus(args.modulus)
    except (NotPrime, ModulusTooSmall, ValueError) as exc:
        print(f"error: invalid modulus: {exc}", file=sys.stderr)
        return EXIT_MODULUS
    try:
        return COMMANDS[args.subcommand](args, m)
    except TooLarge as exc:
        print(f"error: {exc}; pass --force-large to override", file=sys.stderr)
        return EXIT_TOO_LARGE


if __name__ == "__main__":
    sys.exit(main())
