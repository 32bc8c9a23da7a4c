"""Command-line surface.

Every capability of the library is reachable as a subcommand with stable,
scriptable output.  Exit codes: 0 on success, 1 on a verification or
convergence failure, 2 on usage or input errors.  Long runs report progress
on stderr only, keeping stdout clean for piping.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from . import cosmology
from . import particles as particles_mod
from . import spectral, splitting
from .core import (
    ConvergenceError,
    DigitString,
    InvalidDigitError,
    LengthBudgetError,
    SearchBudgetError,
    SplitDomainError,
    TokenString,
    fixed_point_search,
    iterate,
    iterate_tokens,
)

JOBS_ENV = "AUDIOACTIVE_JOBS"

LAMBDA_DECIMALS = 9
FREQ_DECIMALS = 6


def _default_jobs() -> int:
    try:
        return max(1, int(os.environ.get(JOBS_ENV, "1")))
    except ValueError:
        return 1


def _registry_sorted(symbols) -> list[str]:
    return sorted(symbols, key=particles_mod.REGISTRY_ORDER.index)


# ---------------------------------------------------------------------------
# Subcommand handlers
# ---------------------------------------------------------------------------

def _cmd_step(args) -> int:
    if args.tokens:
        for it in iterate_tokens(TokenString.parse(args.string), args.n):
            print(it.render())
        return 0
    seed = DigitString(args.string, args.base)
    for it in iterate(seed, args.n):
        print(it.text)
    return 0


def _cmd_decompose(args) -> int:
    s = DigitString(args.string, 3)
    dec = splitting.decompose(s, args.mode)
    if args.format == "json":
        print(json.dumps(dec.to_json()))
    else:
        print(f"{dec.render()} = {dec.particle_names()}")
    return 0


def _cmd_verify(args) -> int:
    def progress(length: int, count: int) -> None:
        print(f"verify: length {length} ({count} strings)", file=sys.stderr)

    report = cosmology.verify_cosmological(cap=args.cap, jobs=args.jobs, progress=progress)
    csv_text = report.table.to_csv()
    if args.out:
        with open(args.out, "w", encoding="ascii") as fh:
            fh.write(csv_text)
        verdict_stream = sys.stdout
    else:
        sys.stdout.write(csv_text)
        verdict_stream = sys.stderr
    if report.verified:
        print(
            f"VERIFIED max_iterations={report.max_iterations} strings={report.total_strings}",
            file=verdict_stream,
        )
        return 0
    for text in report.failures:
        print(f"FAIL {text} exceeded cap", file=verdict_stream)
    return 1


def _cmd_ancients(args) -> int:
    strings = [s.text for s in cosmology.enumerate_essential_ancient(args.length)]
    if args.count_only:
        if args.format == "json":
            print(json.dumps({"length": args.length, "count": len(strings)}))
        else:
            print(len(strings))
        return 0
    if args.format == "json":
        print(json.dumps({"length": args.length, "count": len(strings), "strings": strings}))
    elif args.format == "csv":
        print("string")
        for text in strings:
            print(text)
    else:
        for text in strings:
            print(text)
    return 0


def _cmd_fixedpoints(args) -> int:
    fixed = [
        s.text
        for s in fixed_point_search(args.base, args.max_len, primitive_only=not args.all)
    ]
    if args.format == "json":
        print(json.dumps({"base": args.base, "max_len": args.max_len, "fixed": fixed}))
    elif args.format == "csv":
        print("string")
        for text in fixed:
            print(text)
    else:
        for text in fixed:
            print(text)
    return 0


def _cmd_growth(args) -> int:
    seed = DigitString(args.seed, args.base)
    est = spectral.empirical_growth(seed, args.iters)
    if args.format == "json":
        print(json.dumps(est.to_json()))
    elif args.format == "csv":
        print("n,length,ratio")
        for n, length in enumerate(est.lengths):
            ratio = "" if n == 0 else f"{est.ratios[n - 1]:.{LAMBDA_DECIMALS}f}"
            print(f"{n},{length},{ratio}")
    else:
        print(f"estimate={est.estimate:.{LAMBDA_DECIMALS}f}")
        print(f"final_length={est.lengths[-1]}")
    return 0


def _cmd_frequencies(args) -> int:
    freqs = spectral.limiting_frequencies(power=args.power)
    if args.format == "json":
        print(json.dumps({sym: round(freqs[sym], FREQ_DECIMALS) for sym in spectral.MATRIX_ORDER}))
    elif args.format == "csv":
        sys.stdout.write(spectral.frequencies_csv(freqs))
    else:
        for sym in spectral.MATRIX_ORDER:
            print(f"{sym} {freqs[sym]:.{FREQ_DECIMALS}f}")
    return 0


def _cmd_spectrum(args) -> int:
    matrix = spectral.fermion_matrix()
    if args.table == "charpoly":
        sys.stdout.write(spectral.charpoly_csv(spectral.characteristic_polynomial(matrix)))
        return 0
    if args.table == "eigenvalues":
        sys.stdout.write(spectral.eigenvalues_csv(spectral.eigenvalues(matrix)))
        return 0
    lam = spectral.dominant_eigenvalue(matrix)
    coeffs = spectral.characteristic_polynomial(matrix)
    _, remainder = spectral.polynomial_division(coeffs, spectral.GROWTH_POLYNOMIAL)
    power = spectral.primitivity_power(matrix)
    if args.format == "json":
        print(
            json.dumps(
                {
                    "lambda": round(lam, LAMBDA_DECIMALS),
                    "characteristic_polynomial": list(coeffs),
                    "growth_polynomial_divides": not remainder,
                    "primitivity_power": power,
                }
            )
        )
    else:
        print(f"lambda={lam:.{LAMBDA_DECIMALS}f}")
        print("characteristic_polynomial=" + ",".join(map(str, coeffs)))
        print(f"growth_polynomial_divides={'true' if not remainder else 'false'}")
        print(f"primitivity_power={power}")
    return 0


def _cmd_kvalue(args) -> int:
    report = cosmology.k_value(
        DigitString(args.string, 3),
        max_iter=args.iters,
        window=args.window,
        warmup=args.warmup,
    )
    if args.format == "json":
        print(json.dumps(report.to_json()))
    else:
        if isinstance(report.k, tuple):
            print(f"k={report.k[0]}..{report.k[1]}")
        else:
            print(f"k={report.k}")
        print(f"stabilized={'true' if report.stabilized else 'false'}")
        print(f"iterations_to_common={report.iterations}")
        print("limsup=" + ",".join(_registry_sorted(report.limsup)))
        print("liminf=" + ",".join(_registry_sorted(report.liminf)))
    return 0


def _cmd_particles(args) -> int:
    data = particles_mod.registry_json()
    if args.format == "json":
        print(json.dumps(data))
    else:
        for entry in data:
            products = ".".join(entry["products"])
            print(f"{entry['symbol']:>2} {entry['digits']:>8} {entry['class']:<8} -> {products}")
    return 0


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------

def _add_format(parser: argparse.ArgumentParser, choices=("text", "csv", "json")) -> None:
    parser.add_argument("--format", choices=choices, default="text", help="output format")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="audioactive",
        description="Base-3 look-and-say dynamics: iteration, splitting, verification, spectra.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("step", help="iterate the describing step on a string")
    p.add_argument("string", help="digit string, or comma-separated tokens with --tokens")
    p.add_argument("--base", type=int, default=3, help="digit base (2..10, default 3)")
    p.add_argument("--n", type=int, default=1, help="number of iterations")
    p.add_argument("--tokens", action="store_true", help="token mode (counts stay atomic)")
    p.set_defaults(func=_cmd_step)

    p = sub.add_parser("decompose", help="factor a base-3 string into irreducible segments")
    p.add_argument("string")
    p.add_argument("--mode", choices=("full", "conservative"), default="full")
    _add_format(p, ("text", "json"))
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("verify", help="verify decay of every essential ancient string")
    p.add_argument("--out", help="write the decay-table CSV to this path instead of stdout")
    p.add_argument("--jobs", type=int, default=_default_jobs(), help=f"worker processes (${JOBS_ENV})")
    p.add_argument("--cap", type=int, default=cosmology.DEFAULT_CAP, help="iteration cap")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("ancients", help="enumerate essential ancient strings of one length")
    p.add_argument("--length", type=int, required=True)
    p.add_argument("--count-only", action="store_true")
    _add_format(p)
    p.set_defaults(func=_cmd_ancients)

    p = sub.add_parser("fixedpoints", help="exhaustively search for step-fixed strings")
    p.add_argument("--base", type=int, default=3)
    p.add_argument("--max-len", type=int, default=16)
    p.add_argument(
        "--all",
        action="store_true",
        help="include concatenations of smaller fixed strings",
    )
    _add_format(p)
    p.set_defaults(func=_cmd_fixedpoints)

    p = sub.add_parser("growth", help="estimate the length growth rate empirically")
    p.add_argument("--seed", default="1")
    p.add_argument("--base", type=int, default=3)
    p.add_argument("--iters", type=int, default=60)
    _add_format(p)
    p.set_defaults(func=_cmd_growth)

    p = sub.add_parser("frequencies", help="limiting fermion frequencies")
    p.add_argument("--power", type=int, default=256, help="matrix power used for the limit")
    _add_format(p)
    p.set_defaults(func=_cmd_frequencies)

    p = sub.add_parser("spectrum", help="dominant eigenvalue and characteristic polynomial")
    p.add_argument("--table", choices=("charpoly", "eigenvalues"), help="emit a CSV table")
    _add_format(p, ("text", "json"))
    p.set_defaults(func=_cmd_spectrum)

    p = sub.add_parser("kvalue", help="long-run particle support of a seed string")
    p.add_argument("string")
    p.add_argument("--iters", type=int, default=64, help="cap on iterations to become common")
    p.add_argument("--window", type=int, default=32, help="observation window")
    p.add_argument("--warmup", type=int, default=32, help="steps evolved before observing")
    _add_format(p, ("text", "json"))
    p.set_defaults(func=_cmd_kvalue)

    p = sub.add_parser("particles", help="dump the particle registry and decay chart")
    _add_format(p, ("json", "text"))
    p.set_defaults(func=_cmd_particles)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InvalidDigitError, SplitDomainError, SearchBudgetError, LengthBudgetError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ConvergenceError as exc:
        print(f"failure: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
