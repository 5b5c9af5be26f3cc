"""Command-line range verifier and report emitter.

Subcommands mirror the verification tasks; each sweeps [--from, --to] and
writes exactly one report to stdout (or --out), with progress and summary
lines on stderr only. Exit codes: 0 when the statement held, 1 when a
failure was found, 2 on usage errors, 3 when a table would exceed the
memory budget (override with PHISYSTEMS_MEMORY_BUDGET, e.g. "512M").
"""

import argparse
import math
import os
import sys

from .arith import DEFAULT_MEMORY_BUDGET, MemoryBudgetError, build_spf
from .certify import certify
from .sweep import TASKS, FORMATS, SweepOptions, emit_counts, emit_report, run_sweep

__all__ = ["main"]

BUDGET_ENV = "PHISYSTEMS_MEMORY_BUDGET"

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3


def _int_arg(text: str) -> int:
    """Integer CLI argument; tolerates underscores and 1e6-style notation."""
    t = text.replace("_", "")
    try:
        return int(t)
    except ValueError:
        pass
    try:
        v = float(t)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if not v.is_integer():
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    return int(v)


def _parse_budget(text: str) -> int:
    t = text.strip().upper()
    scale = 1
    if t and t[-1] in "KMG":
        scale = {"K": 1 << 10, "M": 1 << 20, "G": 1 << 30}[t[-1]]
        t = t[:-1]
    try:
        value = int(t)
    except ValueError:
        raise ValueError(f"cannot parse memory budget {text!r}") from None
    if value <= 0:
        raise ValueError(f"memory budget must be positive, got {text!r}")
    return value * scale


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="phisystems",
        description="Verify prime-split statements over a range and report witnesses.",
    )
    sub = parser.add_subparsers(dest="task", required=True)
    descriptions = {
        "certify": "Fermat-congruence primality certification",
        "bertrand": "a prime strictly between n and 2n-2, with its count identity",
        "binary": "even 2n as a sum of two primes (n-x, n+x)",
        "ternary": "odd n as a sum of three primes (n-x-y, 2x-n, n-x+y)",
        "peculiar": "triple splits whose first two components include the prime 3",
        "proposition": "triple-with-3 exists iff n-3 is a sum of two primes",
    }
    for task in TASKS:
        sp = sub.add_parser(task, help=descriptions[task])
        if task == "certify":
            sp.add_argument(
                "m",
                nargs="?",
                type=_int_arg,
                help="certify a single value (omit to sweep --from/--to)",
            )
        sp.add_argument("--from", dest="lo", type=_int_arg, help="range start")
        sp.add_argument("--to", dest="hi", type=_int_arg, help="range end (inclusive)")
        sp.add_argument("--format", choices=FORMATS, default="table")
        sp.add_argument("--out", help="write the report to this file instead of stdout")
        sp.add_argument(
            "--first-witness-only",
            action="store_true",
            help="stop at the first witness per n; counts report found/not-found",
        )
        sp.add_argument(
            "--verify-against-oracle",
            action="store_true",
            help="cross-check every n against the trial-division oracle (slow)",
        )
        if task == "binary":
            sp.add_argument(
                "--via-fermat",
                action="store_true",
                help="enumerate through paired congruence certifications (needs n > 3)",
            )
        sp.add_argument("--threads", type=int, default=1, help="worker processes")
        sp.add_argument(
            "--emit-counts",
            metavar="PATH",
            help="additionally write n,witness_count rows to PATH",
        )
    return parser


def _write_output(data: bytes, out: str | None) -> None:
    if out:
        with open(out, "wb") as fh:
            fh.write(data)
        print(f"report written to {out}", file=sys.stderr)
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.buffer.flush()


def _certificate_bytes(cert, fmt: str) -> bytes:
    if fmt == "json":
        import json

        obj = {
            "subject": cert.subject,
            "verdict": cert.verdict.value,
            "failing_modulus": cert.failing_modulus,
            "checks": [
                {
                    "modulus": c.modulus,
                    "base": c.base,
                    "exponent": c.exponent,
                    "residue": c.residue,
                }
                for c in cert.checks
            ],
        }
        return (json.dumps(obj, separators=(",", ":")) + "\n").encode()
    if fmt == "csv":
        lines = ["modulus,base,exponent,residue"]
        lines.extend(
            f"{c.modulus},{c.base},{c.exponent},{c.residue}" for c in cert.checks
        )
        return ("\n".join(lines) + "\n").encode()
    root = math.isqrt(cert.subject)
    lines = [
        f"subject: {cert.subject}",
        f"verdict: {cert.verdict.value}",
        f"congruences over primes p <= isqrt({cert.subject}) = {root}:",
    ]
    if not cert.checks:
        lines.append("  (empty system)")
    for c in cert.checks:
        mark = "" if c.residue == 1 else "   <- fails"
        lines.append(f"  {c.base}^{c.exponent} mod {c.modulus} = {c.residue}{mark}")
    if cert.failing_modulus is not None:
        lines.append(f"failing modulus: {cert.failing_modulus}")
    return ("\n".join(lines) + "\n").encode()


def _run_single_certify(args, budget: int) -> int:
    table = build_spf(max(2, math.isqrt(args.m)), memory_budget=budget)
    cert = certify(args.m, table, full_checks=True)
    _write_output(_certificate_bytes(cert, args.format), args.out)
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    budget = DEFAULT_MEMORY_BUDGET
    try:
        if os.environ.get(BUDGET_ENV):
            budget = _parse_budget(os.environ[BUDGET_ENV])
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    try:
        if args.task == "certify" and args.m is not None:
            return _run_single_certify(args, budget)
        if args.lo is None or args.hi is None:
            parser.error("--from and --to are required for a range sweep")
        options = SweepOptions(
            first_witness_only=args.first_witness_only,
            verify_against_oracle=args.verify_against_oracle,
            via_fermat=getattr(args, "via_fermat", False),
            threads=max(1, args.threads),
            memory_budget=budget,
        )
        report = run_sweep(args.task, args.lo, args.hi, options)
    except MemoryBudgetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    _write_output(emit_report(report, args.format), args.out)
    if args.emit_counts:
        with open(args.emit_counts, "wb") as fh:
            fh.write(emit_counts(report))
        print(f"counts written to {args.emit_counts}", file=sys.stderr)
    print(
        f"{report.task} [{report.lo}, {report.hi}]: checked {report.checked}, "
        f"failures {len(report.failures)}, {report.elapsed:.2f}s",
        file=sys.stderr,
    )
    if report.failures:
        for n in report.failures[:10]:
            print(f"FAIL: check did not hold at n={n}", file=sys.stderr)
        if len(report.failures) > 10:
            print(f"... and {len(report.failures) - 10} more", file=sys.stderr)
        return EXIT_FAILURE
    return EXIT_OK
