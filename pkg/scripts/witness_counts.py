#!/usr/bin/env python3
"""Emit per-n witness counts as CSV for external plotting.

The binary task over a wide range produces the classic comet-shaped
scatter of pair counts; ternary and peculiar show the triple analogues.

    python3 scripts/witness_counts.py binary --from 2 --to 20000 > comet.csv
"""

import argparse
import sys

from phisystems.sweep import TASKS, SweepOptions, emit_counts, run_sweep


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("task", choices=[t for t in TASKS if t != "certify"])
    parser.add_argument("--from", dest="lo", type=int, required=True)
    parser.add_argument("--to", dest="hi", type=int, required=True)
    parser.add_argument("--threads", type=int, default=1)
    args = parser.parse_args()

    report = run_sweep(args.task, args.lo, args.hi, SweepOptions(threads=args.threads))
    sys.stdout.buffer.write(emit_counts(report))
    if report.failures:
        print(f"failures at: {list(report.failures)[:10]}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
