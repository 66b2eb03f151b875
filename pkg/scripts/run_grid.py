"""Enumerate, verify and oracle-diff every configuration of the test grid.

    python scripts/run_grid.py [--out results/grid] [--threads 4]

Writes one table JSON and one report JSON per configuration and prints a
summary line each; exits nonzero if any check or oracle diff fails.
"""

from __future__ import annotations

import argparse
import sys
import time
from fractions import Fraction
from pathlib import Path

from rescos import serialize as ser
from rescos.oracle import brute_force_flats, diff_flats
from rescos.residual import enumerate_residual, verify_all
from rescos.rootsys import ParameterFunction, build_root_system

TYPES = ["A1", "A2", "A3", "B2", "B3", "C3", "G2", "A1xA1"]
RATIOS = [Fraction(1, 3), Fraction(1, 2), Fraction(2), Fraction(3)]


def configs():
    for label in TYPES:
        R = build_root_system(label)
        yield R, ParameterFunction.equal(1)
        if "short" in R.classes:
            for r in RATIOS:
                yield R, ParameterFunction.of(long=1, short=r)


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", type=Path, default=Path("results/grid"))
    ap.add_argument("--threads", type=int, default=1)
    args = ap.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)
    failures = 0
    for R, k in configs():
        t0 = time.perf_counter()
        table = enumerate_residual(R, k, threads=args.threads)
        report = verify_all(R, k, table)
        same = diff_flats(table.flats, brute_force_flats(R, k)).identical
        stem = f"{R.label}_{str(k).replace('/', '-').replace(',', '_').replace('=', '')}"
        (args.out / f"{stem}.table.json").write_text(ser.dumps(ser.table_to_json(table)))
        (args.out / f"{stem}.report.json").write_text(ser.dumps(ser.report_to_json(report)))
        ok = report.passed and same
        failures += not ok
        counts = {d: n for d, n in sorted(table.counts_by_dim().items())}
        print(f"{'ok ' if ok else 'BAD'} {R.label:<6} {str(k):<18} orbits {counts} "
              f"oracle={'same' if same else 'DIFF'} {time.perf_counter() - t0:.2f}s")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
