"""Full F4 enumeration at equal parameters, with verification and timing.

    python scripts/run_f4.py [--k 1] [--threads 4] [--oracle] [--out f4.json]

The oracle comparison takes a little over a minute on top.
"""

from __future__ import annotations

import argparse
import sys
import time

from rescos import serialize as ser
from rescos.dynkin import bala_carter_counts, point_diagrams
from rescos.oracle import brute_force_flats, diff_flats
from rescos.residual import enumerate_residual, verify_all
from rescos.rootsys import ParameterFunction, build_root_system


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--k", default="1")
    ap.add_argument("--threads", type=int, default=4)
    ap.add_argument("--oracle", action="store_true")
    ap.add_argument("--out")
    args = ap.parse_args()

    R = build_root_system("F4")
    k = ParameterFunction.equal(args.k)
    t0 = time.perf_counter()
    table = enumerate_residual(R, k, threads=args.threads)
    print(f"enumerated {len(table.cosets)} flats in {len(table.orbits)} orbits, {time.perf_counter() - t0:.1f}s")
    print("orbits by dim:", dict(sorted(table.counts_by_dim().items())))

    t0 = time.perf_counter()
    report = verify_all(R, k, table, ["T1b", "T2", "T3", "T5B", "L4.1"])
    for name, r in report.results.items():
        print(f"  {name:<5} {'pass' if r.passed else 'FAIL'} ({r.checked})")
    print(f"verified in {time.perf_counter() - t0:.1f}s")

    counts = bala_carter_counts(R, table)
    print("Bala-Carter:", counts.to_json())
    for d in point_diagrams(R, table):
        print("  diagram", [str(x) for x in d.labels])

    ok = report.passed and counts.match
    if args.oracle:
        t0 = time.perf_counter()
        same = diff_flats(table.flats, brute_force_flats(R, k)).identical
        print(f"oracle {'identical' if same else 'DIFFERENT'} ({time.perf_counter() - t0:.1f}s)")
        ok = ok and same
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(ser.dumps(ser.table_to_json(table)))
    return 0 if ok else 3


if __name__ == "__main__":
    sys.exit(main())
