"""Dump rank-one spectra and unit-circle densities as CSV for plotting.

    python scripts/plancherel_density.py --q 1/3 1/2 1 2 3 10 --out results/plancherel
"""

from __future__ import annotations

import argparse
import csv
from pathlib import Path

from rescos.plancherel1 import as_number, decompose


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--q", nargs="+", default=["1/3", "1/2", "1", "2", "3", "10"])
    ap.add_argument("--samples", type=int, default=2**10)
    ap.add_argument("--out", type=Path, default=Path("results/plancherel"))
    args = ap.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)

    with open(args.out / "summary.csv", "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["q", "point_mass", "continuous_total", "total"])
        for q in args.q:
            s = decompose(as_number(q), n_samples=args.samples)
            mass = s.point_masses[0][1] if s.point_masses else 0.0
            w.writerow([q, repr(mass), repr(s.continuous_total), repr(s.total)])
            with open(args.out / f"density_q{q.replace('/', '-')}.csv", "w", newline="") as dh:
                dw = csv.writer(dh, lineterminator="\n")
                dw.writerow(["angle", "density"])
                dw.writerows(s.density_samples)
            print(f"q={q:<5} mass={mass:.12f} continuous={s.continuous_total:.12f} total={s.total:.12f}")


if __name__ == "__main__":
    main()
