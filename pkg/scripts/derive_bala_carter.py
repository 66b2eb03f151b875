"""Write the equal-parameter orbit-count fixture used by ``rescos.dynkin``.

Classical types come from partition counting (nilpotent orbits of the
classical Lie algebras). Exceptional types come from running the brute
force oracle (rank <= 4 only) and recording what it finds.

    python scripts/derive_bala_carter.py [--with-exceptional]
"""

from __future__ import annotations

import argparse
import json
from collections import Counter
from pathlib import Path

OUT = Path(__file__).resolve().parents[1] / "src" / "rescos" / "data" / "bala_carter.json"


def partitions(n, largest=None):
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def _mult_even(p, parity):
    c = Counter(p)
    return all(m % 2 == 0 for part, m in c.items() if part % 2 == parity)


def classical(letter, n):
    if letter == "A":
        ps = list(partitions(n + 1))
        return 1, len(ps), "partitions of n+1"
    if letter == "B":
        ps = [p for p in partitions(2 * n + 1) if _mult_even(p, 0)]
        dist = [p for p in ps if all(x % 2 for x in p) and len(set(p)) == len(p)]
        return len(dist), len(ps), "partitions of 2n+1 with even parts of even multiplicity"
    if letter == "C":
        ps = [p for p in partitions(2 * n) if _mult_even(p, 1)]
        dist = [p for p in ps if all(x % 2 == 0 for x in p) and len(set(p)) == len(p)]
        return len(dist), len(ps), "partitions of 2n with odd parts of even multiplicity"
    if letter == "D":
        ps = [p for p in partitions(2 * n) if _mult_even(p, 0)]
        very_even = [p for p in ps if all(x % 2 == 0 for x in p)]
        dist = [p for p in ps if all(x % 2 for x in p) and len(set(p)) == len(p)]
        return (
            len(dist),
            len(ps) + len(very_even),
            "partitions of 2n with even parts of even multiplicity, very even counted twice",
        )
    raise ValueError(letter)


def exceptional(label):
    from rescos.oracle import brute_force_flats
    from rescos.residual import group_orbits, ResidualCoset
    from rescos.arrangement import order_flat
    from rescos.rootsys import ParameterFunction, build_root_system

    R = build_root_system(label)
    k = ParameterFunction.equal(1)
    flats = sorted(brute_force_flats(R, k), key=lambda f: (len(f.key), f.key))
    cosets = [ResidualCoset(f, order_flat(R, k, f), (f,)) for f in flats]
    orbits, _ = group_orbits(R, cosets)
    points = sum(1 for e in orbits if e.dim == 0)
    return points, len(orbits), "recorded from the brute-force oracle at equal parameters"


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--with-exceptional", action="store_true")
    args = ap.parse_args()
    data = json.loads(OUT.read_text()) if OUT.exists() else {}
    ranges = {"A": range(1, 9), "B": range(2, 9), "C": range(2, 9), "D": range(4, 9)}
    for letter, rs in ranges.items():
        for n in rs:
            d, m, src = classical(letter, n)
            data[f"{letter}{n}"] = {"distinguished": d, "nilpotent": m, "source": src}
    if args.with_exceptional:
        for label in ("G2", "F4"):
            d, m, src = exceptional(label)
            data[label] = {"distinguished": d, "nilpotent": m, "source": src}
            print(label, d, m)
    OUT.write_text(json.dumps(dict(sorted(data.items())), indent=2) + "\n")


if __name__ == "__main__":
    main()
