"""Command-line interface.

Usage:
    rescos enumerate --type B2 --params long=1,short=2 --format json
    rescos verify --type G2 --params long=1,short=1 [--checks T2,T5B] [--oracle]
    rescos scan --type B2 --ratios 1/4,1/2,1,2,4
    rescos dynkin --type A2
    rescos plancherel --q 2 [--csv density.csv]
    rescos diff-oracle --type B3 --params long=1,short=1/2

Exit codes: 0 success, 1 usage or configuration error, 2 resource cap
exceeded, 3 verification failure.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from fractions import Fraction

from . import serialize as ser
from .dynkin import bala_carter_counts, load_fixtures, point_diagrams, to_dot
from .errors import ConfigurationError, ContourError, DomainError, ResourceLimitError, VerificationError
from .oracle import brute_force_flats, diff_flats
from .plancherel1 import decompose
from .residual import ALL_CHECKS, enumerate_residual, scan_parameters, verify_all
from .rootsys import ParameterFunction, build_root_system

EXIT_OK, EXIT_CONFIG, EXIT_RESOURCE, EXIT_VERIFY = 0, 1, 2, 3


def parse_params(text: str) -> ParameterFunction:
    out = {}
    for item in filter(None, (s.strip() for s in text.split(","))):
        if "=" not in item:
            raise ConfigurationError(f"parameter {item!r} is not of the form class=p/q")
        key, val = item.split("=", 1)
        try:
            out[key.strip()] = Fraction(val.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ConfigurationError(f"parameter value {val!r} is not a rational p/q") from exc
    if not out:
        raise ConfigurationError("no parameters given")
    return ParameterFunction.of(out)


def _system_and_params(args):
    R = build_root_system(args.type)
    k = parse_params(args.params)
    k.for_system(R)  # validate keys before any computation
    return R, k


def _emit(args, text: str) -> None:
    if getattr(args, "output", None):
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_enumerate(args) -> int:
    R, k = _system_and_params(args)
    params = {c: ser.q(v) for c, v in k.for_system(R).items()}
    cdir = ser.cache_dir(args.cache_dir)
    if args.format == "json":
        cached = ser.cache_load(cdir, R.label, params)
        if cached is not None:
            _emit(args, ser.dumps(cached))
            return EXIT_OK
    table = enumerate_residual(R, k, max_flats=args.max_flats, threads=args.threads)
    data = ser.table_to_json(table)
    ser.cache_store(cdir, data)
    if args.format == "json":
        _emit(args, ser.dumps(data))
    elif args.format == "csv":
        _emit(args, ser.table_to_csv(table))
    else:
        _emit(args, ser.table_to_text(table))
    return EXIT_OK


def cmd_verify(args) -> int:
    R, k = _system_and_params(args)
    checks = [c.strip() for c in args.checks.split(",")] if args.checks else None
    if checks and set(checks) - set(ALL_CHECKS):
        raise ConfigurationError(f"unknown checks {sorted(set(checks) - set(ALL_CHECKS))}; choose from {ALL_CHECKS}")
    table = enumerate_residual(R, k, max_flats=args.max_flats, threads=args.threads)
    report = verify_all(R, k, table, checks, lattice_max_codim=args.lattice_max_codim)
    data = ser.report_to_json(report)
    ok = report.passed
    if args.oracle:
        d = diff_flats(table.flats, brute_force_flats(R, k))
        data["oracle_diff"] = {
            "identical": d.identical,
            "only_enumerator": [ser.flat_to_json(f) for f in d.only_left],
            "only_oracle": [ser.flat_to_json(f) for f in d.only_right],
        }
        ok = ok and d.identical
    if args.format == "json":
        _emit(args, ser.dumps(data))
    else:
        lines = [f"{R.label}  k: {table.params}"]
        for name, r in data["checks"].items():
            lines.append(f"{name:<5} {'PASS' if r['passed'] else 'FAIL'}  ({r['checked']} checked) {r['note']}".rstrip())
        if args.oracle:
            lines.append(f"oracle {'IDENTICAL' if data['oracle_diff']['identical'] else 'DIFFERENT'}")
        _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK if ok else EXIT_VERIFY


def cmd_scan(args) -> int:
    R = build_root_system(args.type)
    ratios = [Fraction(r) for r in args.ratios.split(",")]
    scan = scan_parameters(R, ratios, max_flats=args.max_flats)
    data = ser.scan_to_json(scan)
    if args.format == "json":
        _emit(args, ser.dumps(data))
    else:
        lines = [f"{R.label}  k_short/k_long scan"]
        for r, oc, fc in zip(data["ratios"], data["orbit_counts"], data["flat_counts"]):
            lines.append(f"{r:>6}  orbits {json.dumps(oc)}  flats {json.dumps(fc)}")
        lines.append(f"walls: {', '.join(data['walls']) or 'none'}")
        _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK


def cmd_dynkin(args) -> int:
    R = build_root_system(args.type)
    k = ParameterFunction.equal(2)
    fixtures = load_fixtures(args.fixtures) if args.fixtures else None
    table = enumerate_residual(R, k, max_flats=args.max_flats, threads=args.threads)
    counts = bala_carter_counts(R, table, fixtures)
    diagrams = point_diagrams(R, table)
    if args.format == "dot":
        _emit(args, "".join(to_dot(R, d) for d in diagrams))
    else:
        data = {
            "schema_version": ser.SCHEMA_VERSION,
            "type": R.label,
            "diagrams": [d.to_json() for d in diagrams],
            "non_distinguished_shapes": [d.to_json() for d in diagrams if not d.distinguished_shape],
            "counts": counts.to_json(),
        }
        _emit(args, ser.dumps(data))
    return EXIT_OK if counts.match else EXIT_VERIFY


def cmd_plancherel(args) -> int:
    spectrum = decompose(args.q, n_samples=args.samples)
    data = dict(spectrum.to_json(), schema_version=ser.SCHEMA_VERSION)
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            w = csv.writer(fh, lineterminator="\n")
            w.writerow(["angle", "density"])
            w.writerows(spectrum.density_samples)
    _emit(args, ser.dumps(data))
    return EXIT_OK


def cmd_diff_oracle(args) -> int:
    R, k = _system_and_params(args)
    table = enumerate_residual(R, k, max_flats=args.max_flats, threads=args.threads)
    d = diff_flats(table.flats, brute_force_flats(R, k))
    data = {
        "schema_version": ser.SCHEMA_VERSION,
        "type": R.label,
        "params": {c: ser.q(v) for c, v in k.for_system(R).items()},
        "identical": d.identical,
        "enumerator_count": len(table.cosets),
        "only_enumerator": [ser.flat_to_json(f) for f in d.only_left],
        "only_oracle": [ser.flat_to_json(f) for f in d.only_right],
    }
    _emit(args, ser.dumps(data))
    return EXIT_OK if d.identical else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="rescos", description="Residual cosets of shifted root arrangements.")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, params=True, fmt=("json", "csv", "text")):
        p.add_argument("--type", required=True, help='root system label, e.g. "B2" or "A2xA1"')
        if params:
            p.add_argument("--params", default="all=1", help='e.g. "long=1,short=2" or "all=1"')
        p.add_argument("--format", choices=fmt, default=fmt[0])
        p.add_argument("--output", "-o")
        p.add_argument("--max-flats", type=int, default=10**6)
        p.add_argument("--threads", type=int, default=1)

    p = sub.add_parser("enumerate", help="residual flats grouped into W0-orbits")
    common(p)
    p.add_argument("--cache-dir", help=f"results cache (default: ${ser.CACHE_ENV})")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="run the structural checks on enumerated data")
    common(p, fmt=("json", "text"))
    p.add_argument("--checks", help=f"comma list from {','.join(ALL_CHECKS)}")
    p.add_argument("--oracle", action="store_true", help="also diff against the brute-force oracle")
    p.add_argument("--lattice-max-codim", type=int)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("scan", help="orbit counts along k_short/k_long")
    common(p, params=False, fmt=("json", "text"))
    p.add_argument("--ratios", required=True)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("dynkin", help="equal-parameter diagrams and Bala-Carter counts")
    common(p, params=False, fmt=("json", "dot"))
    p.add_argument("--fixtures")
    p.set_defaults(func=cmd_dynkin)

    p = sub.add_parser("plancherel", help="rank-one Plancherel decomposition")
    p.add_argument("--q", required=True, help="rational p/q or decimal")
    p.add_argument("--samples", type=int, default=2**10)
    p.add_argument("--csv", help="write density samples here")
    p.add_argument("--output", "-o")
    p.set_defaults(func=cmd_plancherel)

    p = sub.add_parser("diff-oracle", help="symmetric difference of enumerator and oracle")
    common(p, fmt=("json",))
    p.set_defaults(func=cmd_diff_oracle)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ConfigurationError, DomainError, ContourError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except VerificationError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_VERIFY


if __name__ == "__main__":
    sys.exit(main())
