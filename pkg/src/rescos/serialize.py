"""JSON/CSV forms of tables and reports, plus the on-disk results cache."""

from __future__ import annotations

import csv
import hashlib
import io
import json
import os
from fractions import Fraction
from pathlib import Path

from .arrangement import AffineFlat, IndexReport
from .residual import OrbitTable, ScanReport, VerificationReport

SCHEMA_VERSION = 1
CACHE_ENV = "RESCOS_CACHE_DIR"


def q(x: Fraction) -> str:
    return str(Fraction(x))


def qvec(v) -> list[str]:
    return [q(x) for x in v]


def flat_to_json(L: AffineFlat, rep: IndexReport | None = None) -> dict:
    d = {
        "equations": [qvec(r) for r in L.rows],
        "center": qvec(L.center),
        "dim": L.dim,
    }
    if rep is not None:
        d["i"] = rep.i
        d["o"] = rep.o
    return d


def table_to_json(table: OrbitTable) -> dict:
    R = table.system
    orbits = []
    for e in table.orbits:
        rep = e.representative
        orbits.append({
            "dim": e.dim,
            "i": e.i,
            "o": e.o,
            "center": qvec(rep.center),
            "direction_basis": [qvec(d) for d in rep.flat.direction],
            "orbit_size": e.orbit_size,
            "parabolic_type": e.parabolic_type,
            "witness_chain_dims": [M.dim for M in rep.witness_chain],
        })
    return {
        "schema_version": SCHEMA_VERSION,
        "type": R.label,
        "rank": R.rank,
        "params": {c: q(v) for c, v in table.params.for_system(R).items()},
        "orbits": orbits,
    }


def table_to_csv(table: OrbitTable) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["schema_version", "type", "dim", "i", "o", "orbit_size", "parabolic_type", "center", "direction_basis"])
    for row in table_to_json(table)["orbits"]:
        w.writerow([
            SCHEMA_VERSION,
            table.system.label,
            row["dim"],
            row["i"],
            row["o"],
            row["orbit_size"],
            row["parabolic_type"],
            " ".join(row["center"]),
            ";".join(" ".join(d) for d in row["direction_basis"]),
        ])
    return buf.getvalue()


def table_to_text(table: OrbitTable) -> str:
    lines = [f"{table.system.label}  k: {table.params}", f"{'dim':>3} {'size':>6}  {'R_L':<10} center"]
    for e in table.orbits:
        lines.append(
            f"{e.dim:>3} {e.orbit_size:>6}  {e.parabolic_type:<10} ({', '.join(qvec(e.representative.center))})"
        )
    lines.append(f"{len(table.orbits)} orbits, {len(table.point_orbits())} of residual points")
    return "\n".join(lines) + "\n"


def report_to_json(report: VerificationReport) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "type": report.label,
        "params": report.params,
        "passed": report.passed,
        "checks": {
            name: {
                "passed": r.passed,
                "checked": r.checked,
                "counterexamples": r.counterexamples,
                "note": r.note,
            }
            for name, r in report.results.items()
        },
    }


def scan_to_json(scan: ScanReport) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "type": scan.label,
        "ratios": [q(r) for r in scan.ratios],
        "orbit_counts": [{str(d): n for d, n in c.items()} for c in scan.orbit_counts],
        "flat_counts": [{str(d): n for d, n in c.items()} for c in scan.flat_counts],
        "walls": [q(r) for r in scan.walls],
    }


def dumps(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def cache_dir(explicit: str | None = None) -> Path | None:
    d = explicit or os.environ.get(CACHE_ENV)
    return Path(d) if d else None


def cache_key(label: str, params: dict) -> str:
    blob = json.dumps({"type": label, "params": params, "schema_version": SCHEMA_VERSION}, sort_keys=True)
    return hashlib.sha256(blob.encode()).hexdigest()[:16]


def cache_path(directory: Path, label: str, params: dict) -> Path:
    return directory / f"{label}_{cache_key(label, params)}.json"


def cache_load(directory: Path | None, label: str, params: dict) -> dict | None:
    if directory is None:
        return None
    p = cache_path(directory, label, params)
    if p.exists():
        return json.loads(p.read_text())
    return None


def cache_store(directory: Path | None, data: dict) -> None:
    if directory is None:
        return
    directory.mkdir(parents=True, exist_ok=True)
    p = cache_path(directory, data["type"], data["params"])
    tmp = p.with_suffix(".tmp")
    tmp.write_text(dumps(data))
    tmp.replace(p)


def table_from_json(data: dict) -> dict:
    """Parse the rationals of a serialized table back into Fractions."""
    out = dict(data)
    out["params"] = {c: Fraction(v) for c, v in data["params"].items()}
    out["orbits"] = [
        dict(o, center=[Fraction(x) for x in o["center"]],
             direction_basis=[[Fraction(x) for x in d] for d in o["direction_basis"]])
        for o in data["orbits"]
    ]
    return out
