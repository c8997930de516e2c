"""Parsers for the simulator's schema-tagged CSV files and the
thresholds JSON. Every reader checks the first-line schema tag and
rejects files with no data rows, so a stale or truncated artifact fails
loudly instead of rendering an empty figure."""

from __future__ import annotations

import csv
import json
import math
from dataclasses import dataclass
from pathlib import Path

SWEEP_SCHEMA = "sweep-v1"
PHASE_SCHEMA = "phase-v1"
ETA_SCHEMA = "eta-curve-v1"


class SchemaError(ValueError):
    """Input file is missing, mistagged, malformed or empty."""


@dataclass(frozen=True)
class SweepData:
    """Per-topology shock-sweep curves, keyed by (topology, c)."""

    curves: dict[tuple[str, int], dict[str, list[float]]]


@dataclass(frozen=True)
class PhaseData:
    y: list[float]
    eps: list[float]
    ring_safe: list[int]
    complete_safe: list[int]


@dataclass(frozen=True)
class EtaCurveData:
    eta: list[float]
    eps_star_ring: list[float]
    eps_star_complete: list[float]
    capped_ring: list[int]
    capped_complete: list[int]


def _read_rows(path, schema: str) -> list[dict[str, str]]:
    path = Path(path)
    if not path.is_file():
        raise SchemaError(f"{path}: no such file")
    lines = path.read_text().splitlines()
    if not lines or lines[0] != f"# schema={schema}":
        found = lines[0] if lines else "<empty file>"
        raise SchemaError(f"{path}: expected tag '# schema={schema}', found {found!r}")
    rows = list(csv.DictReader(lines[1:]))
    if not rows:
        raise SchemaError(f"{path}: no data rows")
    if any(None in row or None in row.values() for row in rows):
        raise SchemaError(f"{path}: ragged row (column count mismatch)")
    return rows


def read_sweep_csv(path) -> SweepData:
    curves: dict[tuple[str, int], dict[str, list[float]]] = {}
    for row in _read_rows(path, SWEEP_SCHEMA):
        try:
            key = (row["topology"], int(row["c"]))
            series = curves.setdefault(
                key, {"eps": [], "mean_E": [], "std_E": [], "mean_D": [], "std_D": []})
            for col in series:
                series[col].append(float(row[col]))
        except (KeyError, ValueError) as exc:
            raise SchemaError(f"{path}: bad sweep row {row!r}") from exc
    return SweepData(curves)


def read_phase_csv(path) -> PhaseData:
    cols: dict[str, list] = {"y": [], "eps": [], "ring_safe": [], "complete_safe": []}
    for row in _read_rows(path, PHASE_SCHEMA):
        try:
            cols["y"].append(float(row["y"]))
            cols["eps"].append(float(row["eps"]))
            cols["ring_safe"].append(int(row["ring_safe"]))
            cols["complete_safe"].append(int(row["complete_safe"]))
        except (KeyError, ValueError) as exc:
            raise SchemaError(f"{path}: bad phase row {row!r}") from exc
    return PhaseData(**cols)


def read_eta_curve_csv(path) -> EtaCurveData:
    cols: dict[str, list] = {"eta": [], "eps_star_ring": [], "eps_star_complete": [],
                             "capped_ring": [], "capped_complete": []}
    for row in _read_rows(path, ETA_SCHEMA):
        try:
            for col in ("eta", "eps_star_ring", "eps_star_complete"):
                value = float(row[col])
                if math.isnan(value):
                    raise ValueError("nan")
                cols[col].append(value)
            for col in ("capped_ring", "capped_complete"):
                cols[col].append(int(row[col]))
        except (KeyError, ValueError) as exc:
            raise SchemaError(f"{path}: bad eta-curve row {row!r}") from exc
    return EtaCurveData(**cols)


def read_thresholds_json(path) -> dict:
    """Thresholds produced by the simulator CLI: a flat JSON object with
    at least eps_star (a number)."""
    path = Path(path)
    if not path.is_file():
        raise SchemaError(f"{path}: no such file")
    try:
        data = json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path}: not valid JSON: {exc}") from exc
    if not isinstance(data, dict) or not isinstance(data.get("eps_star"), (int, float)):
        raise SchemaError(f"{path}: expected an object with a numeric 'eps_star'")
    return data
