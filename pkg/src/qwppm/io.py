"""CSV/JSON emission with atomic writes."""

from __future__ import annotations

import csv
import io
import json
import os
import tempfile
from pathlib import Path
from typing import Any

import numpy as np

from .walk import PositionDistribution

__all__ = [
    "SCHEMA_KEY",
    "REPORT_SCHEMA",
    "atomic_write_text",
    "distribution_to_csv",
    "distribution_from_csv",
    "write_distribution",
    "read_distribution",
    "make_report",
    "write_report",
]

SCHEMA_KEY = "qwalk_ppm_report_v1"

_number = {"type": "number"}
_int = {"type": "integer"}

# JSON Schema for every report; ``kind`` selects the mode-specific fields.
REPORT_SCHEMA: dict[str, Any] = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["schema", "kind"],
    "properties": {
        "schema": {"const": SCHEMA_KEY},
        "kind": {"enum": ["walk", "ppm", "limit", "spectral", "figure2"]},
    },
    "allOf": [
        {
            "if": {"properties": {"kind": {"const": "walk"}}},
            "then": {"required": ["t", "mean", "variance", "norm_defect"]},
        },
        {
            "if": {"properties": {"kind": {"const": "ppm"}}},
            "then": {
                "required": ["d", "M", "realized_t", "variance", "variance_scaled"],
                "properties": {"d": _int, "M": _int, "realized_t": _int, "variance": _number},
            },
        },
        {
            "if": {"properties": {"kind": {"const": "limit"}}},
            "then": {
                "required": ["beta", "theta", "t", "law_tag", "ks_distance", "variance_ratio"],
                "properties": {
                    "beta": _number,
                    "theta": _number,
                    "t": _int,
                    "law_tag": {"enum": ["STANDARD_NORMAL", "NORMAL_SIGMA2", "KONNO"]},
                    "sigma2": _number,
                    "r": _number,
                    "ks_distance": _number,
                    "variance_ratio": _number,
                },
                "oneOf": [{"required": ["sigma2"]}, {"required": ["r"]}],
            },
        },
        {
            "if": {"properties": {"kind": {"const": "spectral"}}},
            "then": {
                "required": ["coin_params", "sigma2_closed", "sigma2_quadrature", "max_charfn_residual"],
                "properties": {
                    "coin_params": {
                        "type": "object",
                        "required": ["r", "phi", "psi", "delta"],
                    },
                    "sigma2_closed": _number,
                    "sigma2_quadrature": _number,
                    "max_charfn_residual": _number,
                },
            },
        },
        {
            "if": {"properties": {"kind": {"const": "figure2"}}},
            "then": {"required": ["t", "variances", "variance_ordering_ok"]},
        },
    ],
}


def atomic_write_text(path: str | os.PathLike, text: str) -> None:
    """Write via a temporary file in the same directory, then rename."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def distribution_to_csv(p: PositionDistribution) -> str:
    """Rows (x, probability) for sites of positive mass, 17 significant digits."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["x", "probability"])
    for x, m in zip(p.positions, p.mass):
        if m == 0.0:
            continue
        w.writerow([int(x), f"{m:.17g}"])
    return buf.getvalue()


def distribution_from_csv(text: str) -> PositionDistribution:
    rows = list(csv.reader(io.StringIO(text)))
    if not rows or rows[0] != ["x", "probability"]:
        raise ValueError("CSV header must be exactly 'x,probability'")
    xs = np.array([int(r[0]) for r in rows[1:]])
    ps = np.array([float(r[1]) for r in rows[1:]])
    if xs.size == 0:
        raise ValueError("CSV has no rows")
    if np.any(np.diff(xs) != 1):
        return PositionDistribution.from_dict(dict(zip(xs.tolist(), ps.tolist())))
    return PositionDistribution(int(xs[0]), ps)


def write_distribution(path, p: PositionDistribution) -> None:
    atomic_write_text(path, distribution_to_csv(p))


def read_distribution(path) -> PositionDistribution:
    return distribution_from_csv(Path(path).read_text())


def make_report(kind: str, **fields) -> dict[str, Any]:
    return {"schema": SCHEMA_KEY, "kind": kind, **fields}


def write_report(path, report: dict[str, Any]) -> None:
    atomic_write_text(path, json.dumps(report, indent=2, sort_keys=True) + "\n")
