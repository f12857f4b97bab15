"""Divisor file I/O, canonical JSON and CSV emission.

The divisor file is a single JSON document {alpha, points: [{re, im, mult}]}
with plain decimal floats, no NaN or Inf.  Reports are written through a
canonical serializer (fixed field order, floats at 12 significant digits), so
identical inputs always produce byte-identical output.
"""

from __future__ import annotations

import json
import math
import warnings
from pathlib import Path

import numpy as np

from .core import FockParams
from .geometry import Divisor

__all__ = [
    "SchemaError",
    "format_float",
    "canonical_json",
    "load_divisor",
    "save_divisor",
    "divisor_payload",
    "complex_payload",
    "write_sweep_csv",
    "write_points_csv",
]


class SchemaError(ValueError):
    """Malformed input file; the message names the offending field or line."""


def format_float(value: float) -> str:
    """Fixed 12-significant-digit decimal form; stable under reparsing."""
    return format(float(value), ".12g")


def _write_canonical(obj, out: list[str]) -> None:
    if obj is None:
        out.append("null")
    elif isinstance(obj, bool):
        out.append("true" if obj else "false")
    elif isinstance(obj, (int, np.integer)):
        out.append(str(int(obj)))
    elif isinstance(obj, (float, np.floating)):
        x = float(obj)
        # JSON has no Inf/NaN; non-finite summary values serialize as null
        out.append(format_float(x) if math.isfinite(x) else "null")
    elif isinstance(obj, str):
        out.append(json.dumps(obj))
    elif isinstance(obj, complex):
        _write_canonical(complex_payload(obj), out)
    elif isinstance(obj, dict):
        out.append("{")
        for i, (key, val) in enumerate(obj.items()):
            if not isinstance(key, str):
                raise TypeError(f"report keys must be strings, got {key!r}")
            if i:
                out.append(",")
            out.append(json.dumps(key))
            out.append(":")
            _write_canonical(val, out)
        out.append("}")
    elif isinstance(obj, (list, tuple, np.ndarray)):
        out.append("[")
        for i, val in enumerate(obj):
            if i:
                out.append(",")
            _write_canonical(val, out)
        out.append("]")
    else:
        raise TypeError(f"cannot serialize {type(obj).__name__}")


def canonical_json(obj) -> str:
    """Deterministic JSON text: insertion-ordered fields, 12-digit floats."""
    out: list[str] = []
    _write_canonical(obj, out)
    return "".join(out)


def complex_payload(z: complex) -> dict:
    return {"re": float(z.real), "im": float(z.imag)}


def _require_number(value, field: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise SchemaError(f"{field}: expected a number, got {value!r}")
    if not math.isfinite(float(value)):
        raise SchemaError(f"{field}: must be finite")
    return float(value)


def load_divisor(path) -> Divisor:
    """Parse and validate a divisor file.

    Coincident points are merged by summing multiplicities, with a warning.
    Schema violations raise SchemaError naming the field (or the line for
    JSON syntax errors).
    """
    text = Path(path).read_text()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    if not isinstance(doc, dict) or set(doc) != {"alpha", "points"}:
        raise SchemaError("top level: expected an object with exactly the fields alpha, points")
    alpha = _require_number(doc["alpha"], "alpha")
    if alpha <= 0:
        raise SchemaError("alpha: must be positive")
    if not isinstance(doc["points"], list):
        raise SchemaError("points: expected a list")

    merged: dict[tuple[float, float], int] = {}
    order: list[tuple[float, float]] = []
    for i, point in enumerate(doc["points"]):
        where = f"points[{i}]"
        if not isinstance(point, dict) or set(point) != {"re", "im", "mult"}:
            raise SchemaError(f"{where}: expected an object with exactly the fields re, im, mult")
        re = _require_number(point["re"], f"{where}.re")
        im = _require_number(point["im"], f"{where}.im")
        mult = point["mult"]
        if isinstance(mult, bool) or not isinstance(mult, int) or mult < 1:
            raise SchemaError(f"{where}.mult: must be a positive integer")
        key = (re, im)
        if key in merged:
            warnings.warn(
                f"coincident divisor points at ({re}, {im}) merged; multiplicities summed",
                stacklevel=2,
            )
        else:
            order.append(key)
            merged[key] = 0
        merged[key] += mult
    entries = tuple((complex(re, im), merged[(re, im)]) for re, im in order)
    return Divisor(FockParams(alpha), entries)


def divisor_payload(divisor: Divisor) -> dict:
    return {
        "alpha": divisor.params.alpha,
        "points": [
            {"re": lam.real, "im": lam.imag, "mult": m} for lam, m in divisor.entries
        ],
    }


def save_divisor(divisor: Divisor, path) -> None:
    Path(path).write_text(canonical_json(divisor_payload(divisor)) + "\n")


def _csv_cell(value) -> str:
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    x = float(value)
    if math.isinf(x):
        return "inf"
    return format_float(x)


def write_sweep_csv(path, rows) -> None:
    """Spectral sweep as CSV with header N,smin,smax,ratio."""
    lines = ["N,smin,smax,ratio"]
    for degree, smin, smax, ratio in rows:
        lines.append(",".join([_csv_cell(degree), _csv_cell(smin), _csv_cell(smax), _csv_cell(ratio)]))
    Path(path).write_text("\n".join(lines) + "\n")


def write_points_csv(path, points) -> None:
    """Point list (defects and the like) as CSV with header re,im."""
    lines = ["re,im"]
    for z in points:
        z = complex(z)
        lines.append(f"{format_float(z.real)},{format_float(z.imag)}")
    Path(path).write_text("\n".join(lines) + "\n")
