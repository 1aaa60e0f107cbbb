"""Report envelopes and their JSON / CSV / text renderings.

JSON uses sorted keys; integers that can grow without bound (counts) are
written as decimal strings by the callers.  No timestamps are included, so
the same command and seed give byte-identical output.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, is_dataclass
from fractions import Fraction
from typing import Any

from . import __version__


def jsonable(x: Any) -> Any:
    if is_dataclass(x) and not isinstance(x, type):
        return jsonable(asdict(x))
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple, set, frozenset)):
        items = sorted(x) if isinstance(x, (set, frozenset)) else x
        return [jsonable(v) for v in items]
    if isinstance(x, float) and x == float("inf"):
        return "inf"
    return x


def envelope(command: str, inputs: dict, result: dict, seed: int | None = None, status: str = "ok") -> dict:
    return {
        "command": command,
        "inputs": jsonable(inputs),
        "result": jsonable(result),
        "seed": seed,
        "status": status,
        "version": __version__,
    }


def to_json(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2) + "\n"


def to_csv(rows: list[dict], columns: list[str] | None = None) -> str:
    buf = io.StringIO()
    if columns is None:
        columns = []
        for r in rows:
            for k in r:
                if k not in columns:
                    columns.append(k)
    w = csv.DictWriter(buf, fieldnames=columns, lineterminator="\n", extrasaction="ignore")
    w.writeheader()
    for r in rows:
        w.writerow({k: _cell(r.get(k)) for k in columns})
    return buf.getvalue()


def _cell(v: Any) -> str:
    if v is None:
        return ""
    if isinstance(v, (list, tuple, dict)):
        return json.dumps(jsonable(v), sort_keys=True)
    return str(jsonable(v))


def flatten(d: dict, prefix: str = "") -> list[tuple[str, Any]]:
    out = []
    for k in sorted(d):
        v = d[k]
        key = f"{prefix}{k}"
        if isinstance(v, dict):
            out += flatten(v, key + ".")
        else:
            out.append((key, v))
    return out


def to_text(report: dict) -> str:
    lines = []
    for k, v in flatten(report):
        if isinstance(v, list) and v and isinstance(v[0], dict):
            lines.append(f"{k}:")
            for row in v:
                lines.append("  " + ", ".join(f"{a}={_cell(b)}" for a, b in row.items()))
        else:
            lines.append(f"{k}: {_cell(v)}")
    return "\n".join(lines) + "\n"
