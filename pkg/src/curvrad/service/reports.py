"""Deterministic CSV/JSON rendering for run reports.

CSV output is RFC-4180 style with a '.' decimal separator; magnitudes at or
beyond 1e+-6 switch to scientific notation.  A single comment line above the
header records the tool version, a hash of the request, and the seed, so any
artifact can be traced back to the exact run that produced it.
"""

from __future__ import annotations

import hashlib
import io
import json
from typing import Mapping, Sequence

from pydantic import BaseModel

from .. import __version__

__all__ = ["fmt_number", "config_hash", "render_csv", "render_json"]


def fmt_number(x: object) -> str:
    if not isinstance(x, float):
        return str(x)
    if x == 0.0:
        return "0"
    if abs(x) >= 1e6 or abs(x) < 1e-6:
        return f"{x:.12e}"
    return f"{x:.12g}"


def config_hash(request: BaseModel) -> str:
    payload = request.model_dump_json().encode()
    return hashlib.sha256(payload).hexdigest()[:16]


def render_csv(rows: Sequence[Mapping[str, object]], fieldnames: Sequence[str],
               request: BaseModel, seed: int) -> str:
    buf = io.StringIO()
    buf.write(f"# curvrad {__version__} config={config_hash(request)} seed={seed}\r\n")
    buf.write(",".join(fieldnames) + "\r\n")
    for row in rows:
        buf.write(",".join(fmt_number(row[name]) for name in fieldnames) + "\r\n")
    return buf.getvalue()


def render_json(report: BaseModel, request: BaseModel, seed: int) -> str:
    doc = {"tool": "curvrad", "version": __version__,
           "config": config_hash(request), "seed": seed,
           "report": report.model_dump()}
    return json.dumps(doc, indent=2, sort_keys=True, allow_nan=False) + "\n"
