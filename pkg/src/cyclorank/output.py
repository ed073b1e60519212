"""Flat machine-readable record rendering: JSON lines and CSV.

Every record kind has a frozen key order and per-key type, so the two
formats carry identical data field-for-field and both parse back to the
exact dict that was rendered.  Polynomials are serialized as ascending
coefficient lists, e.g. X**4 + 2X**3 + X**2 + 2X + 1 -> [1,2,1,2,1].
"""

from __future__ import annotations

import csv
import io
import json
from typing import IO

from .errors import ParameterError
from .hminus import HMinusResult, ValuationResult
from .scanner import ScanRecord
from .stickelberger import DxResult, PowerTable

SCHEMAS: dict[str, tuple[tuple[str, str], ...]] = {
    "poly": (
        ("p", "int"),
        ("v", "int"),
        ("P", "int_list"),
        ("Q", "int_list"),
    ),
    "dee": (
        ("p", "int"),
        ("h", "int"),
        ("v", "int"),
        ("degree", "int"),
        ("dee", "int_list"),
        ("unit", "int"),
        ("factors", "nested_list"),
    ),
    "hminus": (
        ("p", "int"),
        ("value", "int"),
        ("det", "int"),
        ("exponent_check", "bool"),
    ),
    "valuation": (
        ("p", "int"),
        ("h", "int"),
        ("valuation", "int"),
        ("precision_used", "int"),
    ),
    "irregular": (
        ("p", "int"),
        ("index", "int"),
    ),
    "identity": (
        ("p", "int"),
        ("v", "int"),
        ("ok", "bool"),
    ),
    "scan": (
        ("p", "int"),
        ("h", "int"),
        ("v", "int"),
        ("degree", "int"),
        ("factor_summary", "nested_list"),
        ("oracle", "str"),
        ("h_divides_hminus", "opt_bool"),
        ("valuation", "opt_int"),
        ("consistent", "opt_bool"),
        ("repeated_factors", "bool"),
        ("reference_rank", "opt_int"),
        ("rank_match", "opt_bool"),
    ),
}


# ---------------------------------------------------------------------------
# record constructors (flat dicts in schema key order)
# ---------------------------------------------------------------------------

def poly_record(table: PowerTable, p_poly, q_poly) -> dict:
    return {
        "p": table.p,
        "v": table.v,
        "P": list(p_poly.coeffs),
        "Q": list(q_poly.coeffs),
    }


def dee_record(res: DxResult) -> dict:
    return {
        "p": res.p,
        "h": res.h,
        "v": res.v,
        "degree": res.degree,
        "dee": list(res.dee.coeffs),
        "unit": res.factorization.unit,
        "factors": [[list(f.coeffs), m] for f, m in res.factorization.factors],
    }


def hminus_record(res: HMinusResult) -> dict:
    return {
        "p": res.p,
        "value": res.value,
        "det": res.det,
        "exponent_check": res.exponent_check,
    }


def valuation_record(res: ValuationResult) -> dict:
    return {
        "p": res.p,
        "h": res.h,
        "valuation": res.valuation,
        "precision_used": res.precision_used,
    }


def irregular_record(p: int, index: int) -> dict:
    return {"p": p, "index": index}


def identity_record(p: int, v: int, ok: bool) -> dict:
    return {"p": p, "v": v, "ok": ok}


def scan_record(rec: ScanRecord) -> dict:
    return {
        "p": rec.p,
        "h": rec.h,
        "v": rec.v,
        "degree": rec.degree,
        "factor_summary": [list(pair) for pair in rec.factor_summary],
        "oracle": rec.oracle,
        "h_divides_hminus": rec.h_divides_hminus,
        "valuation": rec.valuation,
        "consistent": rec.consistent,
        "repeated_factors": rec.repeated_factors,
        "reference_rank": rec.reference_rank,
        "rank_match": rec.rank_match,
    }


# ---------------------------------------------------------------------------
# rendering and parsing
# ---------------------------------------------------------------------------

def render_json(record: dict) -> str:
    return json.dumps(record, separators=(",", ":"))


def parse_json(line: str) -> dict:
    return json.loads(line)


def _encode_cell(value, kind: str) -> str:
    if kind in ("opt_int", "opt_bool") and value is None:
        return ""
    if kind in ("bool", "opt_bool"):
        return "true" if value else "false"
    if kind in ("int", "opt_int"):
        return str(value)
    if kind == "str":
        return value
    if kind in ("int_list", "nested_list"):
        return json.dumps(value, separators=(",", ":"))
    raise ParameterError(f"unknown cell type {kind!r}")


def _decode_cell(text: str, kind: str):
    if kind in ("opt_int", "opt_bool") and text == "":
        return None
    if kind in ("bool", "opt_bool"):
        if text not in ("true", "false"):
            raise ParameterError(f"bad boolean cell {text!r}")
        return text == "true"
    if kind in ("int", "opt_int"):
        return int(text)
    if kind == "str":
        return text
    if kind in ("int_list", "nested_list"):
        return json.loads(text)
    raise ParameterError(f"unknown cell type {kind!r}")


def csv_header(kind: str) -> list[str]:
    return [key for key, _ in SCHEMAS[kind]]


def render_csv_row(kind: str, record: dict) -> list[str]:
    return [_encode_cell(record[key], ctype) for key, ctype in SCHEMAS[kind]]


def parse_csv(text: str, kind: str) -> list[dict]:
    rows = list(csv.reader(io.StringIO(text)))
    if not rows:
        return []
    header = csv_header(kind)
    if rows[0] != header:
        raise ParameterError(f"bad CSV header for kind {kind!r}: {rows[0]!r}")
    out = []
    for row in rows[1:]:
        if len(row) != len(header):
            raise ParameterError(f"bad CSV row width: {row!r}")
        out.append(
            {key: _decode_cell(cell, ctype) for (key, ctype), cell in zip(SCHEMAS[kind], row)}
        )
    return out


class RecordWriter:
    """Streams records to a text stream in one format with a fixed schema."""

    def __init__(self, kind: str, fmt: str, stream: IO[str]):
        if kind not in SCHEMAS:
            raise ParameterError(f"unknown record kind {kind!r}")
        if fmt not in ("json", "csv"):
            raise ParameterError(f"format must be json or csv, got {fmt!r}")
        self.kind = kind
        self.fmt = fmt
        self.stream = stream
        self._csv_writer = None

    def write(self, record: dict) -> None:
        if self.fmt == "json":
            self.stream.write(render_json(record) + "\n")
            return
        if self._csv_writer is None:
            self._csv_writer = csv.writer(self.stream, lineterminator="\n")
            self._csv_writer.writerow(csv_header(self.kind))
        self._csv_writer.writerow(render_csv_row(self.kind, record))
