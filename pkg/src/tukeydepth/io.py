"""Point-set and result documents (JSON).

A point-set document looks like::

    {"dim": 2, "points": [[0, 0], ["1/2", 3], ["0.25", "-7/3"]], "meta": {"seed": 1}}

Coordinates may be integers, ``"p/q"`` strings or finite decimals (as strings
or JSON numbers); all are converted to exact rationals.  On output integers
are written bare and everything else as ``"p/q"``, so a parsed document
serializes to the same bytes every time.
"""

from __future__ import annotations

import json
from decimal import Decimal
from fractions import Fraction
from typing import Any

from .errors import InputError
from .geometry import PointSet, as_rational


def _coord(x) -> Fraction:
    if isinstance(x, float):
        raise InputError("floating point coordinates are not accepted")
    if isinstance(x, Decimal) and not x.is_finite():
        raise InputError(f"non-finite coordinate {x}")
    if isinstance(x, str):
        s = x.strip()
        if "/" not in s:
            try:
                dec = Decimal(s)
            except ArithmeticError as exc:
                raise InputError(f"bad coordinate {x!r}") from exc
            if not dec.is_finite():
                raise InputError(f"non-finite coordinate {x!r}")
            return Fraction(dec)
    return as_rational(x)


def encode_rational(x: Fraction) -> int | str:
    x = Fraction(x)
    return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_document(text: str) -> tuple[PointSet, dict]:
    """Parse a point-set document into a :class:`PointSet` and its metadata."""
    try:
        doc = json.loads(text, parse_float=Decimal)
    except json.JSONDecodeError as exc:
        raise InputError(f"not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise InputError("a point-set document is a JSON object")
    unknown = set(doc) - {"dim", "points", "meta"}
    if unknown:
        raise InputError(f"unknown fields {sorted(unknown)}")
    dim, points = doc.get("dim"), doc.get("points")
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
        raise InputError("'dim' must be a positive integer")
    if not isinstance(points, list) or not all(isinstance(p, list) for p in points):
        raise InputError("'points' must be a list of coordinate lists")
    meta = doc.get("meta", {})
    if not isinstance(meta, dict):
        raise InputError("'meta' must be an object")
    coords = tuple(tuple(_coord(c) for c in p) for p in points)
    return PointSet(dim, coords), meta


def serialize_document(P: PointSet, meta: dict | None = None) -> str:
    doc: dict[str, Any] = {
        "dim": P.dim,
        "points": [[encode_rational(c) for c in p] for p in P.points],
    }
    if meta:
        doc["meta"] = meta
    return json.dumps(doc, indent=2) + "\n"


def read_document(path: str) -> tuple[PointSet, dict]:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    return parse_document(text)


def write_document(path: str, P: PointSet, meta: dict | None = None) -> None:
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(serialize_document(P, meta))
    except OSError as exc:
        raise InputError(f"cannot write {path}: {exc}") from exc


def labeled_histogram(entries) -> dict[str, int]:
    """Depth-labelled view of a 1-indexed histogram."""
    return {str(i): x for i, x in enumerate(entries, start=1)}


def result_document(command: str, inputs: dict, outputs: dict, status: str = "ok") -> str:
    doc = {"command": command, "inputs": inputs, "outputs": outputs, "status": status}
    return json.dumps(doc, indent=2, sort_keys=True, default=_json_default) + "\n"


def _json_default(x):
    if isinstance(x, Fraction):
        return encode_rational(x)
    if isinstance(x, (tuple, set, frozenset)):
        return list(x)
    raise TypeError(f"cannot serialize {type(x).__name__}")
