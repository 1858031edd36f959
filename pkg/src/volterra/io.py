"""Matrix files and text rendering.

File format::

    {"m": 4, "upper": ["1/2", "1", "1/2", "1/2", "1", "1/2"]}

``upper`` lists a_12, a_13, ..., a_1m, a_23, ..., a_(m-1)m. Entries may be
integers, ``"p/q"`` strings or JSON numbers (converted exactly from binary).
``{"matrix": [[...], ...]}`` with the full grid is accepted too. An optional
``"face": [1, 2]`` names the vertices a face operator lives on.
"""
from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Any

from .core import Face, SkewMatrix, format_fraction, validate
from .errors import ParseError


def matrix_from_dict(doc: Any) -> SkewMatrix:
    if not isinstance(doc, dict):
        raise ParseError("top level must be a JSON object")
    if "matrix" in doc:
        grid = doc["matrix"]
        if not isinstance(grid, list) or not all(isinstance(r, list) for r in grid):
            raise ParseError("field 'matrix' must be a list of rows")
        matrix = validate(grid)
        if "m" in doc and doc["m"] != matrix.m:
            raise ParseError(f"field 'm' is {doc['m']} but the grid is {matrix.m}x{matrix.m}")
        return matrix
    if "upper" not in doc:
        raise ParseError("missing field 'upper' (or 'matrix')")
    upper = doc["upper"]
    if not isinstance(upper, list):
        raise ParseError("field 'upper' must be a list")
    m = doc.get("m")
    if m is None:
        return SkewMatrix.from_upper(upper)
    if not isinstance(m, int) or isinstance(m, bool) or m < 1:
        raise ParseError(f"field 'm' must be a positive integer, got {m!r}")
    return SkewMatrix(m, tuple(upper))


def parse_matrix_text(text: str, source: str = "<string>") -> SkewMatrix:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{source}: line {exc.lineno} column {exc.colno}: {exc.msg}") from exc
    try:
        return matrix_from_dict(doc)
    except ParseError as exc:
        raise ParseError(f"{source}: {exc}") from exc


def parse_matrix_file(path: str | Path) -> SkewMatrix:
    path = Path(path)
    return parse_matrix_text(path.read_text(encoding="utf-8"), str(path))


def parse_face_file(path: str | Path, ambient_m: int) -> tuple[SkewMatrix, Face]:
    """A face operator plus where it sits (default: the first vertices)."""
    path = Path(path)
    text = path.read_text(encoding="utf-8")
    matrix = parse_matrix_text(text, str(path))
    labels = json.loads(text).get("face")
    if labels is None:
        return matrix, Face(tuple(range(matrix.m)), ambient_m)
    if not isinstance(labels, list) or len(labels) != matrix.m:
        raise ParseError(f"{path}: field 'face' must list {matrix.m} vertex labels")
    return matrix, Face.from_labels(labels, ambient_m)


def matrix_to_dict(matrix: SkewMatrix) -> dict:
    return {"m": matrix.m, "upper": [format_fraction(v) for v in matrix.upper]}


def matrix_to_json(matrix: SkewMatrix) -> str:
    return json.dumps(matrix_to_dict(matrix))


def parse_labels(text: str) -> list[int]:
    """``"1,2,3"`` -> ``[1, 2, 3]``."""
    try:
        return [int(tok) for tok in text.replace(" ", "").strip("{}").split(",") if tok]
    except ValueError as exc:
        raise ParseError(f"bad vertex list {text!r}") from exc


def parse_point(text: str) -> tuple[float, ...]:
    try:
        return tuple(float(tok) for tok in text.split(","))
    except ValueError as exc:
        raise ParseError(f"bad point {text!r}") from exc


def decimal(q: Fraction, digits: int = 12) -> str:
    return f"{float(q):.{digits}g}"
