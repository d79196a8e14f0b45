"""Stable file formats.

Decomposition files are JSON documents:

    {
      "format_version": 1,
      "n": 2,
      "scheme": "lattice",
      "params": {...},
      "scalar_kind": "rational" | "float64",
      "terms": [{"a": [...], "b": [...], "c": [...]}, ...]
    }

with each matrix stored row-major; rationals serialize as "p/q" strings and
floats as 17-significant-digit decimals, so both kinds round-trip losslessly.

Matrix files are plain text: first line "rows cols", then row-major
whitespace-separated decimals.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

import numpy as np

from .tensor import Decomposition, Rank1Term

__all__ = ["SchemaError", "save_decomposition", "load_decomposition", "save_matrix", "load_matrix"]

FORMAT_VERSION = 1


class SchemaError(ValueError):
    """Raised when a file does not parse or violates the documented schema."""


def _dump_scalar(x, exact: bool) -> str:
    if exact:
        f = Fraction(x)
        return f"{f.numerator}/{f.denominator}"
    return format(float(x), ".17g")


def _dump_matrix(m: np.ndarray, exact: bool) -> list[str]:
    return [_dump_scalar(x, exact) for x in m.reshape(-1)]


def save_decomposition(dec: Decomposition, path) -> None:
    exact = dec.exact
    doc = {
        "format_version": FORMAT_VERSION,
        "n": dec.n,
        "scheme": dec.scheme,
        "params": dec.params,
        "scalar_kind": "rational" if exact else "float64",
        "terms": [
            {
                "a": _dump_matrix(t.a, exact),
                "b": _dump_matrix(t.b, exact),
                "c": _dump_matrix(t.c, exact),
            }
            for t in dec.terms
        ],
    }
    Path(path).write_text(json.dumps(doc, indent=1))


def _load_matrix_field(flat, n: int, exact: bool) -> np.ndarray:
    if len(flat) != n * n:
        raise SchemaError(f"matrix has {len(flat)} entries, expected {n * n}")
    if exact:
        out = np.empty((n, n), dtype=object)
        for idx, s in enumerate(flat):
            out[idx // n, idx % n] = Fraction(s)
        return out
    return np.array([float(s) for s in flat]).reshape(n, n)


def load_decomposition(path) -> Decomposition:
    try:
        doc = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as e:
        raise SchemaError(f"cannot read decomposition file: {e}") from e
    try:
        if doc["format_version"] != FORMAT_VERSION:
            raise SchemaError(f"unsupported format_version {doc['format_version']}")
        n = int(doc["n"])
        exact = doc["scalar_kind"] == "rational"
        terms = tuple(
            Rank1Term(
                _load_matrix_field(t["a"], n, exact),
                _load_matrix_field(t["b"], n, exact),
                _load_matrix_field(t["c"], n, exact),
            )
            for t in doc["terms"]
        )
        return Decomposition(n, terms, doc.get("scheme", "imported"), doc.get("params", {}))
    except (KeyError, TypeError, ValueError) as e:
        if isinstance(e, SchemaError):
            raise
        raise SchemaError(f"malformed decomposition file: {e}") from e


def save_matrix(m: np.ndarray, path) -> None:
    rows, cols = m.shape
    lines = [f"{rows} {cols}"]
    for r in range(rows):
        lines.append(" ".join(format(float(x), ".17g") for x in m[r]))
    Path(path).write_text("\n".join(lines) + "\n")


def load_matrix(path) -> np.ndarray:
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise SchemaError(f"cannot read matrix file: {e}") from e
    tokens = text.split()
    try:
        rows, cols = int(tokens[0]), int(tokens[1])
        values = [float(t) for t in tokens[2:]]
    except (IndexError, ValueError) as e:
        raise SchemaError(f"malformed matrix file: {e}") from e
    if len(values) != rows * cols:
        raise SchemaError(f"matrix file has {len(values)} values, expected {rows * cols}")
    return np.array(values).reshape(rows, cols)
