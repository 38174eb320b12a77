"""File formats: signal readers, CSV map/matrix writers and binary PGM.

All numeric CSV output uses a fixed "%.15e" format with a fixed traversal
order, so identical inputs produce byte-identical files.  Complex entries
occupy two adjacent columns (re, im); the header row names the indices.
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .errors import InputFormatError

__all__ = [
    "read_signal",
    "read_complex_matrix_csv",
    "read_vector_csv",
    "format_real_map_csv",
    "format_complex_matrix_csv",
    "format_vector_csv",
    "pgm_bytes",
]

_FMT = "%.15e"


def _parse_number(token: str, where: str) -> float:
    try:
        return float(token)
    except ValueError:
        raise InputFormatError(f"could not parse number {token!r} at {where}") from None


def read_vector_csv(path: str | Path) -> np.ndarray:
    """Read a complex vector: one sample per line, ``x`` or ``re,im``."""
    values = []
    try:
        lines = Path(path).read_text().splitlines()
    except OSError as exc:
        raise InputFormatError(f"cannot read {path}: {exc}") from exc
    for i, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = [p.strip() for p in line.split(",")]
        if len(parts) == 1:
            values.append(complex(_parse_number(parts[0], f"row {i}")))
        elif len(parts) == 2:
            values.append(complex(_parse_number(parts[0], f"row {i}, column 1"),
                                  _parse_number(parts[1], f"row {i}, column 2")))
        else:
            raise InputFormatError(
                f"row {i}: expected 1 (real) or 2 (re,im) columns, got {len(parts)}")
    if not values:
        raise InputFormatError(f"{path}: no samples found")
    return np.array(values, dtype=complex)


def read_signal(path: str | Path) -> np.ndarray:
    """Read a signal from CSV (see :func:`read_vector_csv`) or JSON.

    JSON is either a bare array of reals or an object
    ``{"d": int, "values": [x or [re, im], ...]}``.
    """
    path = Path(path)
    if path.suffix.lower() != ".json":
        return read_vector_csv(path)
    try:
        payload = json.loads(path.read_text())
    except OSError as exc:
        raise InputFormatError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputFormatError(f"{path}: invalid JSON ({exc})") from exc
    if isinstance(payload, dict):
        declared = payload.get("d")
        entries = payload.get("values")
        if entries is None:
            raise InputFormatError(f"{path}: JSON object needs a 'values' field")
    elif isinstance(payload, list):
        declared, entries = None, payload
    else:
        raise InputFormatError(f"{path}: JSON must be an array or an object")
    values = []
    for i, entry in enumerate(entries):
        if isinstance(entry, (int, float)):
            values.append(complex(entry))
        elif isinstance(entry, list) and len(entry) == 2:
            values.append(complex(float(entry[0]), float(entry[1])))
        else:
            raise InputFormatError(f"{path}: values[{i}] must be a number or [re, im]")
    if not values:
        raise InputFormatError(f"{path}: no samples found")
    signal = np.array(values, dtype=complex)
    if declared is not None and int(declared) != signal.shape[0]:
        raise InputFormatError(
            f"{path}: declared d={declared} but {signal.shape[0]} samples present")
    return signal


def read_complex_matrix_csv(path: str | Path) -> np.ndarray:
    """Read a square complex matrix written by :func:`format_complex_matrix_csv`.

    Layout: header line, then one line per row: row index followed by
    re,im pairs for each column.
    """
    try:
        lines = [ln for ln in Path(path).read_text().splitlines() if ln.strip()]
    except OSError as exc:
        raise InputFormatError(f"cannot read {path}: {exc}") from exc
    if len(lines) < 2:
        raise InputFormatError(f"{path}: expected a header and at least one data row")
    rows = []
    for i, raw in enumerate(lines[1:], start=2):
        parts = [p.strip() for p in raw.split(",")]
        if len(parts) < 3 or (len(parts) - 1) % 2:
            raise InputFormatError(
                f"row {i}: expected an index followed by re,im pairs, got {len(parts)} fields")
        pairs = parts[1:]
        row = [complex(_parse_number(pairs[2 * j], f"row {i}, column {2 + 2 * j}"),
                       _parse_number(pairs[2 * j + 1], f"row {i}, column {3 + 2 * j}"))
               for j in range(len(pairs) // 2)]
        rows.append(row)
    mat = np.array(rows, dtype=complex)
    if mat.shape[0] != mat.shape[1]:
        raise InputFormatError(
            f"{path}: matrix must be square, got {mat.shape[0]} rows x {mat.shape[1]} columns")
    return mat


def format_real_map_csv(arr: np.ndarray, row_label: str = "m", col_label: str = "n") -> str:
    arr = np.asarray(arr)
    header = [row_label] + [f"{col_label}{j}" for j in range(arr.shape[1])]
    lines = [",".join(header)]
    for i in range(arr.shape[0]):
        lines.append(",".join([str(i)] + [_FMT % x for x in arr[i].real]))
    return "\n".join(lines) + "\n"


def format_complex_matrix_csv(arr: np.ndarray, row_label: str = "l",
                              col_label: str = "lp") -> str:
    arr = np.asarray(arr, dtype=complex)
    header = [row_label]
    for j in range(arr.shape[1]):
        header += [f"{col_label}{j}_re", f"{col_label}{j}_im"]
    lines = [",".join(header)]
    for i in range(arr.shape[0]):
        cells = [str(i)]
        for x in arr[i]:
            cells += [_FMT % x.real, _FMT % x.imag]
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"


def format_vector_csv(vec: np.ndarray, label: str = "l") -> str:
    vec = np.asarray(vec, dtype=complex)
    lines = [f"{label},re,im"]
    for i, x in enumerate(vec):
        lines.append(",".join([str(i), _FMT % x.real, _FMT % x.imag]))
    return "\n".join(lines) + "\n"


def pgm_bytes(magnitude: np.ndarray) -> bytes:
    """8-bit binary PGM (P5) of a nonnegative map, linearly scaled to 255."""
    arr = np.asarray(magnitude, dtype=float)
    peak = arr.max()
    if peak > 0:
        scaled = np.floor(arr / peak * 255.0 + 0.5)
    else:
        scaled = np.zeros_like(arr)
    data = np.clip(scaled, 0, 255).astype(np.uint8)
    header = f"P5\n{arr.shape[1]} {arr.shape[0]}\n255\n".encode("ascii")
    return header + data.tobytes()
