"""JSON and CSV forms for the objects the command line moves around.

A complex matrix travels as {"rows": n, "cols": n, "re": [...], "im": [...]}
with both parts flattened row-major.  Complex vectors and scalars use the
same re/im split; weight vectors are plain real JSON arrays; a state tuple
is a JSON list of per-vector {"re": [...], "im": [...]} records; a bipartite
operator is the matrix form plus a {"dA": m, "dB": n} record under "dims".
Floats print with the shortest representation that round-trips, unless a
digit count is forced.
"""

from __future__ import annotations

import numpy as np


def _as_float_list(values, name: str) -> list[float]:
    arr = np.asarray(values, dtype=float).ravel()
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} must contain only finite numbers")
    return [float(v) for v in arr]


def matrix_to_json(x) -> dict:
    """Encode a 2-D complex array as a rows/cols/re/im record."""
    x = np.asarray(x, dtype=complex)
    if x.ndim != 2:
        raise ValueError(f"expected a 2-D matrix, got shape {x.shape}")
    return {
        "rows": int(x.shape[0]),
        "cols": int(x.shape[1]),
        "re": _as_float_list(x.real, "matrix real part"),
        "im": _as_float_list(x.imag, "matrix imaginary part"),
    }


def matrix_from_json(obj) -> np.ndarray:
    """Decode a rows/cols/re/im record back into a complex matrix."""
    if not isinstance(obj, dict):
        raise ValueError("matrix record must be a JSON object")
    try:
        rows, cols = int(obj["rows"]), int(obj["cols"])
        re, im = obj["re"], obj["im"]
    except KeyError as exc:
        raise ValueError(f"matrix record is missing key {exc}") from exc
    if rows < 1 or cols < 1:
        raise ValueError(f"matrix must have positive size, got {rows} x {cols}")
    re = np.asarray(re, dtype=float)
    im = np.asarray(im, dtype=float)
    if re.size != rows * cols or im.size != rows * cols:
        raise ValueError(
            f"matrix record length mismatch: expected {rows * cols}, "
            f"got re={re.size} im={im.size}"
        )
    if not (np.all(np.isfinite(re)) and np.all(np.isfinite(im))):
        raise ValueError("matrix entries must be finite")
    return (re + 1j * im).reshape(rows, cols)


def complex_to_json(z: complex) -> dict:
    return {"re": float(np.real(z)), "im": float(np.imag(z))}


def complex_from_json(obj) -> complex:
    try:
        return complex(float(obj["re"]), float(obj["im"]))
    except (TypeError, KeyError) as exc:
        raise ValueError("complex record must have re and im fields") from exc


def complex_vector_to_json(v) -> dict:
    v = np.asarray(v, dtype=complex).ravel()
    return {
        "re": _as_float_list(v.real, "vector real part"),
        "im": _as_float_list(v.imag, "vector imaginary part"),
    }


def complex_vector_from_json(obj) -> np.ndarray:
    try:
        re = np.asarray(obj["re"], dtype=float)
        im = np.asarray(obj["im"], dtype=float)
    except (TypeError, KeyError) as exc:
        raise ValueError("vector record must have re and im fields") from exc
    if re.shape != im.shape:
        raise ValueError("vector re and im parts must have equal length")
    return re + 1j * im


def states_to_json(states) -> list[dict]:
    """Encode an (n, d) tuple of state vectors as a list of re/im records."""
    psi = np.asarray(states, dtype=complex)
    if psi.ndim != 2:
        raise ValueError(f"expected an (n, d) array, got shape {psi.shape}")
    return [complex_vector_to_json(row) for row in psi]


def states_from_json(items) -> np.ndarray:
    if not isinstance(items, list) or not items:
        raise ValueError("state tuple must be a nonempty JSON list")
    vectors = [complex_vector_from_json(item) for item in items]
    lengths = {v.size for v in vectors}
    if len(lengths) != 1:
        raise ValueError(f"state vectors must share one dimension, got {sorted(lengths)}")
    return np.vstack(vectors)


def weights_to_json(weights) -> list[float]:
    return _as_float_list(weights, "weights")


def weights_from_json(obj) -> np.ndarray:
    arr = np.asarray(obj, dtype=float).ravel()
    if arr.size < 1:
        raise ValueError("weight vector must be nonempty")
    return arr


def bipartite_to_json(x, dims) -> dict:
    record = matrix_to_json(x)
    record["dims"] = {"dA": int(dims[0]), "dB": int(dims[1])}
    return record


def bipartite_from_json(obj) -> tuple[np.ndarray, tuple[int, int]]:
    x = matrix_from_json(obj)
    try:
        dims = obj["dims"]
        da, db = int(dims["dA"]), int(dims["dB"])
    except (TypeError, KeyError) as exc:
        raise ValueError("bipartite record needs dims with dA and dB") from exc
    if da < 1 or db < 1 or x.shape != (da * db, da * db):
        raise ValueError(
            f"dims {da}x{db} do not match a matrix of shape {x.shape}"
        )
    return x, (da, db)


def format_float(value: float, digits: int | None = None) -> str:
    """Shortest round-tripping decimal, or a fixed significant-digit form."""
    value = float(value)
    if digits is None:
        return repr(value)
    if digits < 1:
        raise ValueError(f"digits must be positive, got {digits}")
    return f"{value:.{digits}g}"


SWEEP_HEADER = "theta,c_rho,c_phi,c_delta"


def sweep_to_csv_lines(rows, digits: int | None = None) -> list[str]:
    """Header plus one comma-joined line per sweep row."""
    rows = np.asarray(rows, dtype=float)
    if rows.ndim != 2 or rows.shape[1] != 4:
        raise ValueError(f"sweep table must have 4 columns, got shape {rows.shape}")
    lines = [SWEEP_HEADER]
    for row in rows:
        lines.append(",".join(format_float(v, digits) for v in row))
    return lines


def sweep_from_csv_lines(lines) -> np.ndarray:
    lines = [ln.strip() for ln in lines if ln.strip()]
    if not lines or lines[0] != SWEEP_HEADER:
        raise ValueError(f"sweep CSV must start with header {SWEEP_HEADER!r}")
    return np.array([[float(v) for v in ln.split(",")] for ln in lines[1:]])


def sweep_to_json(rows) -> list[dict]:
    rows = np.asarray(rows, dtype=float)
    if rows.ndim != 2 or rows.shape[1] != 4:
        raise ValueError(f"sweep table must have 4 columns, got shape {rows.shape}")
    keys = ("theta", "c_rho", "c_phi", "c_delta")
    return [dict(zip(keys, (float(v) for v in row))) for row in rows]
