"""Deterministic file formats: CSV matrices, JSON metadata, PGM heatmaps.

All writers are atomic (temp file in the target directory, then rename) so
a failed run never leaves partial files.  Floats are rendered as shortest
round-trip decimals, which makes outputs byte-stable across runs and lets
CSV round-trips reproduce values exactly.
"""

import json
import os

import numpy as np

__all__ = [
    "fmt_float",
    "atomic_write_text",
    "write_matrix_csv",
    "read_matrix_csv",
    "write_json",
    "write_pgm",
    "write_trajectory_csv",
    "read_trajectory_csv",
]


def fmt_float(v):
    """Shortest decimal string that parses back to exactly v."""
    return repr(float(v))


def atomic_write_text(path, text):
    tmp = path + ".tmp"
    with open(tmp, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)
    os.replace(tmp, path)


def write_matrix_csv(path, col_values, matrix, absent_rows=None):
    """Matrix CSV: one header row of column coordinates, then data rows.

    Rows follow the matrix order (steps or times ascending).  Cells in
    rows flagged by absent_rows are left empty.
    """
    matrix = np.asarray(matrix)
    lines = [",".join(fmt_float(c) for c in col_values)]
    for i in range(matrix.shape[0]):
        if absent_rows is not None and absent_rows[i]:
            lines.append("," * (matrix.shape[1] - 1))
        else:
            lines.append(",".join(fmt_float(v) for v in matrix[i]))
    atomic_write_text(path, "\n".join(lines) + "\n")


def read_matrix_csv(path):
    """Parse a matrix CSV back into (col_values, matrix).

    Empty cells come back as NaN.  Malformed content raises ValueError
    naming the 1-based line number.
    """
    with open(path, "r", encoding="utf-8") as fh:
        raw = fh.read().splitlines()
    rows = [r for r in raw if r != ""]
    if not rows:
        raise ValueError("%s: line 1: empty CSV" % path)
    try:
        cols = np.array([float(c) for c in rows[0].split(",")])
    except ValueError:
        raise ValueError("%s: line 1: header cell is not a number" % path) from None
    width = len(cols)
    data = np.empty((len(rows) - 1, width))
    for i, row in enumerate(rows[1:], start=2):
        cells = row.split(",")
        if len(cells) != width:
            raise ValueError(
                "%s: line %d: expected %d cells, found %d" % (path, i, width, len(cells))
            )
        for j, cell in enumerate(cells):
            if cell == "":
                data[i - 2, j] = np.nan
            else:
                try:
                    data[i - 2, j] = float(cell)
                except ValueError:
                    raise ValueError(
                        "%s: line %d: cell %d is not a number: %r" % (path, i, j + 1, cell)
                    ) from None
    return cols, data


def write_json(path, obj):
    """Sorted-key, indented JSON; stable byte-for-byte for equal input."""
    atomic_write_text(path, json.dumps(obj, sort_keys=True, indent=2) + "\n")


def write_pgm(path, matrix, absent_rows=None):
    """Plain (P2) 8-bit PGM heatmap of a probability matrix.

    Linear map from [0, max P] to [255, 0], so dark pixels mark high
    probability.  Absent rows and NaN cells render as white.  Lines are
    wrapped at 70 characters per the plain-PGM convention.
    """
    matrix = np.asarray(matrix, dtype=np.float64)
    work = matrix.copy()
    if absent_rows is not None:
        work[np.asarray(absent_rows, dtype=bool)] = np.nan
    finite = np.isfinite(work)
    peak = float(np.max(work[finite])) if finite.any() else 0.0
    if peak > 0.0:
        gray = 255.0 - np.round(255.0 * work / peak)
    else:
        gray = np.full_like(work, 255.0)
    gray = np.where(finite, gray, 255.0).astype(np.int64)
    gray = np.clip(gray, 0, 255)
    tokens = []
    for row in gray:
        tokens.extend(str(int(v)) for v in row)
    lines = ["P2", "%d %d" % (matrix.shape[1], matrix.shape[0]), "255"]
    cur = ""
    for tok in tokens:
        if not cur:
            cur = tok
        elif len(cur) + 1 + len(tok) <= 70:
            cur += " " + tok
        else:
            lines.append(cur)
            cur = tok
    if cur:
        lines.append(cur)
    atomic_write_text(path, "\n".join(lines) + "\n")


def write_trajectory_csv(path, trajectory):
    """Trajectory CSV: tau, x_plus, x_minus per row."""
    lines = ["tau,x_plus,x_minus"]
    for i in range(len(trajectory.taus)):
        lines.append(
            ",".join(
                (
                    fmt_float(trajectory.taus[i]),
                    fmt_float(trajectory.x_plus[i]),
                    fmt_float(trajectory.x_minus[i]),
                )
            )
        )
    atomic_write_text(path, "\n".join(lines) + "\n")


def read_trajectory_csv(path):
    """Parse a trajectory CSV into (taus, x_plus, x_minus) arrays."""
    with open(path, "r", encoding="utf-8") as fh:
        raw = fh.read().splitlines()
    rows = [r for r in raw if r != ""]
    if not rows or rows[0].split(",")[:3] != ["tau", "x_plus", "x_minus"]:
        raise ValueError("%s: line 1: expected header 'tau,x_plus,x_minus'" % path)
    taus = []
    xp = []
    xm = []
    for i, row in enumerate(rows[1:], start=2):
        cells = row.split(",")
        if len(cells) != 3:
            raise ValueError("%s: line %d: expected 3 cells, found %d" % (path, i, len(cells)))
        try:
            taus.append(float(cells[0]))
            xp.append(float(cells[1]))
            xm.append(float(cells[2]))
        except ValueError:
            raise ValueError("%s: line %d: cell is not a number" % (path, i)) from None
    return np.array(taus), np.array(xp), np.array(xm)
