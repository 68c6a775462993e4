"""Validated loaders for the simulator's CSV schema."""

from __future__ import annotations

from pathlib import Path

import numpy as np


class FigureDataError(ValueError):
    """A CSV input does not follow the expected schema."""


def _read_rows(path):
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise FigureDataError(f"cannot read {path}: {exc}")
    lines = [ln for ln in text.split("\n") if ln.strip()]
    if not lines:
        raise FigureDataError(f"{path}: file is empty")
    header = [h.strip() for h in lines[0].split(",")]
    if len(lines) == 1:
        raise FigureDataError(f"{path}: no data rows")
    return header, lines[1:]


def _parse(path, rows, width):
    try:
        data = np.array([[float(x) for x in row.split(",")] for row in rows])
    except ValueError as exc:
        raise FigureDataError(f"{path}: non-numeric cell ({exc})")
    if data.shape[1] != width:
        raise FigureDataError(
            f"{path}: expected {width} columns, found {data.shape[1]}")
    return data


def load_curve(path) -> tuple[np.ndarray, np.ndarray]:
    """(q, value) curve from a two-column CSV such as *_H.csv / *_M.csv."""
    header, rows = _read_rows(path)
    if len(header) != 2 or header[0] != "q":
        raise FigureDataError(
            f"{path}: expected header 'q,<value>', found {','.join(header)}")
    data = _parse(path, rows, 2)
    return data[:, 0], data[:, 1]


def load_points(path) -> tuple[np.ndarray, np.ndarray]:
    """(q, xyz) point cloud from a *_sos.csv / *_snap.csv file."""
    header, rows = _read_rows(path)
    if header != ["q", "ux", "uy", "uz"]:
        raise FigureDataError(
            f"{path}: expected header 'q,ux,uy,uz', found {','.join(header)}")
    data = _parse(path, rows, 4)
    return data[:, 0].astype(int), data[:, 1:]
