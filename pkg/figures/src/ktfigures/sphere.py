"""Sphere scatter panels: ensemble snapshots over a surface-of-section layer.

Default rendering is an orthographic 3-D view; a Hammer-projection 2-D
option is available for judging point densities on the full sphere.
"""

from __future__ import annotations

import argparse
from pathlib import Path

import numpy as np
import matplotlib.pyplot as plt

from .csvio import FigureDataError, load_points

_COLORS = ("black", "tab:blue", "tab:red", "tab:green")


def _hammer_coords(xyz):
    lon = np.arctan2(xyz[:, 1], xyz[:, 0])
    lat = np.arcsin(np.clip(xyz[:, 2], -1.0, 1.0))
    return lon, lat


def plot_sphere(snap_paths, out_path, sos_path=None, projection="ortho",
                dpi=150) -> dict:
    """One panel per snapshot time; returns panel and point counts.

    Panels are the sorted distinct q values pooled over all snapshot files;
    each file contributes one scatter series per panel. The surface of
    section, when given, is drawn beneath every panel.
    """
    if projection not in ("ortho", "hammer"):
        raise FigureDataError(f"unknown projection {projection!r}")
    snap_paths = [Path(p) for p in snap_paths]
    if not snap_paths:
        raise FigureDataError("no snapshot files given")
    clouds = [load_points(p) for p in snap_paths]
    sos = load_points(sos_path)[1] if sos_path is not None else None
    times = sorted({int(q) for qs, _ in clouds for q in qs})

    panels = len(times)
    point_counts = {}
    fig = plt.figure(figsize=(3.0 * panels, 3.2))
    for i, t in enumerate(times):
        if projection == "ortho":
            ax = fig.add_subplot(1, panels, i + 1, projection="3d")
            ax.computed_zorder = False
            if sos is not None:
                ax.scatter(*sos.T, s=1, color="gold", alpha=0.4, zorder=1)
        else:
            ax = fig.add_subplot(1, panels, i + 1, projection="hammer")
            ax.grid(True, lw=0.3)
            if sos is not None:
                ax.scatter(*_hammer_coords(sos), s=1, color="gold",
                           alpha=0.4, zorder=1)
        count = 0
        for (qs, xyz), color in zip(clouds, _COLORS):
            sel = xyz[qs == t]
            if sel.shape[0] == 0:
                continue
            count += sel.shape[0]
            if projection == "ortho":
                ax.scatter(*sel.T, s=2, color=color, zorder=2)
            else:
                ax.scatter(*_hammer_coords(sel), s=2, color=color, zorder=2)
        point_counts[t] = count
        if projection == "ortho":
            ax.set_box_aspect((1, 1, 1))
            ax.set_proj_type("ortho")
            ax.set_axis_off()
        ax.set_title(f"t = {t}", fontsize=9)

    fig.tight_layout()
    out_path = Path(out_path)
    fig.savefig(out_path, dpi=dpi)
    plt.close(fig)
    return {
        "path": out_path,
        "panels": panels,
        "points": point_counts,
        "sos_points": None if sos is None else int(sos.shape[0]),
    }


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="ktfig-sphere", description="Sphere scatter panels")
    parser.add_argument("snapshots", nargs="+", help="snapshot CSV files")
    parser.add_argument("--sos", help="surface-of-section CSV layer")
    parser.add_argument("--projection", choices=("ortho", "hammer"),
                        default="ortho")
    parser.add_argument("--out", required=True, help="output image file")
    args = parser.parse_args(argv)
    try:
        rep = plot_sphere(args.snapshots, args.out, sos_path=args.sos,
                          projection=args.projection)
    except FigureDataError as exc:
        print(f"ktfig-sphere: {exc}")
        return 1
    print(f"wrote {rep['path']} ({rep['panels']} panels)")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
