"""Entropy/mixing curve panels.

Two layouts: a single panel overlaying several H(q) curves (legend ordered
bottom to top), and per-configuration panels pairing H(q) with the classical
M(q) drawn upside down on a mirrored twin axis.
"""

from __future__ import annotations

import argparse
from pathlib import Path

import matplotlib.pyplot as plt

from .csvio import FigureDataError, load_curve


def plot_entropy_curves(csv_paths, labels, out_path, mirror_paths=None,
                        dpi=150) -> dict:
    """Render curve panels; returns a report with panel and point counts.

    Without `mirror_paths`: one panel, one H-curve per input CSV.
    With `mirror_paths` (same length as `csv_paths`): one panel per pair,
    H on the left axis and the mirrored M on an inverted twin axis.
    """
    csv_paths = [Path(p) for p in csv_paths]
    labels = list(labels)
    if len(labels) != len(csv_paths):
        raise FigureDataError(
            f"{len(csv_paths)} curve files but {len(labels)} labels")
    curves = [load_curve(p) for p in csv_paths]

    if mirror_paths is None:
        fig, ax = plt.subplots(figsize=(5.0, 3.4))
        for (q, H), label in zip(curves, labels):
            ax.plot(q, H, lw=1.2, label=label)
        ax.set_xlabel("kicks")
        ax.set_ylabel("H")
        ax.set_ylim(0, 1.05)
        ax.legend(loc="lower right", fontsize=8)
        panels = 1
    else:
        mirror_paths = [Path(p) for p in mirror_paths]
        if len(mirror_paths) != len(csv_paths):
            raise FigureDataError(
                f"{len(csv_paths)} curve files but {len(mirror_paths)} mirror files")
        mirrors = [load_curve(p) for p in mirror_paths]
        panels = len(curves)
        fig, axes = plt.subplots(1, panels, figsize=(3.0 * panels, 3.0),
                                 squeeze=False)
        for ax, (q, H), (qm, M), label in zip(axes[0], curves, mirrors, labels):
            ax.plot(q, H, "k-", lw=1.2, label="H")
            twin = ax.twinx()
            twin.plot(qm, M, "b--", lw=1.0, label="M")
            twin.set_ylim(1.05, -0.05)      # upside-down mixing curve
            ax.set_ylim(-0.05, 1.05)
            ax.set_xlabel("kicks")
            ax.set_title(label, fontsize=9)
        axes[0, 0].set_ylabel("H")

    fig.tight_layout()
    out_path = Path(out_path)
    fig.savefig(out_path, dpi=dpi)
    plt.close(fig)
    return {
        "path": out_path,
        "panels": panels,
        "points": [len(q) for q, _ in curves],
        "mirror_points": (None if mirror_paths is None
                          else [len(load_curve(p)[0]) for p in mirror_paths]),
    }


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="ktfig-entropy", description="Entropy/mixing curve panels")
    parser.add_argument("curves", nargs="+", help="H-curve CSV files")
    parser.add_argument("--labels", required=True,
                        help="comma-separated curve labels")
    parser.add_argument("--mirror", help="comma-separated M-curve CSV files")
    parser.add_argument("--out", required=True, help="output image file")
    args = parser.parse_args(argv)
    mirror = args.mirror.split(",") if args.mirror else None
    try:
        rep = plot_entropy_curves(args.curves, args.labels.split(","),
                                  args.out, mirror)
    except FigureDataError as exc:
        print(f"ktfig-entropy: {exc}")
        return 1
    print(f"wrote {rep['path']} ({rep['panels']} panels)")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
