"""SVG figures of regions and point sets in the complex plane."""

from __future__ import annotations

from pathlib import Path
from typing import Iterable, Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402
from matplotlib.patches import Circle  # noqa: E402

from .regions import (  # noqa: E402
    ClosedRightHalfPlane,
    CotSet,
    OffRealAxis,
    OpenDisk,
    OpenHalfPlane,
    Region,
    SetMinus,
    StripExterior,
    Union,
    primitives,
)

GRID = 241
MARKERS = ("o", "s", "^", "D", "v", "P")
COLORS = ("#c0392b", "#2c3e50", "#27ae60", "#8e44ad", "#d35400", "#16a085")


def _view(region, groups, cot_points):
    pts = [z for _, zs in groups for z in zs] + list(cot_points)
    reach = max([1.6] + [1.15 * max(abs(z.real), abs(z.imag)) + 0.25 for z in pts])
    for prim in primitives(region) if region is not None else ():
        if isinstance(prim, OpenDisk):
            reach = max(reach, 1.15 * (max(abs(prim.center.real), abs(prim.center.imag)) + prim.radius))
        elif isinstance(prim, StripExterior):
            reach = max(reach, 1.5 * prim.c + 0.5)
    return min(reach, 50.0)


def _removed_points(region):
    if isinstance(region, SetMinus):
        yield from region.points
        yield from _removed_points(region.region)
    elif isinstance(region, Union):
        for p in region.parts:
            yield from _removed_points(p)


def render_plot(
    region: Region | None,
    groups: Sequence[tuple[str, Iterable[complex]]],
    out_path,
    title: str | None = None,
    cot_n: int | None = None,
):
    """Draw ``region`` shaded with its primitive boundaries, and each labelled point group.

    Output is SVG with fixed metadata and hash salt, so identical inputs
    produce identical bytes.
    """
    groups = [(label, [complex(z) for z in zs]) for label, zs in groups]
    cot_pts = [complex(0, v) for v in _cot_axis_values(region, cot_n)]
    R = _view(region, groups, cot_pts)

    with plt.rc_context({"svg.hashsalt": "rolle", "svg.fonttype": "path", "font.size": 9}):
        fig, ax = plt.subplots(figsize=(6, 6))
        if region is not None:
            xs = np.linspace(-R, R, GRID)
            X, Y = np.meshgrid(xs, xs)
            mask = np.array(
                [[region.contains(complex(x, y)) for x in xs] for y in xs], dtype=float
            )
            if mask.any():
                ax.contourf(X, Y, mask, levels=[0.5, 1.5], colors=["#aed6f1"], alpha=0.6)
            _draw_boundaries(ax, region, R)
            removed = list(_removed_points(region))
            if removed:
                ax.scatter([z.real for z in removed], [z.imag for z in removed], s=40,
                           facecolors="none", edgecolors="k", label="removed points", zorder=4)
        if cot_pts:
            ax.scatter([0.0] * len(cot_pts), [z.imag for z in cot_pts], marker="_", s=80,
                       color="#555555", label="cot points", zorder=3)
        for idx, (label, zs) in enumerate(groups):
            if not zs:
                continue
            ax.scatter([z.real for z in zs], [z.imag for z in zs], marker=MARKERS[idx % len(MARKERS)],
                       color=COLORS[idx % len(COLORS)], s=28, label=label, zorder=5)
        ax.axhline(0, color="0.7", lw=0.5, zorder=0)
        ax.axvline(0, color="0.7", lw=0.5, zorder=0)
        ax.set_xlim(-R, R)
        ax.set_ylim(-R, R)
        ax.set_aspect("equal")
        ax.set_xlabel("Re z")
        ax.set_ylabel("Im z")
        if title:
            ax.set_title(title)
        handles, labels = ax.get_legend_handles_labels()
        if handles:
            ax.legend(loc="upper right", fontsize=8)
        out_path = Path(out_path)
        fig.savefig(out_path, format="svg", metadata={"Date": None, "Creator": "rolle"})
        plt.close(fig)
    return out_path


def _cot_axis_values(region, cot_n):
    vals = set()
    if cot_n is not None:
        from .constructions import cot_points

        vals.update(z.imag for z in cot_points(cot_n))
    if region is not None:
        for prim in primitives(region):
            if isinstance(prim, CotSet):
                vals.update(z.imag for z in prim.points)
    return sorted(vals)


def _draw_boundaries(ax, region, R):
    for prim in primitives(region):
        if isinstance(prim, OpenDisk):
            ax.add_patch(Circle((prim.center.real, prim.center.imag), prim.radius, fill=False,
                                ls="--", lw=1.0, color="#1f618d"))
        elif isinstance(prim, StripExterior):
            for s in (prim.c, -prim.c):
                ax.axhline(s, ls="--", lw=1.0, color="#1f618d")
        elif isinstance(prim, OffRealAxis):
            ax.axhline(0, ls=":", lw=1.2, color="#1f618d")
        elif isinstance(prim, (ClosedRightHalfPlane, OpenHalfPlane)):
            ls = "-" if isinstance(prim, ClosedRightHalfPlane) else "--"
            ax.axvline(0, ls=ls, lw=1.0, color="#1f618d")
