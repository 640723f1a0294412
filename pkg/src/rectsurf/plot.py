"""Torus-projection pictures of rectangular diagrams, rendered as SVG with
matplotlib.

A :class:`PlotScene` holds the logical items (one entry per rectangle,
vertex, curve); rendering draws every item in lifted coordinates together
with its translates by -1 so that pieces crossing theta = 0 or phi = 0 wrap
around the unit square."""

from __future__ import annotations

import io
from dataclasses import dataclass, field
from graphlib import CycleError, TopologicalSorter

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
from matplotlib.patches import Rectangle as RectPatch  # noqa: E402

import numpy as np  # noqa: E402

from .link import LinkDiagram  # noqa: E402
from .surface import (BL, TR, SurfaceDiagram, boundary_framing, classify_pair,  # noqa: E402
                      giroux_and_dividing)
from .tiles import HarmonicTile, foliation_streamlines  # noqa: E402

LAYERS = ("rectangles", "vertices", "framing", "giroux", "dividing", "streamlines")
SHIFTS = [(dx, dy) for dx in (0, -1) for dy in (0, -1)]


@dataclass
class PlotScene:
    rects: list = field(default_factory=list)        # (index, x, y, w, h, z)
    points: dict = field(default_factory=dict)       # layer -> list of (x, y)
    polylines: dict = field(default_factory=dict)    # layer -> list of (n, 2) arrays
    title: str = ""

    def count(self, layer: str) -> int:
        if layer == "rectangles":
            return len(self.rects)
        return len(self.points.get(layer, ())) + len(self.polylines.get(layer, ()))


def stacking_order(P: SurfaceDiagram) -> list[int]:
    """Rectangle indices bottom to top: in every crossing pair the
    rectangle with the inner theta-span comes later (drawn over)."""
    ts = TopologicalSorter({i: set() for i in range(len(P.rectangles))})
    n = len(P.rectangles)
    for i in range(n):
        for j in range(i + 1, n):
            pc = classify_pair(P.rectangles[i], P.rectangles[j])
            if pc.kind == "crossing":
                over, under = (i, j) if pc.over == 0 else (j, i)
                ts.add(over, under)
    try:
        return list(ts.static_order())
    except CycleError:
        return list(range(n))


def _lift(arc) -> tuple[float, float]:
    return float(arc.start), float(arc.length)


def _lifted_polyline(points) -> np.ndarray:
    """Unwrap a sequence of torus points into a continuous lift."""
    pts = np.array([[float(p.theta), float(p.phi)] for p in points])
    steps = np.diff(pts, axis=0)
    steps -= np.round(steps)
    return np.vstack([pts[:1], pts[:1] + np.cumsum(steps, axis=0)])


def _dividing_polyline(P: SurfaceDiagram, curve) -> np.ndarray:
    """Lift of a dividing curve: the BL-TR diagonal of each rectangle in turn."""
    cur = np.array([float(curve.nodes[0].theta), float(curve.nodes[0].phi)])
    pts = [cur]
    node = curve.nodes[0]
    for i in curve.rectangles:
        r = P.rectangles[i]
        step = np.array([float(r.theta.length), float(r.phi.length)])
        if node == r.corner(BL):
            cur, node = cur + step, r.corner(TR)
        else:
            cur, node = cur - step, r.corner(BL)
        pts.append(cur)
    return np.array(pts)


def surface_scene(P: SurfaceDiagram, layers=LAYERS, kappa: float = 0.0, seeds: int = 5) -> PlotScene:
    scene = PlotScene(title="%d rectangles" % len(P.rectangles))
    order = stacking_order(P)
    if "rectangles" in layers:
        for z, i in enumerate(order):
            r = P.rectangles[i]
            (x, w), (y, h) = _lift(r.theta), _lift(r.phi)
            scene.rects.append((i, x, y, w, h, z))
    if "vertices" in layers:
        scene.points["vertices"] = [(float(v.theta), float(v.phi)) for v in P.free_vertices]
    if "framing" in layers and P.free_vertices:
        bf = boundary_framing(P)
        lines = []
        for e, g in bf.framing.greater.items():
            # the edge, with a short tick at its greater end
            s = e.other(g)
            lines.append(_lifted_polyline([s, g]))
        scene.polylines["framing"] = lines
    gd = giroux_and_dividing(P) if ("giroux" in layers or "dividing" in layers) else None
    if "giroux" in layers:
        scene.points["giroux"] = [(float(v.theta), float(v.phi)) for v in gd.giroux_edges]
    if "dividing" in layers:
        curves = []
        for c in gd.dividing:
            curves.append(_dividing_polyline(P, c))
        scene.polylines["dividing"] = curves
    if "streamlines" in layers:
        lines = []
        for r in P.rectangles:
            tile = HarmonicTile.of(r)
            s = (np.arange(seeds) + 0.5) / seeds
            pts = [(t * tile.a, t * tile.b) for t in s]
            for sl in foliation_streamlines(tile, pts, kappa):
                lines.append(np.column_stack([tile.theta1 + sl.points[:, 0], tile.phi1 + sl.points[:, 1]]))
        scene.polylines["streamlines"] = lines
    return scene


def link_scene(R: LinkDiagram) -> PlotScene:
    scene = PlotScene(title="%d vertices" % len(R))
    scene.points["vertices"] = [(float(v.theta), float(v.phi)) for v in R.vertices]
    scene.polylines["edges"] = [_lifted_polyline(e.endpoints) for e in R.edges]
    return scene


STYLE = {
    "vertices": dict(marker="o", color="black", s=16),
    "giroux": dict(marker="x", color="tab:red", s=28),
    "framing": dict(color="tab:blue", lw=1.6),
    "edges": dict(color="black", lw=1.2),
    "dividing": dict(color="tab:green", lw=1.4, ls="--"),
    "streamlines": dict(color="0.45", lw=0.6),
}


def _covering_shifts(line: np.ndarray):
    """Integer translates of a lifted polyline that meet the unit square."""
    lo, hi = np.floor(line.min(axis=0)).astype(int), np.floor(line.max(axis=0)).astype(int)
    return [(-i, -j) for i in range(lo[0], hi[0] + 1) for j in range(lo[1], hi[1] + 1)]


def render_svg(scene: PlotScene, size: float = 5.0) -> str:
    fig, ax = plt.subplots(figsize=(size, size))
    ax.set_xlim(0, 1)
    ax.set_ylim(0, 1)
    ax.set_aspect("equal")
    ax.set_xlabel("theta (turns)")
    ax.set_ylabel("phi (turns)")
    if scene.title:
        ax.set_title(scene.title)
    cmap = plt.get_cmap("tab20")
    for i, x, y, w, h, z in scene.rects:
        for k, (dx, dy) in enumerate(SHIFTS):
            # opaque-ish fill so the upper rectangle of a crossing hides the lower one
            ax.add_patch(RectPatch((x + dx, y + dy), w, h, facecolor=cmap(i % 20), alpha=0.85,
                                   edgecolor="black", lw=0.8, zorder=2 + z,
                                   gid="rect_%d" % i if k == 0 else "rect_%d_%d" % (i, k)))
    top = 3 + len(scene.rects)
    for layer, lines in scene.polylines.items():
        for n, line in enumerate(lines):
            for dx, dy in _covering_shifts(line):
                ax.plot(line[:, 0] + dx, line[:, 1] + dy, zorder=top,
                        gid="%s_%d" % (layer, n), **STYLE.get(layer, {}))
            if layer == "framing":
                end = line[-1] + 0.12 * (line[-2] - line[-1])
                ax.plot([end[0], line[-1][0]], [end[1], line[-1][1]], lw=4, color="tab:blue",
                        zorder=top + 1, solid_capstyle="butt")
    for layer, pts in scene.points.items():
        if pts:
            arr = np.array(pts)
            ax.scatter(arr[:, 0], arr[:, 1], zorder=top + 2, gid=layer, **STYLE.get(layer, {}))
    buf = io.StringIO()
    fig.savefig(buf, format="svg")
    plt.close(fig)
    return buf.getvalue()


def torus_projection_svg(P, layers=LAYERS, **kw) -> str:
    if isinstance(P, LinkDiagram):
        return render_svg(link_scene(P))
    return render_svg(surface_scene(P, layers, **kw))
