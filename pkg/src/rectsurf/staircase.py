"""Staircase approximation of closed polylines on the torus by rectangular
diagrams of knots."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .link import DiagramError, LinkDiagram
from .torus import TorusPoint, coord


@dataclass(frozen=True)
class Staircase:
    diagram: LinkDiagram
    cycle: tuple[TorusPoint, ...]                 # S_0, H_0, S_1, H_1, ...
    steps: tuple[tuple[Fraction, Fraction], ...]  # lifted displacement of each drawn edge

    @property
    def homology(self) -> tuple[int, int]:
        dx = sum(s[0] for s in self.steps)
        dy = sum(s[1] for s in self.steps)
        assert dx.denominator == 1 and dy.denominator == 1
        return int(dx), int(dy)


def _exact(x, denominator: int) -> Fraction:
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    return Fraction(round(float(x) * denominator), denominator)


def _resolve(values: list[Fraction], forbidden: set, delta: Fraction) -> list[Fraction]:
    """Nudge values by multiples of delta until they are pairwise distinct
    mod 1 and avoid the forbidden circle values."""
    used = set(forbidden)
    out = []
    for x in values:
        while coord(x) in used:
            x += delta
        used.add(coord(x))
        out.append(x)
    return out


def approximate_staircase(polyline: Sequence, winding=(0, 0), resolution: int = 4,
                          forbidden_thetas: Iterable = (), forbidden_phis: Iterable = (),
                          denominator: int = 10 ** 6) -> Staircase:
    """Staircase diagram following a closed polyline.

    ``polyline`` lists lifted points (x, y) in turns; the closing segment
    runs from the last point to the first one translated by ``winding``.
    Each segment is split into ``resolution`` steps and every step from
    S_k to S_{k+1} is drawn as a horizontal edge to H_k = (x_{k+1}, y_k)
    followed by a vertical edge to S_{k+1}.  Float input is rounded to
    multiples of 1/denominator; coincident lines are separated by tiny
    shifts."""
    pts = [(_exact(x, denominator), _exact(y, denominator)) for x, y in polyline]
    p, q = (int(w) for w in winding)
    if not pts:
        raise DiagramError("empty polyline")
    if resolution < 1:
        raise ValueError("resolution must be positive")
    closing = (pts[0][0] + p, pts[0][1] + q)
    ring = pts + [closing]
    for a, b in zip(ring, ring[1:]):
        if a == b:
            raise DiagramError("polyline has a repeated point %s" % (a,))
        if a[0] == b[0] or a[1] == b[1]:
            raise DiagramError("polyline segment %s -> %s is axis-parallel" % (a, b))
    samples = []
    for a, b in zip(ring, ring[1:]):
        for k in range(resolution):
            t = Fraction(k, resolution)
            samples.append((a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1])))
    n = len(samples)
    if n == 1:
        raise DiagramError("a single step cannot form a diagram; raise the resolution")
    delta = Fraction(1, 64 * denominator * max(n, 1))
    xs = _resolve([s[0] for s in samples], {coord(t) for t in forbidden_thetas}, delta)
    ys = _resolve([s[1] for s in samples], {coord(t) for t in forbidden_phis}, delta)
    cycle, steps = [], []
    for k in range(n):
        x0, y0 = xs[k], ys[k]
        x1, y1 = (xs[k + 1], ys[k + 1]) if k + 1 < n else (xs[0] + p, ys[0] + q)
        cycle += [TorusPoint.of(x0, y0), TorusPoint.of(x1, y0)]
        steps += [(x1 - x0, Fraction(0)), (Fraction(0), y1 - y0)]
    return Staircase(LinkDiagram(cycle), tuple(cycle), tuple(steps))
