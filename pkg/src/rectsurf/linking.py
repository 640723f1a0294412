"""Crossing-based invariants of the planar picture of a link diagram.

The torus is cut along one meridian and one longitude, edges are drawn as
straight segments inside the resulting square, and vertical segments pass
over horizontal ones.  Horizontal edges are traversed from the negative to
the positive vertex and vertical edges from the positive to the negative
one, which matches the orientation of the associated link in S^3.
"""

from __future__ import annotations

import math

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from .link import (HORIZONTAL, VERTICAL, DiagramError, LinkDiagram, Orientation,
                   check_orientation, connected_components, default_orientation)
from .torus import coord, min_cyclic_gap


@dataclass(frozen=True)
class Segment:
    kind: str
    fixed: Fraction            # x of a vertical segment, y of a horizontal one
    start: Fraction            # running coordinate at the tail
    end: Fraction              # running coordinate at the head
    group: int = 0

    @property
    def direction(self) -> int:
        return 1 if self.end > self.start else -1

    def spans(self, t: Fraction) -> bool:
        lo, hi = sorted((self.start, self.end))
        return lo < t < hi


@dataclass(frozen=True)
class Crossing:
    over: Segment
    under: Segment
    sign: int


def crossing_sign(over: Segment, under: Segment) -> int:
    """+1 iff (over direction, under direction) is a positive frame."""
    # over is vertical: (0, oy); under is horizontal: (ux, 0)
    return -over.direction * under.direction


class PlanarDrawing:
    """Planar picture of an oriented diagram for a given cut."""

    def __init__(self, R: LinkDiagram, orientation: Optional[Orientation] = None,
                 cut=None, groups: Optional[dict] = None):
        signs = default_orientation(R) if orientation is None else orientation
        check_orientation(R, signs)
        cut = default_cut(R) if cut is None else (coord(cut[0]), coord(cut[1]))
        if cut[0] in R.thetas or cut[1] in R.phis:
            raise DiagramError("cut %s hits a vertex line" % (cut,))
        self.cut = cut
        ct, cp = cut
        x = lambda th: (th - ct) % 1
        y = lambda ph: (ph - cp) % 1
        groups = groups or {}
        verticals, horizontals = [], []
        for e in R.edges:
            g = groups.get(e.a, 0)
            if groups.get(e.b, 0) != g:
                raise DiagramError("an edge joins two different groups")
            if e.kind == VERTICAL:
                tail, head = (e.a, e.b) if signs[e.a] > 0 else (e.b, e.a)
                verticals.append(Segment(VERTICAL, x(e.a.theta), y(tail.phi), y(head.phi), g))
            else:
                tail, head = (e.a, e.b) if signs[e.a] < 0 else (e.b, e.a)
                horizontals.append(Segment(HORIZONTAL, y(e.a.phi), x(tail.theta), x(head.theta), g))
        self.segments = tuple(verticals + horizontals)
        # compare integer ranks instead of fractions in the quadratic loop
        xr = {t: i for i, t in enumerate(sorted({v.fixed for v in verticals}
                                                | {c for h in horizontals for c in (h.start, h.end)}))}
        yr = {t: i for i, t in enumerate(sorted({h.fixed for h in horizontals}
                                                | {c for v in verticals for c in (v.start, v.end)}))}
        hs = [(h, yr[h.fixed], *sorted((xr[h.start], xr[h.end]))) for h in horizontals]
        found = []
        for v in verticals:
            vx = xr[v.fixed]
            lo, hi = sorted((yr[v.start], yr[v.end]))
            for h, hy, hlo, hhi in hs:
                if hlo < vx < hhi and lo < hy < hi:
                    found.append(Crossing(v, h, crossing_sign(v, h)))
        self.crossings = tuple(found)

    def writhe(self) -> int:
        return sum(c.sign for c in self.crossings)

    def inter_group_sum(self, g1: int, g2: int) -> int:
        return sum(c.sign for c in self.crossings
                   if {c.over.group, c.under.group} == {g1, g2})


def default_cut(R: LinkDiagram) -> tuple[Fraction, Fraction]:
    return (_gap_point(R.thetas), _gap_point(R.phis))


def _gap_point(values) -> Fraction:
    vals = sorted(values)
    if not vals:
        return Fraction(0)
    if len(vals) == 1:
        return coord(vals[0] + Fraction(1, 2))
    # midpoint of the widest gap; the wrap-around gap counts too
    best = (vals[0] + 1 - vals[-1], vals[-1])
    for a, b in zip(vals, vals[1:]):
        if b - a > best[0]:
            best = (b - a, a)
    return coord(best[1] + best[0] / 2)


def writhe(R: LinkDiagram, orientation: Optional[Orientation] = None, cut=None) -> int:
    return PlanarDrawing(R, orientation, cut).writhe()


def linking_number(R: LinkDiagram, orientation: Optional[Orientation] = None,
                   split: Iterable = (), cut=None) -> int:
    """Linking number between the sublink ``split`` (a vertex set or a list
    of component diagrams) and the rest of ``R``."""
    group_a = set()
    for item in split:
        if isinstance(item, LinkDiagram):
            group_a.update(item.vertices)
        else:
            group_a.add(item)
    if not group_a or group_a >= set(R.vertices) or not group_a <= set(R.vertices):
        raise DiagramError("split must be a nonempty proper subset of the vertices")
    for K in connected_components(R):
        inside = [v in group_a for v in K.vertices]
        if any(inside) and not all(inside):
            raise DiagramError("split must be a union of components")
    groups = {v: (1 if v in group_a else 2) for v in R.vertices}
    total = PlanarDrawing(R, orientation, cut, groups).inter_group_sum(1, 2)
    assert total % 2 == 0, "odd inter-group crossing sum"
    return total // 2


# -- Thurston-Bennequin numbers ---------------------------------------------

@dataclass(frozen=True)
class ShiftedDiagram:
    base: LinkDiagram
    direction: str            # "ne" for (1,1), "nw" for (-1,1)
    epsilon: Fraction

    def move(self, v):
        dt = self.epsilon if self.direction == "ne" else -self.epsilon
        return v.shifted(dt, self.epsilon)

    @property
    def shifted(self) -> LinkDiagram:
        return LinkDiagram(self.move(v) for v in self.base.vertices)

    def union(self) -> LinkDiagram:
        return LinkDiagram(self.base.vertices + self.shifted.vertices)


def shift_epsilon(R: LinkDiagram) -> Fraction:
    """Half the minimal cyclic gap of the merged theta and phi values."""
    vals = set(R.thetas) | set(R.phis)
    if len(vals) < 2:
        return Fraction(1, 4)
    return min_cyclic_gap(vals) / 2


def _segments(R: LinkDiagram, signs, x, y, move=None):
    """(vertical, horizontal) segments as tuples (fixed, lo, hi, direction)."""
    vs, hs = [], []
    for e in R.edges:
        a, b = (e.a, e.b) if move is None else (move(e.a), move(e.b))
        if e.kind == VERTICAL:
            tail, head = (a, b) if signs[e.a] > 0 else (b, a)
            t, h = y(tail.phi), y(head.phi)
            vs.append((x(a.theta), min(t, h), max(t, h), 1 if h > t else -1))
        else:
            tail, head = (a, b) if signs[e.a] < 0 else (b, a)
            t, h = x(tail.theta), x(head.theta)
            hs.append((y(a.phi), min(t, h), max(t, h), 1 if h > t else -1))
    return vs, hs


def _cross_sum(vs, hs) -> int:
    total = 0
    for vx, vlo, vhi, vd in vs:
        for hy, hlo, hhi, hd in hs:
            if hlo < vx < hhi and vlo < hy < vhi:
                total -= vd * hd
    return total


def _ranks(values, cut) -> dict:
    """Position of each value in the order read off from the cut, computed
    on integer numerators over a common denominator."""
    den = math.lcm(cut.denominator, *(v.denominator for v in values))
    c = cut.numerator * (den // cut.denominator)
    key = {v: (v.numerator * (den // v.denominator) - c) % den for v in values}
    return {v: i for i, v in enumerate(sorted(key, key=key.__getitem__))}


def _shift_lk(R: LinkDiagram, direction: str, orientation, cut) -> int:
    """lk(R, shifted copy of R), computed straight from the segments of the
    two copies (same result as :func:`linking_number` on the union)."""
    if len(R) == 0:
        raise DiagramError("Thurston-Bennequin numbers of the empty diagram are undefined")
    signs = default_orientation(R) if orientation is None else orientation
    check_orientation(R, signs)
    eps = shift_epsilon(R)
    dt = eps if direction == "ne" else -eps
    moved_t = {t: coord(t + dt) for t in set(R.thetas)}
    moved_p = {p: coord(p + eps) for p in set(R.phis)}
    thetas = set(moved_t) | set(moved_t.values())
    phis = set(moved_p) | set(moved_p.values())
    if cut is None:
        cut = (_gap_point(thetas), _gap_point(phis))
    else:
        cut = (coord(cut[0]), coord(cut[1]))
        if cut[0] in thetas or cut[1] in phis:
            raise DiagramError("cut %s hits a vertex line" % (cut,))
    ct, cp = cut
    # only the order of coordinates in the cut square matters: use ranks
    rt, rp = _ranks(thetas, ct), _ranks(phis, cp)
    x1 = {t: rt[m] for t, m in moved_t.items()}
    y1 = {p: rp[m] for p, m in moved_p.items()}
    v1, h1 = _segments(R, signs, rt.__getitem__, rp.__getitem__)
    v2, h2 = _segments(R, signs, x1.__getitem__, y1.__getitem__)
    total = _cross_sum(v1, h2) + _cross_sum(v2, h1)
    assert total % 2 == 0, "odd inter-group crossing sum"
    return total // 2


def shift_lk_reference(R: LinkDiagram, direction: str, orientation=None, cut=None) -> int:
    """The same number via the general linking-number routine on the union."""
    signs = default_orientation(R) if orientation is None else orientation
    sd = ShiftedDiagram(R, direction, shift_epsilon(R))
    both = dict(signs)
    both.update({sd.move(v): s for v, s in signs.items()})
    return linking_number(sd.union(), both, R.vertices, cut)


def tb_plus(R: LinkDiagram, orientation: Optional[Orientation] = None, cut=None) -> int:
    return _shift_lk(R, "ne", orientation, cut)


def tb_minus(R: LinkDiagram, orientation: Optional[Orientation] = None, cut=None) -> int:
    return -_shift_lk(R, "nw", orientation, cut)


@dataclass(frozen=True)
class TBReport:
    tb_plus: int
    tb_minus: int
    size: int
    components: tuple          # ((size, tb_plus, tb_minus), ...)

    def as_dict(self) -> dict:
        return {
            "tb_plus": self.tb_plus,
            "tb_minus": self.tb_minus,
            "vertices": self.size,
            "components": [
                {"vertices": n, "tb_plus": p, "tb_minus": m}
                for n, p, m in self.components],
        }


def tb_report(R: LinkDiagram, orientation: Optional[Orientation] = None) -> TBReport:
    comps = tuple((len(K), tb_plus(K), tb_minus(K)) for K in connected_components(R))
    return TBReport(tb_plus(R, orientation), tb_minus(R, orientation), len(R), comps)
