"""Elementary moves of rectangular link diagrams and searches over them.

Stabilization replaces a vertex v0 by the other three corners of a small
square s having v0 as a corner, with the strips spanned by s empty of
vertices.  When s lies north-east or south-west of v0 the move is of type I
(tb_+ kept, tb_- drops by one); north-west or south-east gives type II.

Exchange moves follow the usual arc-presentation convention: two vertical
edges on circularly adjacent occupied meridians swap meridians when their
endpoint pairs do not interleave on the circle and share no endpoint;
likewise for horizontal edges.  Everything
depending on that definition goes through :func:`exchange_candidates`.
"""

from __future__ import annotations

import time
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .link import HORIZONTAL, VERTICAL, DiagramError, LinkDiagram
from .torus import TorusPoint, cyclic_diff

TYPE_I, TYPE_II = "I", "II"


# -- stabilization ------------------------------------------------------------

@dataclass(frozen=True)
class StabilizationSite:
    vertex: TorusPoint
    dtheta: Fraction          # signed side lengths of the square s
    dphi: Fraction

    @property
    def type(self) -> str:
        return TYPE_I if (self.dtheta > 0) == (self.dphi > 0) else TYPE_II

    @property
    def added(self) -> tuple[TorusPoint, TorusPoint, TorusPoint]:
        v = self.vertex
        return (v.shifted(0, self.dphi), v.shifted(self.dtheta, self.dphi), v.shifted(self.dtheta, 0))

    @property
    def square(self):
        from .surface import Rectangle
        v, w = self.vertex, self.vertex.shifted(self.dtheta, self.dphi)
        t1, t2 = (v.theta, w.theta) if self.dtheta > 0 else (w.theta, v.theta)
        p1, p2 = (v.phi, w.phi) if self.dphi > 0 else (w.phi, v.phi)
        return Rectangle.of(t1, t2, p1, p2)


def _between(x, a, step) -> bool:
    """x on the half-open arc (a, a + step] (step signed, |step| < 1)."""
    if step > 0:
        d = cyclic_diff(a, x)
        return 0 < d <= step
    d = cyclic_diff(x, a)
    return 0 < d <= -step


def _gap(values, x, sign) -> Fraction:
    others = [v for v in values if v != x]
    if not others:
        return Fraction(1, 2)
    if sign > 0:
        return min(cyclic_diff(x, v) for v in others)
    return min(cyclic_diff(v, x) for v in others)


def stabilization_site(R: LinkDiagram, v, quadrant: tuple[int, int]) -> StabilizationSite:
    """The site at ``v`` whose square lies in ``quadrant`` = (+-1, +-1),
    with sides one third of the gaps to the neighbouring occupied lines."""
    v = TorusPoint.of(*v)
    if v not in R:
        raise DiagramError("%s is not a vertex" % (v,))
    st, sp = quadrant
    if st not in (1, -1) or sp not in (1, -1):
        raise ValueError("quadrant entries must be +1 or -1")
    return StabilizationSite(v, st * _gap(R.thetas, v.theta, st) / 3,
                             sp * _gap(R.phis, v.phi, sp) / 3)


QUADRANTS = {TYPE_I: ((1, 1), (-1, -1)), TYPE_II: ((-1, 1), (1, -1))}


def stabilization_sites(R: LinkDiagram, kind: Optional[str] = None) -> list[StabilizationSite]:
    kinds = (TYPE_I, TYPE_II) if kind is None else (kind,)
    return [stabilization_site(R, v, q) for v in R.vertices for k in kinds for q in QUADRANTS[k]]


def stabilize(R: LinkDiagram, site: StabilizationSite) -> LinkDiagram:
    v = site.vertex
    if v not in R:
        raise DiagramError("%s is not a vertex" % (v,))
    if site.dtheta == 0 or site.dphi == 0 or abs(site.dtheta) >= 1 or abs(site.dphi) >= 1:
        raise DiagramError("square sides must be nonzero and shorter than a full turn")
    for w in R.vertices:
        if _between(w.theta, v.theta, site.dtheta) or _between(w.phi, v.phi, site.dphi):
            raise DiagramError("vertex %s blocks the stabilization square at %s" % (w, v))
    rest = [w for w in R.vertices if w != v]
    return LinkDiagram(rest + list(site.added))


@dataclass(frozen=True)
class DestabilizationSite:
    corner: TorusPoint                    # the vertex diagonal to v0
    removed: tuple[TorusPoint, TorusPoint, TorusPoint]
    restored: TorusPoint                  # v0
    type: str


def _successors(values) -> dict:
    """Cyclic successor of each distinct value."""
    vals = sorted(set(values))
    return dict(zip(vals, vals[1:] + vals[:1]))


def _empty_arc(succ: dict, a, b) -> Optional[int]:
    """Direction (+1 from a to b, -1) of an arc between the occupied lines
    a and b with no occupied line strictly inside, or None."""
    if succ[a] == b:
        return 1
    if succ[b] == a:
        return -1
    return None


def destabilization_sites(R: LinkDiagram) -> list[DestabilizationSite]:
    out = []
    st_succ, sp_succ = _successors(R.thetas), _successors(R.phis)
    for c in R.vertices:
        cv, ch = R.vertical_partner(c), R.horizontal_partner(c)
        v0 = TorusPoint(ch.theta, cv.phi)
        if v0 in R:
            continue
        st = _empty_arc(st_succ, v0.theta, c.theta)
        sp = _empty_arc(sp_succ, v0.phi, c.phi)
        if st is None or sp is None:
            continue
        out.append(DestabilizationSite(c, (ch, c, cv), v0, TYPE_I if st == sp else TYPE_II))
    return out


def destabilize(R: LinkDiagram, site=None) -> LinkDiagram:
    """Inverse of :func:`stabilize`.  ``site`` may be a
    :class:`DestabilizationSite`, the square (a Rectangle) or its corner
    diagonal to v0; with None the first available site is used."""
    sites = destabilization_sites(R)
    if site is None:
        if not sites:
            raise DiagramError("no destabilization available")
        chosen = sites[0]
    elif isinstance(site, DestabilizationSite):
        chosen = site if site in sites else None
    elif isinstance(site, StabilizationSite):
        chosen = next((s for s in sites if s.restored == site.vertex
                       and set(s.removed) == set(site.added)), None)
    elif hasattr(site, "vertices"):
        corners = set(site.vertices)
        chosen = next((s for s in sites if set(s.removed) | {s.restored} == corners), None)
    else:
        c = TorusPoint.of(*site)
        chosen = next((s for s in sites if s.corner == c), None)
    if chosen is None:
        raise DiagramError("destabilization pattern not found at %s" % (site,))
    removed = set(chosen.removed)
    return LinkDiagram([w for w in R.vertices if w not in removed] + [chosen.restored])


# -- exchange moves -----------------------------------------------------------

@dataclass(frozen=True)
class ExchangeSite:
    kind: str                 # vertical: swap two meridians; horizontal: two longitudes
    first: Fraction
    second: Fraction


def _interleaved(a1, b1, a2, b2) -> bool:
    span = cyclic_diff(a1, b1)
    inside = [0 < cyclic_diff(a1, x) < span for x in (a2, b2)]
    return inside[0] != inside[1]


def exchange_candidates(R: LinkDiagram) -> list[ExchangeSite]:
    out = []
    for kind, lines in ((VERTICAL, R.thetas), (HORIZONTAL, R.phis)):
        m = len(lines)
        if m < 3:
            continue          # two lines are a torus translation apart
        for i in range(m):
            x, y = lines[i], lines[(i + 1) % m]
            ends = []
            for line in (x, y):
                if kind == VERTICAL:
                    ends.append(sorted(v.phi for v in R.vertices if v.theta == line))
                else:
                    ends.append(sorted(v.theta for v in R.vertices if v.phi == line))
            (a1, b1), (a2, b2) = ends
            if {a1, b1} & {a2, b2} or _interleaved(a1, b1, a2, b2):
                continue
            out.append(ExchangeSite(kind, x, y))
    return out


def apply_exchange(R: LinkDiagram, site: ExchangeSite) -> LinkDiagram:
    if site not in exchange_candidates(R):
        raise DiagramError("illegal exchange: %s lines %s and %s" % (site.kind, site.first, site.second))
    swap = {site.first: site.second, site.second: site.first}
    if site.kind == VERTICAL:
        moved = [TorusPoint(swap.get(v.theta, v.theta), v.phi) for v in R.vertices]
    else:
        moved = [TorusPoint(v.theta, swap.get(v.phi, v.phi)) for v in R.vertices]
    return LinkDiagram(moved)


# -- canonical forms and searches --------------------------------------------

@dataclass(frozen=True)
class CanonicalForm:
    """Vertices as (column, row) ranks, minimized over cyclic shifts."""

    n: int
    cells: tuple[tuple[int, int], ...]

    def diagram(self) -> LinkDiagram:
        n = self.n
        return LinkDiagram((Fraction(i, n), Fraction(j, n)) for i, j in self.cells)


def canonical_form(R: LinkDiagram) -> CanonicalForm:
    if len(R) == 0:
        return CanonicalForm(0, ())
    ti = {t: i for i, t in enumerate(R.thetas)}
    pj = {p: j for j, p in enumerate(R.phis)}
    n = len(R.thetas)
    cells = [(ti[v.theta], pj[v.phi]) for v in R.vertices]
    best = None
    for s in range(n):
        for t in range(n):
            cand = tuple(sorted(((i - s) % n, (j - t) % n) for i, j in cells))
            if best is None or cand < best:
                best = cand
    return CanonicalForm(n, best)


@dataclass(frozen=True)
class ExploreResult:
    visited: int
    is_rigid: bool
    complete: bool            # the whole class was enumerated within limits
    target_found: Optional[bool] = None
    target_depth: Optional[int] = None

    @property
    def status(self) -> str:
        if self.target_found:
            return "connected"
        return "exhausted" if self.complete else "inconclusive"


def explore_exchange_class(R: LinkDiagram, max_nodes: int = 10000,
                           max_seconds: float = 30.0, target: Optional[LinkDiagram] = None) -> ExploreResult:
    """Breadth-first search over exchange moves modulo torus translation."""
    start = time.monotonic()
    root = canonical_form(R)
    goal = canonical_form(target) if target is not None else None
    seen = {root: 0}
    queue = deque([(R, 0)])
    rigid = not exchange_candidates(R)
    if goal == root:
        return ExploreResult(1, rigid, rigid, True, 0)
    while queue:
        if len(seen) >= max_nodes or time.monotonic() - start > max_seconds:
            return ExploreResult(len(seen), rigid, False, False if goal else None)
        D, depth = queue.popleft()
        for site in exchange_candidates(D):
            E = apply_exchange(D, site)
            key = canonical_form(E)
            if key in seen:
                continue
            seen[key] = depth + 1
            if key == goal:
                return ExploreResult(len(seen), rigid, False, True, depth + 1)
            queue.append((E, depth + 1))
    return ExploreResult(len(seen), rigid, True, False if goal else None)


# -- traces -------------------------------------------------------------------

@dataclass(frozen=True)
class MoveStep:
    kind: str                  # stabilize | destabilize | exchange
    site: object


def replay(R: LinkDiagram, steps: Sequence[MoveStep]) -> list[LinkDiagram]:
    out = [R]
    for step in steps:
        D = out[-1]
        if step.kind == "stabilize":
            D = stabilize(D, step.site)
        elif step.kind == "destabilize":
            D = destabilize(D, step.site)
        elif step.kind == "exchange":
            D = apply_exchange(D, step.site)
        else:
            raise ValueError("unknown move kind %r" % step.kind)
        out.append(D)
    return out


def carry_orientation(signs, move) -> dict:
    """Orientation of the result of ``move`` induced by ``signs``.

    Stabilization: the new corner on v0's meridian and the one on v0's
    longitude keep v0's sign, the diagonal corner gets the opposite one.
    Exchange: vertices keep their signs as their lines are swapped."""
    out = dict(signs)
    if isinstance(move, StabilizationSite):
        s = out.pop(move.vertex)
        c1, c2, c3 = move.added
        out.update({c1: s, c2: -s, c3: s})
        return out
    if isinstance(move, DestabilizationSite):
        for w in move.removed:
            s = out.pop(w)
        out[move.restored] = s
        return out
    if isinstance(move, ExchangeSite):
        swap = {move.first: move.second, move.second: move.first}
        if move.kind == VERTICAL:
            return {TorusPoint(swap.get(v.theta, v.theta), v.phi): s for v, s in signs.items()}
        return {TorusPoint(v.theta, swap.get(v.phi, v.phi)): s for v, s in signs.items()}
    raise TypeError("unknown move %r" % (move,))
