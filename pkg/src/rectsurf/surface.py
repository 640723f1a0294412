"""Rectangular diagrams of surfaces.

A rectangle ``[t1, t2] x [p1, p2]`` has corners BL = (t1, p1), BR = (t2, p1),
TL = (t1, p2) and TR = (t2, p2).  Its tile is a disc whose four sides are
the arcs over the corners and whose four vertices are the binding-circle
points t1, t2 (on tau = 1) and p1, p2 (on tau = 0).
"""

from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .framing import Framing, framing_value, relative_tb
from .link import DiagramError, LinkDiagram, connected_components
from .linking import tb_minus, tb_plus
from .torus import Arc, TorusPoint, arc_contains, arc_intersection, arcs_meet, coord

BL, BR, TL, TR = "BL", "BR", "TL", "TR"
CORNER_NAMES = (BL, BR, TL, TR)
# the dividing arc of a tile runs BL -> TR; Giroux edges sit over TL and BR
XI_MINUS_CORNERS = (BL, TR)
XI_PLUS_CORNERS = (TL, BR)


@dataclass(frozen=True)
class Rectangle:
    theta: Arc
    phi: Arc

    @classmethod
    def of(cls, t1, t2, p1, p2) -> "Rectangle":
        return cls(Arc(t1, t2), Arc(p1, p2))

    def corner(self, name: str) -> TorusPoint:
        t = self.theta.start if name in (BL, TL) else self.theta.end
        p = self.phi.start if name in (BL, BR) else self.phi.end
        return TorusPoint(t, p)

    @property
    def corners(self) -> dict[str, TorusPoint]:
        return {n: self.corner(n) for n in CORNER_NAMES}

    @property
    def vertices(self) -> tuple[TorusPoint, ...]:
        return tuple(self.corner(n) for n in CORNER_NAMES)

    def contains(self, v: TorusPoint, closed: bool = True) -> bool:
        return arc_contains(self.theta, v.theta, closed) and arc_contains(self.phi, v.phi, closed)

    def __str__(self):
        return "%s x %s" % (self.theta, self.phi)


@dataclass(frozen=True)
class PairClass:
    """``kind`` is one of disjoint, shared_vertices, crossing, incompatible.

    For crossings ``over`` is 0 or 1: the rectangle whose theta-span sits
    inside the other's (it is drawn passing over)."""

    kind: str
    shared: tuple[TorusPoint, ...] = ()
    over: Optional[int] = None
    reason: str = ""

    @property
    def compatible(self) -> bool:
        return self.kind != "incompatible"


def _nested(r1: Rectangle, r2: Rectangle) -> bool:
    # [t1,t2] inside the open (t3,t4), and [p3,p4] inside the open (p1,p2)
    return (arc_contains(r2.theta, r1.theta.start, False)
            and arc_contains(r2.theta, r1.theta.end, False)
            and r2.theta.offset(r1.theta.start) < r2.theta.offset(r1.theta.end)
            and arc_contains(r1.phi, r2.phi.start, False)
            and arc_contains(r1.phi, r2.phi.end, False)
            and r1.phi.offset(r2.phi.start) < r1.phi.offset(r2.phi.end))


def classify_pair(r1: Rectangle, r2: Rectangle) -> PairClass:
    if not (arcs_meet(r1.theta, r2.theta) and arcs_meet(r1.phi, r2.phi)):
        return PairClass("disjoint")
    it = arc_intersection(r1.theta, r2.theta)
    ip = arc_intersection(r1.phi, r2.phi)
    if not it or not ip:
        return PairClass("disjoint")
    t_arcs = [x for x in it if isinstance(x, Arc)]
    p_arcs = [x for x in ip if isinstance(x, Arc)]
    if not t_arcs and not p_arcs:
        # a finite set of points; each is an endpoint of both spans
        shared = tuple(sorted(TorusPoint(t, p) for t in it for p in ip))
        return PairClass("shared_vertices", shared)
    if len(it) == 1 and len(ip) == 1 and t_arcs and p_arcs:
        box = Rectangle(t_arcs[0], p_arcs[0])
        hit = [v for v in r1.vertices + r2.vertices if box.contains(v)]
        if not hit:
            if _nested(r1, r2):
                return PairClass("crossing", over=0)
            if _nested(r2, r1):
                return PairClass("crossing", over=1)
            raise AssertionError("overlap free of vertices but not nested")
        return PairClass("incompatible", reason="overlap contains the vertex %s" % (hit[0],))
    if t_arcs and p_arcs:
        return PairClass("incompatible", reason="intersection has several pieces")
    return PairClass("incompatible", reason="rectangles share part of a side")


@dataclass
class SurfaceDiagram:
    """A validated collection of pairwise compatible rectangles.  Build it
    with :func:`validate_surface_diagram`."""

    rectangles: tuple[Rectangle, ...]
    # corner point -> list of (rectangle index, corner name)
    incidence: dict = field(repr=False, default_factory=dict)
    crossings: tuple = field(repr=False, default=())

    def __len__(self):
        return len(self.rectangles)

    @property
    def free_vertices(self) -> dict[TorusPoint, tuple[int, str]]:
        return {v: inc[0] for v, inc in self.incidence.items() if len(inc) == 1}

    @property
    def shared_vertices(self) -> dict[TorusPoint, tuple]:
        return {v: tuple(inc) for v, inc in self.incidence.items() if len(inc) == 2}

    def adjacency(self) -> dict[int, set[int]]:
        adj: dict[int, set[int]] = {i: set() for i in range(len(self.rectangles))}
        for inc in self.shared_vertices.values():
            (i, _), (j, _) = inc
            adj[i].add(j)
            adj[j].add(i)
        return adj


def validate_surface_diagram(rects: Iterable) -> SurfaceDiagram:
    rects = tuple(r if isinstance(r, Rectangle) else Rectangle.of(*r) for r in rects)
    crossings = []
    for (i, r1), (j, r2) in itertools.combinations(enumerate(rects), 2):
        pc = classify_pair(r1, r2)
        if not pc.compatible:
            raise DiagramError("rectangles %d (%s) and %d (%s) are incompatible: %s"
                               % (i, r1, j, r2, pc.reason))
        if pc.kind == "crossing":
            crossings.append((i, j) if pc.over == 0 else (j, i))
    incidence: dict = defaultdict(list)
    for i, r in enumerate(rects):
        for name, v in r.corners.items():
            incidence[v].append((i, name))
    for v, inc in incidence.items():
        # pairwise compatibility already forces this
        assert len(inc) <= 2, "vertex %s has %d rectangles" % (v, len(inc))
    free = [v for v, inc in incidence.items() if len(inc) == 1]
    for attr, name in (("theta", "meridian theta"), ("phi", "longitude phi")):
        count: dict = defaultdict(int)
        for v in free:
            count[getattr(v, attr)] += 1
        for value, n in sorted(count.items()):
            if n > 2:
                raise DiagramError("%s=%s contains %d free vertices (at most 2 allowed)"
                                   % (name, value, n))
    return SurfaceDiagram(rects, dict(incidence), tuple(crossings))


def boundary(P: SurfaceDiagram) -> LinkDiagram:
    try:
        return LinkDiagram(P.free_vertices)
    except DiagramError as exc:        # the parity argument rules this out
        raise AssertionError("free vertices violate the 0-or-2 rule: %s" % exc)


@dataclass(frozen=True)
class BoundaryFraming:
    diagram: LinkDiagram
    framing: Framing
    roles: dict                      # free vertex -> corner name in its rectangle


def boundary_framing(P: SurfaceDiagram) -> BoundaryFraming:
    """Framing of the boundary induced by the surface.

    A free vertex at the start of its rectangle's theta-span (BL, TL) is the
    smaller end of its horizontal boundary edge; one at the start of the
    phi-span (BL, BR) is the smaller end of its vertical boundary edge."""
    R = boundary(P)
    if len(R) == 0:
        raise DiagramError("the surface has no boundary")
    roles = {v: name for v, (_, name) in P.free_vertices.items()}
    greater = {}
    for e in R.edges:
        if e.kind == "horizontal":
            small = [v for v in e.endpoints if roles[v] in (BL, TL)]
        else:
            small = [v for v in e.endpoints if roles[v] in (BL, BR)]
        if len(small) != 1:
            raise DiagramError("inconsistent corner roles on boundary edge %s-%s (%s, %s)"
                               % (e.a, e.b, roles[e.a], roles[e.b]))
        greater[e] = e.other(small[0])
    return BoundaryFraming(R, Framing(greater), roles)


def orient_surface(P: SurfaceDiagram) -> list[dict[int, int]]:
    """All orientations (a sign per rectangle, opposite across every shared
    vertex); empty iff the surface is non-orientable."""
    adj = P.adjacency()
    colour: dict[int, int] = {}
    comps = []
    for root in range(len(P.rectangles)):
        if root in colour:
            continue
        colour[root] = 1
        comp, stack = [root], [root]
        while stack:
            i = stack.pop()
            for j in adj[i]:
                if j not in colour:
                    colour[j] = -colour[i]
                    comp.append(j)
                    stack.append(j)
                elif colour[j] == colour[i]:
                    return []
        comps.append(comp)
    out = []
    for flips in itertools.product((1, -1), repeat=len(comps)):
        signs = {}
        for comp, s in zip(comps, flips):
            signs.update({i: s * colour[i] for i in comp})
        out.append(signs)
    return out


def surface_components(P: SurfaceDiagram) -> list[list[int]]:
    """Rectangle indices of each connected component of the surface.

    Tiles meeting at a binding point always also meet along a chain of
    shared corner arcs, so corner-sharing adjacency suffices."""
    adj = P.adjacency()
    seen: set[int] = set()
    out = []
    for root in range(len(P.rectangles)):
        if root in seen:
            continue
        comp, stack = [], [root]
        seen.add(root)
        while stack:
            i = stack.pop()
            comp.append(i)
            for j in adj[i]:
                if j not in seen:
                    seen.add(j)
                    stack.append(j)
        out.append(sorted(comp))
    return out


@dataclass(frozen=True)
class CellComplex:
    theta_points: tuple[Fraction, ...]      # 0-cells on the circle tau = 1
    phi_points: tuple[Fraction, ...]        # 0-cells on the circle tau = 0
    arcs: tuple[TorusPoint, ...]            # 1-cells: arc over each corner
    tiles: tuple[tuple[TorusPoint, ...], ...]   # 2-cells: BL, BR, TR, TL arcs

    @property
    def V(self) -> int:
        return len(self.theta_points) + len(self.phi_points)

    @property
    def E(self) -> int:
        return len(self.arcs)

    @property
    def F(self) -> int:
        return len(self.tiles)

    @property
    def euler_characteristic(self) -> int:
        return self.V - self.E + self.F


def cell_complex(P: SurfaceDiagram, subset: Optional[Sequence[int]] = None) -> CellComplex:
    idx = range(len(P.rectangles)) if subset is None else subset
    rects = [P.rectangles[i] for i in idx]
    arcs = sorted({v for r in rects for v in r.vertices})
    return CellComplex(
        tuple(sorted({v.theta for v in arcs})),
        tuple(sorted({v.phi for v in arcs})),
        tuple(arcs),
        tuple(tuple(r.corner(n) for n in (BL, BR, TR, TL)) for r in rects))


@dataclass(frozen=True)
class BoundaryComponent:
    vertices: tuple[TorusPoint, ...]
    surface_component: int
    tb_plus: int
    tb_minus: int
    framing: Optional[int]                 # lk(K, K^F); None when non-generic
    rel_tb_plus: int
    rel_tb_minus: int

    @property
    def length(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class ComponentTopology:
    rectangles: tuple[int, ...]
    euler_characteristic: int
    orientable: bool
    boundary_components: int

    @property
    def genus(self) -> Optional[int]:
        if not self.orientable:
            return None
        return (2 - self.euler_characteristic - self.boundary_components) // 2

    @property
    def crosscaps(self) -> Optional[int]:
        if self.orientable:
            return None
        return 2 - self.euler_characteristic - self.boundary_components

    @property
    def name(self) -> str:
        b = self.boundary_components
        if self.orientable:
            g = self.genus
            base = {(0, 0): "sphere", (0, 1): "disc", (0, 2): "annulus",
                    (1, 0): "torus"}.get((g, b))
            return base or ("orientable genus %d with %d boundary components" % (g, b))
        c = self.crosscaps
        base = {(1, 0): "projective plane", (1, 1): "Moebius band",
                (2, 0): "Klein bottle"}.get((c, b))
        return base or ("non-orientable with %d crosscaps and %d boundary components" % (c, b))


@dataclass(frozen=True)
class DividingCurve:
    rectangles: tuple[int, ...]             # in traversal order
    nodes: tuple[TorusPoint, ...]           # BL/TR corner arcs visited
    closed: bool


@dataclass(frozen=True)
class GirouxData:
    giroux_edges: tuple[TorusPoint, ...]    # TL/BR corner arcs (0-arcs)
    minus_one_arcs: tuple[TorusPoint, ...]  # BL/TR corner arcs
    dividing: tuple[DividingCurve, ...]
    degrees: dict


def giroux_and_dividing(P: SurfaceDiagram) -> GirouxData:
    giroux, minus = set(), set()
    for r in P.rectangles:
        giroux.update((r.corner(TL), r.corner(BR)))
        minus.update((r.corner(BL), r.corner(TR)))
    assert not giroux & minus
    nbrs: dict = defaultdict(list)          # node -> [(rect, other node)]
    for i, r in enumerate(P.rectangles):
        a, b = r.corner(BL), r.corner(TR)
        nbrs[a].append((i, b))
        nbrs[b].append((i, a))
    degrees = {v: len(n) for v, n in nbrs.items()}
    used: set[int] = set()
    curves = []
    # paths first (start at degree-1 nodes), then the remaining cycles
    starts = sorted(v for v, d in degrees.items() if d == 1) + sorted(nbrs)
    for s in starts:
        if all(i in used for i, _ in nbrs[s]):
            continue
        rects, nodes, v = [], [s], s
        while True:
            step = next(((i, w) for i, w in nbrs[v] if i not in used), None)
            if step is None:
                break
            used.add(step[0])
            rects.append(step[0])
            v = step[1]
            nodes.append(v)
        closed = nodes[0] == nodes[-1] and degrees[s] == 2
        curves.append(DividingCurve(tuple(rects), tuple(nodes[:-1] if closed else nodes), closed))
    return GirouxData(tuple(sorted(giroux)), tuple(sorted(minus)), tuple(curves), degrees)


@dataclass(frozen=True)
class SurfaceReport:
    euler_characteristic: int
    orientable: bool
    components: tuple[ComponentTopology, ...]
    boundary: tuple[BoundaryComponent, ...]
    giroux: GirouxData
    complex: CellComplex

    @property
    def closed(self) -> bool:
        return not self.boundary

    def as_dict(self) -> dict:
        from .io import report_to_json
        return report_to_json(self)


def relative_tb_closed_form(P: SurfaceDiagram, K: LinkDiagram) -> tuple[int, int]:
    """tb_+(K; surface) = -#(free BL/TR on K)/2, tb_-(K; surface) = -#(free TL/BR on K)/2."""
    free = P.free_vertices
    n_minus = sum(free[v][1] in XI_MINUS_CORNERS for v in K.vertices)
    n_plus = len(K) - n_minus
    assert n_minus % 2 == 0 and n_plus % 2 == 0
    return -n_minus // 2, -n_plus // 2


def classify(P: SurfaceDiagram) -> SurfaceReport:
    comps = surface_components(P)
    owner = {i: c for c, comp in enumerate(comps) for i in comp}
    R = boundary(P)
    bcomps = connected_components(R)
    generic = R.genericity().is_generic
    bf = boundary_framing(P) if len(R) else None
    fvals = framing_value(R, bf.framing).per_component if bf and generic else None
    bounds = []
    for k, K in enumerate(bcomps):
        rp, rm = relative_tb_closed_form(P, K)
        tp, tm = tb_plus(K), tb_minus(K)
        lk = None
        if fvals is not None:
            lk = fvals[k]
            rel = relative_tb(K, [lk])[0]
            assert (rel.tb_plus, rel.tb_minus) == (rp, rm), "relative tb mismatch"
        v0 = K.vertices[0]
        bounds.append(BoundaryComponent(K.vertices, owner[P.free_vertices[v0][0]],
                                        tp, tm, lk, rp, rm))
    tops = []
    for c, comp in enumerate(comps):
        sub = validate_surface_diagram(P.rectangles[i] for i in comp)
        tops.append(ComponentTopology(
            tuple(comp), cell_complex(P, comp).euler_characteristic,
            bool(orient_surface(sub)),
            sum(1 for b in bounds if b.surface_component == c)))
    cx = cell_complex(P)
    return SurfaceReport(cx.euler_characteristic, all(t.orientable for t in tops),
                         tuple(tops), tuple(bounds), giroux_and_dividing(P), cx)


@dataclass(frozen=True)
class LengthBound:
    length: int
    bound: int                       # -2 tb_+(S; surface)

    @property
    def holds(self) -> bool:
        return self.length >= self.bound

    @property
    def slack(self) -> int:
        return self.length - self.bound


def lengthbound_check(P: SurfaceDiagram) -> list[LengthBound]:
    out = []
    for K in connected_components(boundary(P)):
        rp, _ = relative_tb_closed_form(P, K)
        lb = LengthBound(len(K), -2 * rp)
        assert lb.holds
        out.append(lb)
    return out


def make_chain_annulus(k: int, thetas: Optional[Sequence] = None,
                       phis: Optional[Sequence] = None) -> SurfaceDiagram:
    """Cyclic chain r_0, ..., r_{k-1} in which r_i and r_{i+1} share one
    vertex, top right for r_i and bottom left for r_{i+1}.

    ``thetas`` / ``phis`` are k values in increasing cyclic order; the
    default is i/(2k).  Even k gives an annulus, odd k a Moebius band."""
    if k <= 2:
        raise DiagramError(
            "chain needs k >= 3: with k = 2 the two rectangles share all four "
            "corners and form the complementary pair (a sphere), not a chain")
    thetas = [Fraction(i, 2 * k) for i in range(k)] if thetas is None else [coord(t) for t in thetas]
    phis = list(thetas) if phis is None else [coord(p) for p in phis]
    if len(thetas) != k or len(phis) != k:
        raise DiagramError("need exactly k theta and phi values")
    rects = [Rectangle.of(thetas[i], thetas[(i + 1) % k], phis[i], phis[(i + 1) % k])
             for i in range(k)]
    return validate_surface_diagram(rects)
