"""Rectangular diagrams of links (grid diagrams drawn on the torus)."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Mapping

from .torus import TorusPoint, cyclic_diff


class DiagramError(ValueError):
    """Raised when a point set or rectangle list is not a valid diagram."""


VERTICAL = "vertical"
HORIZONTAL = "horizontal"


@dataclass(frozen=True, order=True)
class Edge:
    """Unordered pair of vertices on a common meridian or longitude.

    ``a < b`` in the lexicographic order of (theta, phi).
    """

    a: TorusPoint
    b: TorusPoint
    kind: str = field(compare=False)

    @classmethod
    def of(cls, u: TorusPoint, v: TorusPoint) -> "Edge":
        if u == v:
            raise ValueError("edge endpoints coincide")
        if u.theta == v.theta:
            kind = VERTICAL
        elif u.phi == v.phi:
            kind = HORIZONTAL
        else:
            raise ValueError("%s and %s share no meridian or longitude" % (u, v))
        a, b = sorted((u, v))
        return cls(a, b, kind)

    @property
    def endpoints(self) -> tuple[TorusPoint, TorusPoint]:
        return (self.a, self.b)

    def other(self, v: TorusPoint) -> TorusPoint:
        if v == self.a:
            return self.b
        if v == self.b:
            return self.a
        raise KeyError(v)

    @property
    def length(self) -> Fraction:
        """Circular length of the arc from ``a`` to ``b`` (either direction
        gives a generic/non-generic verdict, so one is enough)."""
        if self.kind == VERTICAL:
            return cyclic_diff(self.a.phi, self.b.phi)
        return cyclic_diff(self.a.theta, self.b.theta)


@dataclass(frozen=True)
class GenericityReport:
    half_length_edges: tuple[Edge, ...]

    @property
    def is_generic(self) -> bool:
        return not self.half_length_edges


class LinkDiagram:
    """A finite set of torus points with 0 or 2 points on every meridian
    and longitude.  Construct through :func:`validate_link_diagram`."""

    def __init__(self, vertices: Iterable[TorusPoint]):
        pts = [v if type(v) is TorusPoint else TorusPoint.of(*v) for v in vertices]
        self._edges = None
        self.vertices: tuple[TorusPoint, ...] = tuple(sorted(set(pts)))
        if len(self.vertices) != len(pts):
            raise DiagramError("repeated vertex in diagram")
        by_theta: dict[Fraction, list[TorusPoint]] = {}
        by_phi: dict[Fraction, list[TorusPoint]] = {}
        for v in self.vertices:
            by_theta.setdefault(v.theta, []).append(v)
            by_phi.setdefault(v.phi, []).append(v)
        for name, table in (("meridian theta", by_theta), ("longitude phi", by_phi)):
            for value, pts_on_line in sorted(table.items()):
                if len(pts_on_line) != 2:
                    raise DiagramError(
                        "%s=%s contains %d vertices (must be 0 or 2)"
                        % (name, value, len(pts_on_line)))
        self._vpartner = {}
        self._hpartner = {}
        for u, v in by_theta.values():
            self._vpartner[u], self._vpartner[v] = v, u
        for u, v in by_phi.values():
            self._hpartner[u], self._hpartner[v] = v, u
        self.thetas: tuple[Fraction, ...] = tuple(sorted(by_theta))
        self.phis: tuple[Fraction, ...] = tuple(sorted(by_phi))

    # -- basic structure -------------------------------------------------
    def __len__(self):
        return len(self.vertices)

    def __iter__(self) -> Iterator[TorusPoint]:
        return iter(self.vertices)

    def __contains__(self, v):
        return v in self._vpartner

    def __eq__(self, other):
        return isinstance(other, LinkDiagram) and self.vertices == other.vertices

    def __hash__(self):
        return hash(self.vertices)

    def __repr__(self):
        return "LinkDiagram(%s)" % ", ".join(str(v) for v in self.vertices)

    def vertical_partner(self, v: TorusPoint) -> TorusPoint:
        return self._vpartner[v]

    def horizontal_partner(self, v: TorusPoint) -> TorusPoint:
        return self._hpartner[v]

    def vertical_edge(self, v: TorusPoint) -> Edge:
        return Edge.of(v, self._vpartner[v])

    def horizontal_edge(self, v: TorusPoint) -> Edge:
        return Edge.of(v, self._hpartner[v])

    @property
    def edges(self) -> tuple[Edge, ...]:
        if self._edges is None:
            es = {Edge(v, w, VERTICAL) for v, w in self._vpartner.items() if v < w}
            es |= {Edge(v, w, HORIZONTAL) for v, w in self._hpartner.items() if v < w}
            self._edges = tuple(sorted(es))
        return self._edges

    @property
    def vertical_edges(self) -> tuple[Edge, ...]:
        return tuple(e for e in self.edges if e.kind == VERTICAL)

    @property
    def horizontal_edges(self) -> tuple[Edge, ...]:
        return tuple(e for e in self.edges if e.kind == HORIZONTAL)

    def genericity(self) -> GenericityReport:
        half = Fraction(1, 2)
        return GenericityReport(tuple(e for e in self.edges if e.length == half))

    def translated(self, dtheta, dphi) -> "LinkDiagram":
        return LinkDiagram(v.shifted(dtheta, dphi) for v in self.vertices)

    # -- components ------------------------------------------------------
    def cycle(self, start: TorusPoint) -> list[TorusPoint]:
        """Vertices of the component through ``start`` in traversal order,
        leaving ``start`` along its vertical edge."""
        out = [start]
        v, vertical = self._vpartner[start], False
        while v != start:
            out.append(v)
            v = self._hpartner[v] if not vertical else self._vpartner[v]
            vertical = not vertical
        return out

    def components(self) -> list["LinkDiagram"]:
        return connected_components(self)


def validate_link_diagram(vertices: Iterable) -> LinkDiagram:
    return LinkDiagram(vertices)


def connected_components(R: LinkDiagram) -> list[LinkDiagram]:
    seen: set[TorusPoint] = set()
    comps = []
    for v in R.vertices:
        if v in seen:
            continue
        cyc = R.cycle(v)
        seen.update(cyc)
        comps.append(LinkDiagram(cyc))
    return comps


Orientation = Mapping[TorusPoint, int]
"""Sign (+1 / -1) per vertex; the two ends of every edge differ."""


def check_orientation(R: LinkDiagram, signs: Orientation) -> None:
    if set(signs) != set(R.vertices):
        raise DiagramError("orientation must assign a sign to every vertex")
    for v, s in signs.items():
        if s not in (1, -1):
            raise DiagramError("sign of %s must be +1 or -1, got %r" % (v, s))
    for e in R.edges:
        if signs[e.a] == signs[e.b]:
            raise DiagramError("edge %s-%s has equal endpoint signs" % (e.a, e.b))


def component_orientations(K: LinkDiagram) -> tuple[dict, dict]:
    """The two orientations of a knot diagram; the first makes its
    smallest vertex positive."""
    cyc = K.cycle(K.vertices[0])
    pos = {v: (1 if i % 2 == 0 else -1) for i, v in enumerate(cyc)}
    return pos, {v: -s for v, s in pos.items()}


def default_orientation(R: LinkDiagram) -> dict:
    signs: dict = {}
    for K in connected_components(R):
        signs.update(component_orientations(K)[0])
    return signs


def orientations(R: LinkDiagram) -> list[dict]:
    """All 2^c orientations of a diagram with c components."""
    per_comp = [component_orientations(K) for K in connected_components(R)]
    out = []
    for choice in itertools.product(*per_comp):
        signs: dict = {}
        for part in choice:
            signs.update(part)
        out.append(signs)
    return out
