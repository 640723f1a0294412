"""Framings of link diagrams, the framing invariant <f>, and relative
Thurston-Bennequin numbers."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Mapping, Optional, Sequence

from .link import (DiagramError, Edge, LinkDiagram, Orientation,
                   connected_components, default_orientation)
from .linking import linking_number, tb_minus, tb_plus
from .torus import TorusPoint


class NonGenericDiagramError(DiagramError):
    """An edge has circular length exactly 1/2, so framings of the diagram
    do not correspond one-to-one to admissible framings of the link."""


@dataclass(frozen=True)
class Framing:
    """For every edge, the endpoint that is declared greater."""

    greater: Mapping[Edge, TorusPoint]

    @classmethod
    def from_pairs(cls, R: LinkDiagram, pairs) -> "Framing":
        """Build from ``(smaller, greater)`` vertex pairs, one per edge."""
        greater = {}
        for lo, hi in pairs:
            lo, hi = TorusPoint.of(*lo), TorusPoint.of(*hi)
            e = Edge.of(lo, hi)
            if e in greater:
                raise DiagramError("edge %s-%s ordered twice" % (lo, hi))
            greater[e] = hi
        f = cls(greater)
        f.check(R)
        return f

    def check(self, R: LinkDiagram) -> None:
        edges = set(R.edges)
        if set(self.greater) != edges:
            missing = edges - set(self.greater)
            extra = set(self.greater) - edges
            raise DiagramError("framing does not match the diagram edges "
                               "(%d missing, %d extra)" % (len(missing), len(extra)))
        for e, v in self.greater.items():
            if v not in e.endpoints:
                raise DiagramError("%s is not an endpoint of its edge" % (v,))

    def is_max(self, e: Edge, v: TorusPoint) -> bool:
        return self.greater[e] == v

    def pairs(self) -> list[tuple[TorusPoint, TorusPoint]]:
        return [(e.other(v), v) for e, v in sorted(self.greater.items())]

    def flipped(self, e: Edge) -> "Framing":
        g = dict(self.greater)
        g[e] = e.other(g[e])
        return Framing(g)


@dataclass(frozen=True)
class CornerRole:
    """Whether a vertex is the greater end of its horizontal / vertical edge.

    Extremal vertices (min/min or max/max) are where an admissible surface is
    tangent to xi_-; mixed ones are where it is tangent to xi_+.
    """

    max_of_horizontal: bool
    max_of_vertical: bool

    @property
    def extremal(self) -> bool:
        return self.max_of_horizontal == self.max_of_vertical


def corner_roles(R: LinkDiagram, f: Framing) -> dict[TorusPoint, CornerRole]:
    return {v: CornerRole(f.is_max(R.horizontal_edge(v), v), f.is_max(R.vertical_edge(v), v))
            for v in R.vertices}


def extremal_count(R: LinkDiagram, f: Framing) -> int:
    return sum(role.extremal for role in corner_roles(R, f).values())


def require_generic(R: LinkDiagram) -> None:
    report = R.genericity()
    if not report.is_generic:
        e = report.half_length_edges[0]
        raise NonGenericDiagramError(
            "edge %s-%s has length exactly 1/2; framings are ambiguous "
            "(%d such edges)" % (e.a, e.b, len(report.half_length_edges)))


def mixed_framing(R: LinkDiagram, orientation: Optional[Orientation] = None) -> Framing:
    """Every vertex mixed: realizes <f> = tb_+."""
    signs = default_orientation(R) if orientation is None else orientation
    g = {}
    for e in R.edges:
        pos = e.a if signs[e.a] > 0 else e.b
        g[e] = pos if e.kind == "horizontal" else e.other(pos)
    return Framing(g)


def extremal_framing(R: LinkDiagram, orientation: Optional[Orientation] = None) -> Framing:
    """Every vertex extremal: realizes <f> = -tb_-."""
    signs = default_orientation(R) if orientation is None else orientation
    return Framing({e: (e.a if signs[e.a] > 0 else e.b) for e in R.edges})


def all_framings(R: LinkDiagram) -> Iterator[Framing]:
    edges = R.edges
    for choice in itertools.product((0, 1), repeat=len(edges)):
        yield Framing({e: e.endpoints[c] for e, c in zip(edges, choice)})


@dataclass(frozen=True)
class FramingValue:
    per_component: tuple[int, ...]
    total: int


def _base_terms(R: LinkDiagram, orientation: Optional[Orientation] = None):
    """Framing-independent parts of <f>: components, their tb_+, and the
    pairwise linking term 2 * sum lk(K_i, K_j)."""
    comps = connected_components(R)
    tbs = [tb_plus(K) for K in comps]
    pair = 0
    if len(comps) > 1:
        signs = default_orientation(R) if orientation is None else orientation
        for i, j in itertools.combinations(range(len(comps)), 2):
            both = LinkDiagram(comps[i].vertices + comps[j].vertices)
            pair += 2 * linking_number(both, {v: signs[v] for v in both}, comps[i].vertices)
    return comps, tbs, pair


def framing_value(R: LinkDiagram, f: Framing,
                  orientation: Optional[Orientation] = None, _base=None) -> FramingValue:
    """<f|K> = tb_+(K) + n_-(K, f)/2 per component, where n_- counts the
    extremal vertices of K.  The total is lk(L, L^f) for the oriented link,
    i.e. the component values plus twice the pairwise linking numbers."""
    require_generic(R)
    f.check(R)
    comps, tbs, pair = _base_terms(R, orientation) if _base is None else _base
    roles = corner_roles(R, f)
    values = []
    for K, tb in zip(comps, tbs):
        n_minus = sum(roles[v].extremal for v in K.vertices)
        assert n_minus % 2 == 0
        values.append(tb + n_minus // 2)
    return FramingValue(tuple(values), sum(values) + pair)


def framing_range(R: LinkDiagram) -> list[tuple[int, int]]:
    """[tb_+(K), -tb_-(K)] for every component K."""
    return [(tb_plus(K), -tb_minus(K)) for K in connected_components(R)]


@dataclass(frozen=True)
class RelativeTB:
    tb_plus: int
    tb_minus: int

    @property
    def representable(self) -> bool:
        return self.tb_plus <= 0 and self.tb_minus <= 0


def _lookup(surface_lk, i: int, K: LinkDiagram):
    if isinstance(surface_lk, Mapping):
        for key in (i, K):
            if key in surface_lk:
                return surface_lk[key]
    elif i < len(surface_lk):
        return surface_lk[i]
    raise DiagramError("no surface linking number given for component %d" % i)


def relative_tb(R: LinkDiagram, surface_lk) -> list[RelativeTB]:
    """tb_+(K;F) = tb_+(K) - lk(K, K^F) and tb_-(K;F) = tb_-(K) + lk(K, K^F).

    ``surface_lk`` maps component index (in :func:`connected_components`
    order) or the component diagram itself to lk(K, K^F); a sequence
    indexed by component is accepted as well.
    """
    out = []
    for i, K in enumerate(connected_components(R)):
        lk = _lookup(surface_lk, i, K)
        out.append(RelativeTB(tb_plus(K) - lk, tb_minus(K) + lk))
    return out


@dataclass(frozen=True)
class Representability:
    components: tuple[RelativeTB, ...]

    @property
    def passes(self) -> tuple[bool, ...]:
        return tuple(c.representable for c in self.components)

    @property
    def overall(self) -> bool:
        return all(self.passes)


def representability_check(R: LinkDiagram, surface_lk) -> Representability:
    """Whether every component has non-positive Thurston-Bennequin numbers
    relative to the surface, i.e. lk(K, K^F) lies in [tb_+(K), -tb_-(K)]."""
    return Representability(tuple(relative_tb(R, surface_lk)))


def framing_values_exhaustive(R: LinkDiagram) -> set[int]:
    """Set of total framing values over all 2^|edges| framings."""
    base = _base_terms(R)
    return {framing_value(R, f, _base=base).total for f in all_framings(R)}


def component_value_sets(R: LinkDiagram) -> list[set[int]]:
    comps = connected_components(R)
    sets: list[set[int]] = [set() for _ in comps]
    base = _base_terms(R)
    for f in all_framings(R):
        for i, v in enumerate(framing_value(R, f, _base=base).per_component):
            sets[i].add(v)
    return sets


def parity_ok(R: LinkDiagram, framings: Sequence[Framing]) -> bool:
    roles_list = (corner_roles(R, f) for f in framings)
    for roles in roles_list:
        for K in connected_components(R):
            if sum(roles[v].extremal for v in K.vertices) % 2:
                return False
    return True
