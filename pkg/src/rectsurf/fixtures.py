"""Named fixture diagrams and seeded random generators.

Random generators use numpy's PCG64 so the streams are reproducible across
platforms and numpy versions."""

from __future__ import annotations

import warnings
from fractions import Fraction
from typing import Optional

import numpy as np

from .link import DiagramError, LinkDiagram
from .surface import (BL, BR, TL, TR, Rectangle, SurfaceDiagram, classify_pair,
                      make_chain_annulus, validate_surface_diagram)

DENOMINATOR = 1009        # prime, so no edge can have length exactly 1/2

F = Fraction


def minimal_square() -> LinkDiagram:
    """Unknot with four vertices.  Side 1/4 keeps it generic."""
    return LinkDiagram([(0, 0), (0, F(1, 4)), (F(1, 4), 0), (F(1, 4), F(1, 4))])


def hopf_pair() -> LinkDiagram:
    """Two interleaved squares."""
    a, b = F(1, 8), F(2, 8)
    return LinkDiagram([(0, 0), (0, b), (b, 0), (b, b),
                        (a, a), (a, a + b), (a + b, a), (a + b, a + b)])


def trefoil_staircase() -> LinkDiagram:
    """Grid of size 5: vertices (i, i) and (i, i + 2) in fifths."""
    return LinkDiagram([(F(i, 5), F(i, 5)) for i in range(5)]
                       + [(F(i, 5), F((i + 2) % 5, 5)) for i in range(5)])


def single_rect() -> SurfaceDiagram:
    return validate_surface_diagram([Rectangle.of(F(1, 8), F(3, 8), F(1, 8), F(1, 2))])


def sphere_pair() -> SurfaceDiagram:
    """A rectangle and its complement: they share all four corners."""
    t, p = F(1, 3), F(2, 5)
    return validate_surface_diagram([Rectangle.of(0, t, 0, p), Rectangle.of(t, 0, p, 0)])


def chain(k: int) -> SurfaceDiagram:
    return make_chain_annulus(k)


LINKS = {"minimal_square": minimal_square, "hopf_pair": hopf_pair,
         "trefoil_staircase": trefoil_staircase}
SURFACES = {"single_rect": single_rect, "sphere_pair": sphere_pair,
            "chain3": lambda: chain(3), "chain4": lambda: chain(4),
            "chain5": lambda: chain(5), "chain6": lambda: chain(6)}


def rng_for(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def random_link_diagram(seed: int, vertices: Optional[int] = None,
                        denominator: int = DENOMINATOR) -> LinkDiagram:
    """Random diagram with 4..40 vertices: n meridians and n longitudes,
    each meridian getting the rows of two permutations that differ
    everywhere."""
    rng = rng_for(seed)
    if vertices is None:
        n = int(rng.integers(2, 21))
    else:
        if vertices % 2 or not 4 <= vertices <= 2 * denominator:
            raise ValueError("vertex count must be even and at least 4")
        n = vertices // 2
    th = np.sort(rng.choice(denominator, n, replace=False))
    ph = np.sort(rng.choice(denominator, n, replace=False))
    p1 = rng.permutation(n)
    while True:
        p2 = rng.permutation(n)
        if np.all(p1 != p2):
            break
    pts = [(F(int(th[i]), denominator), F(int(ph[p[i]]), denominator)) for p in (p1, p2) for i in range(n)]
    return LinkDiagram(pts)


# a shared vertex is BL of one rectangle and TR of the other, or TL/BR
PARTNER = {BL: TR, TR: BL, TL: BR, BR: TL}


def _rect_with_corner(v, name: str, dt: Fraction, dp: Fraction) -> Rectangle:
    t1 = v.theta if name in (BL, TL) else v.theta - dt
    p1 = v.phi if name in (BL, BR) else v.phi - dp
    return Rectangle.of(t1, t1 + dt, p1, p1 + dp)


def random_surface_diagram(seed: int, budget: int, attempts_per_rect: int = 400,
                           denominator: int = DENOMINATOR) -> SurfaceDiagram:
    """Grow a diagram by rejection sampling: each proposal is either
    attached at a free vertex (the vertex becomes the opposite corner of
    the new rectangle) or placed freely; it is kept when the enlarged
    collection is still a valid diagram."""
    if budget < 1:
        raise ValueError("budget must be at least 1")
    rng = rng_for(seed)

    def span() -> Fraction:
        return F(int(rng.integers(denominator // 20, denominator // 2)), denominator)

    rects: list[Rectangle] = []
    current: Optional[SurfaceDiagram] = None
    tries = 0
    while len(rects) < budget and tries < attempts_per_rect * budget:
        tries += 1
        free = sorted(current.free_vertices.items()) if current is not None else []
        if free and rng.random() < 0.85:
            v, (_, name) = free[int(rng.integers(len(free)))]
            dt, dp = span(), span()
            if rng.random() < 0.5:
                # snap the far sides to lines of other free vertices, which
                # lets the new rectangle close up loops
                corner = PARTNER[name]
                st = 1 if corner in (BL, TL) else -1
                sp = 1 if corner in (BL, BR) else -1
                w, _ = free[int(rng.integers(len(free)))]
                if w.theta != v.theta:
                    dt = (st * (w.theta - v.theta)) % 1
                w, _ = free[int(rng.integers(len(free)))]
                if w.phi != v.phi:
                    dp = (sp * (w.phi - v.phi)) % 1
            cand = _rect_with_corner(v, PARTNER[name], dt, dp)
        else:
            t = F(int(rng.integers(denominator)), denominator)
            p = F(int(rng.integers(denominator)), denominator)
            cand = Rectangle.of(t, t + span(), p, p + span())
        if not all(classify_pair(r, cand).compatible for r in rects):
            continue
        try:
            current = validate_surface_diagram(rects + [cand])
        except (DiagramError, ValueError):
            continue
        rects.append(cand)
    if len(rects) < budget:
        warnings.warn("random_surface_diagram(seed=%d): reached %d of %d rectangles"
                      % (seed, len(rects), budget))
    return current
