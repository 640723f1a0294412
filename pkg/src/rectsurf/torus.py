"""Exact arithmetic on the oriented circle R/Z and the torus T^2.

Angles are measured in full turns and stored as :class:`fractions.Fraction`
values in ``[0, 1)``.  Nothing in this module touches floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Union


class Coord(Fraction):
    """A Fraction that remembers its hash.  Coordinates are hashed constantly
    (vertex sets, partner tables) and Fraction recomputes a modular inverse
    on every call."""

    __slots__ = ("_hash",)

    def __hash__(self):
        try:
            return self._hash
        except AttributeError:
            self._hash = Fraction.__hash__(self)
            return self._hash

    def __repr__(self):
        return "Fraction(%d, %d)" % (self.numerator, self.denominator)


def coord(x) -> Fraction:
    """Canonical circle coordinate: a reduced fraction in [0, 1).

    Accepts ints, Fractions and strings such as ``"3/8"``.  Floats are
    rejected because they would silently break exactness.
    """
    if isinstance(x, float):
        raise TypeError("circle coordinates must be exact; got float %r" % x)
    if type(x) is Coord:
        return x
    q = Fraction(x)
    return Coord(q.numerator % q.denominator, q.denominator)


def cyclic_diff(x: Fraction, y: Fraction) -> Fraction:
    """Length of the positively oriented arc from ``x`` to ``y`` (in [0, 1))."""
    return (y - x) % 1


class TorusPoint(NamedTuple):
    theta: Fraction
    phi: Fraction

    @classmethod
    def of(cls, theta, phi) -> "TorusPoint":
        return cls(coord(theta), coord(phi))

    def shifted(self, dtheta, dphi) -> "TorusPoint":
        return TorusPoint(coord(self.theta + dtheta), coord(self.phi + dphi))

    def __str__(self):
        return "(%s, %s)" % (self.theta, self.phi)


@dataclass(frozen=True)
class Arc:
    """Closed arc [start, end] traversed positively from ``start``."""

    start: Fraction
    end: Fraction

    def __post_init__(self):
        object.__setattr__(self, "start", coord(self.start))
        object.__setattr__(self, "end", coord(self.end))
        if self.start == self.end:
            raise ValueError("degenerate arc: start == end == %s" % self.start)
        object.__setattr__(self, "_length", coord(self.end - self.start))

    @property
    def length(self) -> Fraction:
        return self._length

    @property
    def midpoint(self) -> Fraction:
        return coord(self.start + self.length / 2)

    def offset(self, x) -> Fraction:
        """Position of ``x`` measured from ``start`` along the circle."""
        return cyclic_diff(self.start, coord(x))

    def contains(self, x, closed: bool = True) -> bool:
        return arc_contains(self, x, closed)

    def complement(self) -> "Arc":
        return Arc(self.end, self.start)

    def __str__(self):
        return "[%s, %s]" % (self.start, self.end)


Piece = Union[Fraction, Arc]


def arc_contains(a: Arc, x, closed: bool = True) -> bool:
    t = a.offset(x)
    if closed:
        return t <= a.length
    return 0 < t < a.length


def arcs_meet(a: Arc, b: Arc) -> bool:
    """Whether two closed arcs intersect: one of them contains the other's start."""
    return a.offset(b.start) <= a.length or b.offset(a.start) <= b.length


def arc_intersection(a: Arc, b: Arc) -> list[Piece]:
    """Decompose ``a ∩ b`` into isolated points and arcs.

    Works in the frame of ``a`` (offsets in [0, len a]); ``b`` is unrolled
    twice so wrap-around spans are handled without case analysis.  Pieces
    are returned sorted by their offset along ``a``.
    """
    la, lb = a.length, b.length
    t = a.offset(b.start)
    pieces = []
    for lo, hi in ((t - 1, t - 1 + lb), (t, t + lb)):
        lo, hi = max(lo, Fraction(0)), min(hi, la)
        if lo < hi:
            pieces.append((lo, Arc(a.start + lo, a.start + hi)))
        elif lo == hi:
            pieces.append((lo, coord(a.start + lo)))
    pieces.sort(key=lambda p: p[0])
    return [p for _, p in pieces]


def min_cyclic_gap(values: Iterable) -> Fraction:
    """Smallest positive distance between circularly consecutive values."""
    vals = sorted({coord(v) for v in values})
    if len(vals) < 2:
        raise ValueError("need at least two distinct circle values, got %d" % len(vals))
    gaps = [b - a for a, b in zip(vals, vals[1:])]
    gaps.append(vals[0] + 1 - vals[-1])
    return min(gaps)


def format_fraction(q: Fraction) -> str:
    q = Fraction(q)
    return "%d/%d" % (q.numerator, q.denominator)


def parse_fraction(text) -> Fraction:
    if isinstance(text, float):
        raise TypeError("rationals must be given as 'p/q' strings, not floats")
    return Fraction(text)
