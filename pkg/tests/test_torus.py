from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from rectsurf.torus import (Arc, TorusPoint, arc_contains, arc_intersection, arcs_meet, coord,
                            cyclic_diff, format_fraction, min_cyclic_gap, parse_fraction)

fractions = st.fractions(min_value=-3, max_value=3, max_denominator=60)


def test_coord_canonical():
    assert coord(F(5, 4)) == F(1, 4)
    assert coord(F(-1, 4)) == F(3, 4)
    assert coord("7/3") == F(1, 3)
    assert coord(1) == 0


def test_coord_rejects_float():
    with pytest.raises(TypeError):
        coord(0.25)


@given(fractions)
def test_coord_range_and_hash(x):
    c = coord(x)
    assert 0 <= c < 1 and (x - c).denominator == 1
    assert hash(c) == hash(F(c)) and c == F(c)


def test_arc_contains_examples():
    assert arc_contains(Arc(0, F(1, 2)), F(1, 4))
    assert not arc_contains(Arc(0, F(1, 2)), F(3, 4))
    assert arc_contains(Arc(F(3, 4), F(1, 4)), 0)
    assert arc_contains(Arc(0, F(1, 2)), F(1, 2))
    assert not arc_contains(Arc(0, F(1, 2)), F(1, 2), closed=False)


def test_arc_length_wraps():
    assert Arc(F(3, 4), F(1, 4)).length == F(1, 2)
    with pytest.raises(ValueError):
        Arc(F(1, 3), F(4, 3))


def test_arc_intersection_examples():
    assert sorted(arc_intersection(Arc(0, F(1, 2)), Arc(F(1, 2), 1))) == [0, F(1, 2)]
    assert arc_intersection(Arc(0, F(1, 2)), Arc(F(1, 4), F(3, 4))) == [Arc(F(1, 4), F(1, 2))]
    assert arc_intersection(Arc(0, F(1, 4)), Arc(F(1, 2), F(3, 4))) == []


@given(fractions, fractions, fractions, fractions)
def test_arcs_meet_matches_intersection(a, b, c, d):
    if coord(a) == coord(b) or coord(c) == coord(d):
        return
    A, B = Arc(a, b), Arc(c, d)
    assert arcs_meet(A, B) == bool(arc_intersection(A, B)) == arcs_meet(B, A)


@given(fractions, fractions)
def test_cyclic_diff_antisymmetry(x, y):
    d = cyclic_diff(x, y)
    assert 0 <= d < 1
    if coord(x) != coord(y):
        assert d + cyclic_diff(y, x) == 1


def test_min_cyclic_gap_examples():
    assert min_cyclic_gap([0, F(1, 2)]) == F(1, 2)
    assert min_cyclic_gap([0, F(1, 8), F(1, 2)]) == F(1, 8)
    assert min_cyclic_gap([0, F(1, 3), F(2, 3)]) == F(1, 3)
    with pytest.raises(ValueError):
        min_cyclic_gap([F(1, 5)])


def test_fraction_text_round_trip():
    for q in (F(0), F(3, 8), F(1008, 1009)):
        assert parse_fraction(format_fraction(q)) == q
    with pytest.raises(TypeError):
        parse_fraction(0.5)


def test_point_shift():
    assert TorusPoint.of(F(7, 8), 0).shifted(F(1, 4), F(-1, 4)) == TorusPoint(F(1, 8), F(3, 4))
