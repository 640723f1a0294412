from fractions import Fraction as F

import pytest

from rectsurf import fixtures as fx
from rectsurf.link import (DiagramError, LinkDiagram, check_orientation, connected_components,
                           orientations, validate_link_diagram)
from rectsurf.staircase import approximate_staircase

H = F(1, 2)


def test_square_with_half_sides_is_valid_but_not_generic():
    R = validate_link_diagram([(0, 0), (0, H), (H, 0), (H, H)])
    assert len(R.edges) == 4
    assert not R.genericity().is_generic


def test_missing_vertex_rejected():
    with pytest.raises(DiagramError, match="=1/2 contains 1 vertices"):
        validate_link_diagram([(0, 0), (0, H), (H, 0)])


def test_repeated_vertex_rejected():
    with pytest.raises(DiagramError):
        LinkDiagram([(0, 0), (0, 0), (0, H), (H, 0), (H, H)])


def test_empty_diagram():
    R = LinkDiagram([])
    assert len(R) == 0 and R.edges == () and connected_components(R) == []
    assert orientations(R) == [{}]


def test_components():
    sq = fx.minimal_square()
    assert len(connected_components(sq)) == 1
    two = LinkDiagram(list(sq) + list(sq.translated(F(1, 2) + F(1, 16), F(1, 2) + F(1, 16))))
    assert len(connected_components(two)) == 2
    assert len(connected_components(fx.hopf_pair())) == 2
    assert len(connected_components(fx.trefoil_staircase())) == 1


def test_chain4_boundary_components_have_four_vertices():
    from rectsurf.surface import boundary
    comps = connected_components(boundary(fx.chain(4)))
    assert sorted(len(K) for K in comps) == [4, 4]


def test_orientation_counts():
    assert len(orientations(fx.minimal_square())) == 2
    assert len(orientations(fx.hopf_pair())) == 4
    for signs in orientations(fx.hopf_pair()):
        check_orientation(fx.hopf_pair(), signs)


def test_bad_orientation_rejected():
    R = fx.minimal_square()
    with pytest.raises(DiagramError):
        check_orientation(R, {v: 1 for v in R})
    with pytest.raises(DiagramError):
        check_orientation(R, {})


def test_cycle_alternates_edges():
    R = fx.trefoil_staircase()
    cyc = R.cycle(R.vertices[0])
    assert len(cyc) == len(R)
    for i, v in enumerate(cyc):
        w = cyc[(i + 1) % len(cyc)]
        assert (v.theta == w.theta) == (i % 2 == 0)


def test_staircase_small_circle():
    import math
    pts = [(0.5 + 0.05 * math.cos(2 * math.pi * k / 12), 0.5 + 0.05 * math.sin(2 * math.pi * k / 12))
           for k in range(12)]
    s = approximate_staircase(pts, resolution=4, forbidden_thetas=[F(1, 2)], forbidden_phis=[F(1, 2)])
    R = s.diagram
    assert len(R) >= 4 and len(connected_components(R)) == 1
    assert F(1, 2) not in R.thetas and F(1, 2) not in R.phis
    assert s.homology == (0, 0)


def test_staircase_winding_loop():
    s = approximate_staircase([(0.1, 0.9), (0.4, 0.6), (0.7, 0.3)], winding=(1, -1), resolution=3)
    assert s.homology == (1, -1)
    assert len(connected_components(s.diagram)) == 1


def test_staircase_empty_rejected():
    with pytest.raises(DiagramError):
        approximate_staircase([])


def test_random_link_diagram_deterministic():
    a, b = fx.random_link_diagram(11), fx.random_link_diagram(11)
    assert a == b and 4 <= len(a) <= 40
    assert fx.random_link_diagram(12) != a
    assert len(fx.random_link_diagram(3, 10)) == 10
    with pytest.raises(ValueError):
        fx.random_link_diagram(3, 7)
