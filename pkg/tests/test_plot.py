from fractions import Fraction as F

import numpy as np

from rectsurf import fixtures as fx
from rectsurf.plot import link_scene, render_svg, stacking_order, surface_scene, torus_projection_svg
from rectsurf.surface import Rectangle, validate_surface_diagram


def test_single_rect_scene():
    s = surface_scene(fx.single_rect(), layers=("rectangles", "vertices"))
    assert s.count("rectangles") == 1 and s.count("vertices") == 4


def test_crossing_pair_stacking():
    under = Rectangle.of(0, F(1, 2), F(1, 8), F(3, 8))
    over = Rectangle.of(F(1, 4), F(3, 8), 0, F(1, 2))
    P = validate_surface_diagram([under, over])
    assert stacking_order(P) == [0, 1]
    P = validate_surface_diagram([over, under])
    assert stacking_order(P) == [1, 0]
    z = {i: depth for i, _, _, _, _, depth in surface_scene(P, layers=("rectangles",)).rects}
    assert z[0] > z[1]


def test_chain4_dividing_polyline():
    P = fx.chain(4)
    s = surface_scene(P, layers=("dividing",))
    (line,) = s.polylines["dividing"]
    assert len(line) == 5
    # closed on the torus: the lift comes back to an integer translate
    gap = line[-1] - line[0]
    assert np.allclose(gap, np.round(gap)) and np.any(np.round(gap) != 0)


def test_svg_output():
    svg = torus_projection_svg(fx.chain(4), layers=("rectangles", "vertices", "giroux", "dividing"))
    assert svg.lstrip().startswith("<?xml") and "<svg" in svg and "rect_0" in svg
    svg = torus_projection_svg(fx.trefoil_staircase())
    assert "<svg" in svg


def test_streamline_layer():
    s = surface_scene(fx.single_rect(), layers=("streamlines",), seeds=2)
    assert s.count("streamlines") == 2


def test_framing_layer_and_link_scene():
    s = surface_scene(fx.single_rect(), layers=("framing",))
    assert s.count("framing") == 4
    assert link_scene(fx.minimal_square()).count("edges") == 4
    assert "<svg" in render_svg(link_scene(fx.hopf_pair()), size=3)
