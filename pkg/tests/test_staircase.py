from fractions import Fraction as F

import pytest

from rectsurf.link import DiagramError, connected_components
from rectsurf.linking import tb_minus, tb_plus
from rectsurf.staircase import approximate_staircase


def test_closed_loop():
    s = approximate_staircase([(0.1, 0.1), (0.3, 0.2), (0.2, 0.4)], resolution=2)
    assert len(connected_components(s.diagram)) == 1
    assert len(s.diagram) == 12 and s.homology == (0, 0)
    assert tb_plus(s.diagram) + tb_minus(s.diagram) == -6


def test_winding():
    s = approximate_staircase([(F(0), F(0)), (F(1, 3), F(1, 5))], winding=(1, 1), resolution=3)
    assert s.homology == (1, 1)
    assert len(connected_components(s.diagram)) == 1


def test_forbidden_lines_avoided():
    s = approximate_staircase([(F(0), F(0)), (F(1, 2), F(1, 4))], winding=(1, 0), resolution=2,
                              forbidden_thetas=[0], forbidden_phis=[0])
    assert F(0) not in s.diagram.thetas and F(0) not in s.diagram.phis


@pytest.mark.parametrize("poly,err", [
    ([], "empty"), ([(0.1, 0.1), (0.1, 0.3)], "axis-parallel"), ([(0.1, 0.1), (0.1, 0.1)], "repeated"),
])
def test_errors(poly, err):
    with pytest.raises(DiagramError, match=err):
        approximate_staircase(poly)
