from fractions import Fraction as F

import numpy as np

from rectsurf import fixtures as fx
from rectsurf.link import default_orientation
from rectsurf.oracles import (_polygon_linking, fd_harmonic, gauss_linking_number,
                              link_polygons, triangulated_euler)


def _circle(c, axis, n=64):
    t = np.linspace(0, 2 * np.pi, n, endpoint=False)
    u, v = np.eye(3)[[i for i in range(3) if i != axis]]
    return c + np.cos(t)[:, None] * u + np.sin(t)[:, None] * v


def test_polygon_linking_hopf_circles():
    A = _circle(np.zeros(3), 2)
    B = _circle(np.array([1.0, 0, 0]), 1)
    assert round(abs(_polygon_linking(A, B))) == 1
    far = _circle(np.array([5.0, 0, 0]), 1)
    assert abs(_polygon_linking(A, far)) < 1e-9


def test_link_polygons_on_sphere():
    polys = link_polygons(fx.hopf_pair(), samples=8)
    assert len(polys) == 2
    for P in polys:
        assert np.allclose(np.linalg.norm(P, axis=1), 1)


def test_split_squares_unlinked():
    sq = fx.minimal_square()
    d = F(9, 16)
    far = sq.translated(d, d)
    o = default_orientation(sq)
    o2 = {v.shifted(d, d): s for v, s in o.items()}
    assert abs(gauss_linking_number(sq, o, far, o2)) < 1e-6


def test_triangulated_euler_values():
    assert triangulated_euler([(0, 0.5, 0, 0.5)])["chi"] == 1
    sphere = triangulated_euler([(0, 0.5, 0, 0.5), (0.5, 0, 0.5, 0)])
    assert (sphere["b0"], sphere["b1"], sphere["b2"]) == (1, 0, 1)


def test_fd_square_symmetry():
    x, y, h, info = fd_harmonic(1.0, 1.0, samples=15)
    assert abs(h[7, 7] - 0.5) < 1e-6
    assert np.max(np.abs(h + h.T - 1)) < 1e-6
