from fractions import Fraction as F

import numpy as np
import pytest

from rectsurf.oracles import fd_harmonic
from rectsurf.surface import Rectangle
from rectsurf.tiles import (HarmonicTile, Profile, TileError, contact_field_check,
                            crossing_separation, default_pole, embed, foliation_slope,
                            foliation_streamlines, fourier_side_measure, height, side_measure,
                            stereographic, tangency_check, zeta)
from rectsurf.tolerances import TOL


def tile(a, b):
    return HarmonicTile(0.1, 0.2, a, b)


def test_zeta_fixed_points():
    for k in (0.0, 0.5, 1.0):
        assert zeta(0.5, k) == pytest.approx(0.5, abs=1e-15)
        assert zeta(0.0, k) == 0.0 and zeta(1.0, k) == 1.0
    with pytest.raises(ValueError):
        zeta(0.5, -1)


def test_zeta_involution_and_monotone():
    x = np.linspace(0.1, 0.9, 9)
    assert np.max(np.abs(zeta(x) + zeta(1 - x) - 1)) <= 1e-12
    y = np.linspace(0, 1, 201)
    assert np.all(np.diff(zeta(y, 0.5)) > 0)


@pytest.mark.parametrize("a,b", [(0.25, 0.25), (0.1, 0.4), (0.4, 0.1), (0.2, 0.3)])
def test_centre_and_range(a, b):
    t = tile(a, b)
    x, y = np.meshgrid(np.linspace(0.01, 0.99, 25) * a, np.linspace(0.01, 0.99, 25) * b)
    h = t.h_local(x, y)
    assert np.all((h > 0) & (h < 1))
    # swapping the sides swaps the boundary data
    assert abs(t.h_local(a / 2, b / 2) + tile(b, a).h_local(b / 2, a / 2) - 1) <= 1e-12


def test_square_centre_and_reflection():
    t = tile(0.25, 0.25)
    assert abs(t.h_local(0.125, 0.125) - 0.5) <= TOL.centre
    p = (0.03, 0.07)
    assert abs(t.h_local(*p) + t.h_local(0.25 - p[1], p[0]) - 1) <= 1e-12


def test_image_series_matches_fourier():
    a, b = 0.3, 0.2
    x, y = np.meshgrid(np.linspace(0.2, 0.8, 7) * a, np.linspace(0.1, 0.9, 7) * b)
    assert np.max(np.abs(side_measure(x, y, a, b) - fourier_side_measure(x, y, a, b))) < 1e-12


def test_complementarity():
    a, b = 0.3, 0.2
    t = tile(a, b)
    x, y = np.meshgrid(np.linspace(0.05, 0.95, 9) * a, np.linspace(0.05, 0.95, 9) * b)
    assert np.max(np.abs(t.s_vert(x, y) + t.s_horiz(x, y) - 1)) <= TOL.complementarity


def test_against_finite_differences():
    a, b = 0.2, 0.1
    xs, ys, h, info = fd_harmonic(a, b, samples=15)
    X, Y = np.meshgrid(xs, ys, indexing="ij")
    assert info["residual"] < 1e-10
    assert np.max(np.abs(tile(a, b).h_local(X, Y) - h)) <= TOL.fd_oracle


def test_boundary_rejected():
    t = HarmonicTile.of(Rectangle.of(F(1, 8), F(3, 8), F(1, 8), F(1, 2)))
    assert 0 < float(t.h(0.2, 0.3)) < 1
    with pytest.raises(TileError):
        t.h(0.125, 0.3)
    with pytest.raises(TileError):
        height(t, t.a, 0.1)


def test_wrapping_rectangle():
    t = HarmonicTile.of(Rectangle.of(F(7, 8), F(1, 8), F(3, 4), F(1, 4)))
    assert t.a == pytest.approx(0.25) and t.b == pytest.approx(0.5)
    assert float(t.h(0.0, 0.0)) == pytest.approx(t.h_local(0.125, 0.25))


def test_embed_binding_circles():
    r = embed(0.3, 0.1, 0.0)
    assert np.allclose(r, [np.cos(0.2 * np.pi), np.sin(0.2 * np.pi), 0, 0], atol=1e-15)
    assert np.array_equal(embed(0.3, 0.1, 0.0), embed(0.7, 0.1, 0.0))
    r = embed(0.3, 0.1, 1.0)
    assert np.allclose(r, [0, 0, np.cos(0.6 * np.pi), np.sin(0.6 * np.pi)], atol=1e-15)
    assert np.array_equal(embed(0.3, 0.1, 1.0), embed(0.3, 0.9, 1.0))
    with pytest.raises(ValueError):
        embed(0, 0, 1.5)


def test_embed_unit_norm():
    rng = np.random.default_rng(0)
    pts = embed(rng.random(1000), rng.random(1000), rng.random(1000))
    assert np.max(np.abs(np.linalg.norm(pts, axis=-1) - 1)) <= 1e-12


def test_stereographic_pole():
    pole = embed(0.0, 0.5, 0.0)
    with pytest.raises(TileError, match="another pole"):
        stereographic(pole, pole)
    q = stereographic(embed(0.2, 0.3, 0.4), pole)
    assert q.shape == (3,) and np.all(np.isfinite(q))


def test_default_pole_avoids_spans():
    rects = [Rectangle.of(0, F(1, 4), 0, F(1, 4))]
    p = default_pole(rects)
    phi = np.arctan2(p[1], p[0]) / (2 * np.pi) % 1
    assert not (0 <= phi <= 0.25)


@pytest.mark.parametrize("kappa", [0.0, 0.5])
@pytest.mark.parametrize("corner", ["BL", "BR", "TL", "TR"])
def test_tangency(corner, kappa):
    t = tile(0.25, 0.2)
    for s in tangency_check(t, corner, [0.3, 0.5, 0.7], kappa):
        assert s.defect <= TOL.tangency
        assert s.contrast > 10 * s.defect


def test_foliation():
    sq = tile(0.25, 0.25)
    assert abs(foliation_slope(sq, 0.125, 0.125) + 1) <= TOL.centre_slope
    lines = foliation_streamlines(sq, [(0.125, 0.125), (0.05, 0.2)], step=5e-3 * 0.25)
    for ln in lines:
        assert np.all(ln.slopes < 0) and len(ln.points) > 10
    # near a horizontal side the leaves flatten out
    assert abs(foliation_slope(sq, 0.125, 1e-3 * 0.25)) < 0.05


def test_contact_field():
    rep = contact_field_check(tile(0.25, 0.2), samples=200)
    assert rep.transversality_failures == 0 and rep.min_pairing > 0
    assert rep.max_lie_residual <= TOL.lie_residual
    assert rep.tau0_defect <= TOL.binding_parallel and rep.tau1_defect <= TOL.binding_parallel


def test_bad_profile_rejected():
    with pytest.raises(ValueError):
        Profile(1.0, 1.0, 0.5).validate()


def test_crossing_separation():
    over = Rectangle.of(F(1, 4), F(3, 8), 0, F(1, 2))
    under = Rectangle.of(0, F(1, 2), F(1, 8), F(3, 8))
    rep = crossing_separation(over, under, n=51)
    assert rep.min_gap > 0 and rep.sign == 1
