import itertools
from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from rectsurf import fixtures as fx
from rectsurf.link import DiagramError, LinkDiagram, connected_components, orientations
from rectsurf.linking import (PlanarDrawing, linking_number, shift_lk_reference, tb_minus, tb_plus,
                              tb_report, writhe)
from rectsurf.oracles import gauss_linking_number
from rectsurf.selftest import _random_cut

seeds = st.integers(0, 10**6)


def test_minimal_square_values():
    R = fx.minimal_square()
    assert (tb_plus(R), tb_minus(R)) == (-1, -1)
    rng = fx.rng_for(0)
    for _ in range(5):
        assert writhe(R, cut=_random_cut(R, rng)) == 0


def test_half_side_square_tb():
    H = F(1, 2)
    R = LinkDiagram([(0, 0), (0, H), (H, 0), (H, H)])
    assert (tb_plus(R), tb_minus(R)) == (-1, -1)


def test_empty_diagram():
    R = LinkDiagram([])
    assert writhe(R) == 0
    with pytest.raises(DiagramError):
        tb_plus(R)


def test_trefoil_writhe_and_tb():
    R = fx.trefoil_staircase()
    assert abs(writhe(R)) == 3
    assert tb_plus(R) + tb_minus(R) == -5
    assert (tb_plus(R), tb_minus(R)) == (-6, 1)


def test_hopf_linking_number():
    R = fx.hopf_pair()
    K1, K2 = connected_components(R)
    assert abs(linking_number(R, split=[K1])) == 1
    rng = fx.rng_for(1)
    ref = linking_number(R, split=[K1])
    for _ in range(5):
        assert linking_number(R, split=[K1], cut=_random_cut(R, rng)) == ref


def test_unlinked_squares():
    sq = fx.minimal_square()
    R = LinkDiagram(list(sq) + list(sq.translated(F(1, 2) + F(1, 16), F(1, 2) + F(1, 16))))
    assert linking_number(R, split=[connected_components(R)[0]]) == 0


def test_split_must_be_union_of_components():
    R = fx.hopf_pair()
    with pytest.raises(DiagramError):
        linking_number(R, split=[R.vertices[0]])
    with pytest.raises(DiagramError):
        linking_number(R, split=[])


def test_cut_on_vertex_line_rejected():
    R = fx.minimal_square()
    with pytest.raises(DiagramError):
        tb_plus(R, cut=(R.thetas[0], F(1, 7)))


def test_hopf_linking_matches_gauss_integral():
    R = fx.hopf_pair()
    K1, K2 = connected_components(R)
    signs = orientations(R)[0]
    lk = linking_number(R, signs, split=[K1])
    o1 = {v: signs[v] for v in K1}
    o2 = {v: signs[v] for v in K2}
    assert round(gauss_linking_number(K1, o1, K2, o2)) == lk


def _corner_count(R, cut):
    """Vertices whose horizontal neighbour is to the left and vertical one above."""
    ct, cp = cut
    n = 0
    for v in R:
        h, u = R.horizontal_partner(v), R.vertical_partner(v)
        n += (h.theta - ct) % 1 < (v.theta - ct) % 1 and (u.phi - cp) % 1 > (v.phi - cp) % 1
    return n


@given(seeds)
def test_writhe_moves_with_corners(seed):
    # tb+ = writhe - #left-up corners for every cut; explains the cut
    # dependence of the writhe
    R = fx.random_link_diagram(seed)
    rng = fx.rng_for(seed)
    tp = tb_plus(R)
    for _ in range(3):
        cut = _random_cut(R, rng)
        assert tp == writhe(R, cut=cut) - _corner_count(R, cut)


def test_writhe_is_cut_dependent():
    R = fx.trefoil_staircase()
    rng = fx.rng_for(2)
    values = {writhe(R, cut=_random_cut(R, rng)) for _ in range(20)}
    assert len(values) > 1


@given(seeds)
def test_tb_identity(seed):
    R = fx.random_link_diagram(seed)
    assert tb_plus(R) + tb_minus(R) == -len(R) // 2


@given(seeds, st.sampled_from(["ne", "nw"]))
def test_fast_shift_matches_union(seed, direction):
    R = fx.random_link_diagram(seed, 4 + 2 * (seed % 8))
    rng = fx.rng_for(seed)
    cut = _random_cut(R, rng)
    for o in orientations(R)[:4]:
        fast = tb_plus(R, o, cut) if direction == "ne" else -tb_minus(R, o, cut)
        assert fast == shift_lk_reference(R, direction, o, cut)


@given(seeds)
def test_translation_equivariance(seed):
    # the default orientation depends on vertex order, so carry one across
    R = fx.random_link_diagram(seed, 10)
    T = R.translated(F(1, 3), F(1, 5))
    o = orientations(R)[-1]
    moved = {v.shifted(F(1, 3), F(1, 5)): s for v, s in o.items()}
    assert (tb_plus(T, moved), tb_minus(T, moved)) == (tb_plus(R, o), tb_minus(R, o))


def test_knot_tb_orientation_independent():
    for seed in range(15):
        R = fx.random_link_diagram(seed, 12)
        for K in connected_components(R):
            values = {(tb_plus(K, o), tb_minus(K, o)) for o in orientations(K)}
            assert len(values) == 1


def test_link_tb_reversal_invariant():
    for seed in range(15):
        R = fx.random_link_diagram(100 + seed, 16)
        for o in orientations(R):
            rev = {v: -s for v, s in o.items()}
            assert (tb_plus(R, o), tb_minus(R, o)) == (tb_plus(R, rev), tb_minus(R, rev))


def test_crossings_vertical_over():
    d = PlanarDrawing(fx.trefoil_staircase())
    assert d.crossings and all(c.over.kind == "vertical" for c in d.crossings)


def test_tb_report():
    rep = tb_report(fx.hopf_pair())
    assert rep.size == 8 and len(rep.components) == 2
    assert rep.as_dict()["tb_plus"] == rep.tb_plus
    assert rep.tb_plus + rep.tb_minus == -4
