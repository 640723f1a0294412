from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from rectsurf import fixtures as fx
from rectsurf.framing import (Framing, NonGenericDiagramError, all_framings, component_value_sets,
                              extremal_count, extremal_framing, framing_range, framing_value,
                              framing_values_exhaustive, mixed_framing, parity_ok, relative_tb,
                              representability_check)
from rectsurf.link import DiagramError, LinkDiagram, connected_components
from rectsurf.linking import tb_minus, tb_plus


def test_square_values():
    R = fx.minimal_square()
    assert framing_values_exhaustive(R) == {-1, 0, 1}
    assert framing_value(R, mixed_framing(R)).total == -1
    assert framing_value(R, extremal_framing(R)).total == 1


def test_square_range():
    assert framing_range(fx.minimal_square()) == [(-1, 1)]
    assert framing_range(LinkDiagram([])) == []


def test_values_fill_range():
    # component values step by one between tb+ and -tb-
    for seed in range(6):
        R = fx.random_link_diagram(seed, 8)
        if not R.genericity().is_generic:
            continue
        for vals, (lo, hi) in zip(component_value_sets(R), framing_range(R)):
            assert vals == set(range(lo, hi + 1))


def test_extremal_counts_even():
    R = fx.trefoil_staircase()
    fs = list(all_framings(R))[:64]
    assert parity_ok(R, fs)
    assert extremal_count(R, mixed_framing(R)) == 0
    assert extremal_count(R, extremal_framing(R)) == len(R)


def test_relative_tb():
    R = fx.minimal_square()
    r = relative_tb(R, [-1])[0]
    assert (r.tb_plus, r.tb_minus) == (0, -2) and r.representable
    r = relative_tb(R, {0: 0})[0]
    assert (r.tb_plus, r.tb_minus) == (-1, -1)


def test_representability():
    R = fx.minimal_square()
    assert representability_check(R, [1]).overall
    chk = representability_check(R, [2])
    assert chk.passes == (False,) and not chk.overall


def test_relative_tb_needs_every_component():
    with pytest.raises(DiagramError):
        relative_tb(fx.hopf_pair(), [0])


def test_from_pairs_and_check():
    R = fx.minimal_square()
    f = mixed_framing(R)
    g = Framing.from_pairs(R, f.pairs())
    assert g == f
    with pytest.raises(DiagramError):
        Framing.from_pairs(R, f.pairs()[:-1])
    e = R.edges[0]
    assert f.flipped(e).greater[e] == e.other(f.greater[e])


def test_half_length_edge_rejected():
    H = F(1, 2)
    R = LinkDiagram([(0, 0), (0, H), (H, 0), (H, H)])
    with pytest.raises(NonGenericDiagramError):
        framing_value(R, mixed_framing(R))


@given(st.integers(0, 10**6))
def test_mixed_and_extremal_endpoints(seed):
    R = fx.random_link_diagram(seed, 10)
    if not R.genericity().is_generic:
        return
    comps = connected_components(R)
    lo = framing_value(R, mixed_framing(R)).per_component
    hi = framing_value(R, extremal_framing(R)).per_component
    assert lo == tuple(tb_plus(K) for K in comps)
    assert hi == tuple(-tb_minus(K) for K in comps)
