import json

import pytest
from hypothesis import given, settings, strategies as st

from rectsurf import fixtures as fx
from rectsurf import io as rio
from rectsurf.framing import mixed_framing
from rectsurf.link import DiagramError, default_orientation
from rectsurf.moves import MoveStep, exchange_candidates, replay, stabilization_sites
from rectsurf.surface import classify


@settings(max_examples=30)
@given(st.integers(0, 10**6))
def test_diagram_round_trip(seed):
    R = fx.random_link_diagram(seed)
    signs = default_orientation(R)
    back, s2 = rio.diagram_from_json(json.loads(rio.dumps(rio.diagram_to_json(R, signs))))
    assert back == R and s2 == signs


def test_surface_round_trip():
    for make in fx.SURFACES.values():
        P = make()
        Q = rio.surface_from_json(json.loads(rio.dumps(rio.surface_to_json(P))))
        assert Q.rectangles == P.rectangles


def test_framing_round_trip():
    R = fx.hopf_pair()
    f = mixed_framing(R)
    assert rio.framing_from_json(R, rio.framing_to_json(f)) == f


def test_trace_round_trip():
    R = fx.minimal_square()
    s = stabilization_sites(R, "I")[0]
    states = replay(R, [MoveStep("stabilize", s)])
    S = states[-1]
    from rectsurf.moves import destabilization_sites
    d = destabilization_sites(S)[0]
    steps = [MoveStep("stabilize", s), MoveStep("destabilize", d)]
    T = fx.random_link_diagram(0, 10)
    steps_x = [MoveStep("exchange", exchange_candidates(T)[0])]
    for start, st_ in ((R, steps), (T, steps_x)):
        obj = json.loads(rio.dumps(rio.trace_to_json(start, st_)))
        start2, steps2 = rio.trace_from_json(obj)
        assert start2 == start and steps2 == st_
        assert replay(start2, steps2)[-1] == replay(start, st_)[-1]


def test_report_json():
    d = rio.report_to_json(classify(fx.chain(4)))
    assert d["euler_characteristic"] == 0 and d["orientable"] and not d["closed"]
    assert d["components"][0]["name"] == "annulus"
    assert sorted((b["rel_tb_plus"], b["rel_tb_minus"]) for b in d["boundary"]) == [(0, -2), (0, -2)]
    assert json.loads(rio.dumps(d)) == d


@pytest.mark.parametrize("obj", [
    [], {"points": []}, {"vertices": [{"theta": "1/2"}]},
    {"vertices": [{"theta": "x", "phi": "0"}]}, {"vertices": [{"theta": 0.5, "phi": "0"}]},
    {"vertices": [{"theta": "1/0", "phi": "0"}]},
])
def test_bad_diagrams(obj):
    with pytest.raises(rio.FormatError):
        rio.diagram_from_json(obj)


def test_bad_signs():
    obj = rio.diagram_to_json(fx.minimal_square())
    with pytest.raises(rio.FormatError):
        rio.diagram_from_json(dict(obj, signs=["+"]))
    with pytest.raises(rio.FormatError):
        rio.diagram_from_json(dict(obj, signs=["+", "+", "?", "-"]))
    with pytest.raises(DiagramError):
        rio.diagram_from_json(dict(obj, signs=["+", "+", "+", "+"]))


def test_bad_surfaces(tmp_path):
    for obj in ({}, {"rectangles": [{"theta": ["0"]}]}, {"rectangles": [{"theta": ["0", "1/2"]}]}):
        with pytest.raises(rio.FormatError):
            rio.surface_from_json(obj)
    with pytest.raises(rio.FormatError):
        rio.framing_from_json(fx.minimal_square(), {"edges": [{}]})
    with pytest.raises(rio.FormatError):
        rio.site_from_json("twist", {})
    p = tmp_path / "bad.json"
    p.write_text("{not json")
    with pytest.raises(rio.FormatError):
        rio.load(str(p))
