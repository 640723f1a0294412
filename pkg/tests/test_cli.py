import json
import os

import pytest

from rectsurf import cli, selftest
from rectsurf import fixtures as fx
from rectsurf import io as rio
from rectsurf.moves import canonical_form


@pytest.fixture
def files(tmp_path):
    out = {}
    for name, obj in (("square", rio.diagram_to_json(fx.minimal_square())),
                      ("hopf", rio.diagram_to_json(fx.hopf_pair())),
                      ("knot10", rio.diagram_to_json(fx.random_link_diagram(0, 10))),
                      ("chain4", rio.surface_to_json(fx.chain(4))),
                      ("single", rio.surface_to_json(fx.single_rect()))):
        p = tmp_path / (name + ".json")
        p.write_text(rio.dumps(obj))
        out[name] = str(p)
    bad = tmp_path / "bad.json"
    bad.write_text('{"vertices": [{"theta": "0", "phi": "0"}]}')
    out["bad"] = str(bad)
    out["dir"] = tmp_path
    return out


def run(capsys, *argv):
    code = cli.main(list(argv))
    return code, capsys.readouterr()


def test_tb_text_and_json(files, capsys):
    code, cap = run(capsys, "tb", files["square"])
    assert code == 0 and "tb+=-1 tb-=-1 |R|=4" in cap.out
    code, cap = run(capsys, "tb", files["square"], "--json")
    assert json.loads(cap.out)["tb_plus"] == -1


def test_validate(files, capsys):
    assert run(capsys, "validate", files["chain4"])[0] == 0
    code, cap = run(capsys, "validate", files["hopf"], "--json")
    assert code == 0 and json.loads(cap.out)["components"] == 2
    code, cap = run(capsys, "validate", files["bad"])
    assert code == 1 and "error" in cap.err


def test_usage_errors(files, capsys):
    assert run(capsys)[0] == 2
    assert run(capsys, "nonsense")[0] == 2
    assert run(capsys, "check-representable", files["square"], "--lk", "x")[0] == 2
    assert run(capsys, "plot", files["chain4"], "--layers", "bogus", "--out", "x.svg")[0] == 2
    assert run(capsys, "stabilize", files["square"], "--type", "I", "--vertex", "first")[0] == 2
    assert run(capsys, "tb", str(files["dir"] / "missing.json"))[0] == 1


def test_classify_and_report(files, capsys):
    code, cap = run(capsys, "classify", files["chain4"])
    assert code == 0 and "annulus" in cap.out and "rel tb 0/-2" in cap.out
    rep = files["dir"] / "rep"
    code, cap = run(capsys, "classify", files["chain4"], "--json", "--report", str(rep))
    assert json.loads(cap.out)["euler_characteristic"] == 0
    assert (rep / "surface.svg").read_text().lstrip().startswith("<?xml")
    report = json.loads((rep / "classify.json").read_text())
    assert report["outputs"]["euler_characteristic"] == 0 and "tolerances" in report


def test_boundary_then_framing_value(files, capsys):
    out = str(files["dir"] / "bd.json")
    assert run(capsys, "boundary", files["single"], "--out", out)[0] == 0
    code, cap = run(capsys, "framing-value", out, "--framing", out, "--json")
    assert code == 0 and json.loads(cap.out)["total"] == 0


def test_representable(files, capsys):
    code, cap = run(capsys, "check-representable", files["square"], "--lk", "-1")
    assert code == 0 and "representable: True" in cap.out
    assert run(capsys, "check-representable", files["square"], "--lk", "2")[0] == 1


def test_moves_pipeline(files, capsys):
    code, cap = run(capsys, "moves", files["square"], "--json")
    sites = json.loads(cap.out)
    assert len(sites["stabilize"]) == 16 and sites["destabilize"] == [] and sites["exchange"] == []
    s6 = str(files["dir"] / "s6.json")
    trace = str(files["dir"] / "trace.json")
    assert run(capsys, "stabilize", files["square"], "--type", "II", "--vertex", "0",
               "--out", s6, "--trace", trace)[0] == 0
    code, cap = run(capsys, "tb", s6, "--json")
    assert (json.loads(cap.out)["tb_plus"], json.loads(cap.out)["tb_minus"]) == (-2, -1)
    back = str(files["dir"] / "back.json")
    assert run(capsys, "destabilize", s6, "--out", back)[0] == 0
    got = rio.diagram_from_json(rio.load(back))[0]
    assert canonical_form(got) == canonical_form(fx.minimal_square())
    code, cap = run(capsys, "replay", trace, "--json")
    assert rio.diagram_from_json(json.loads(cap.out))[0] == rio.diagram_from_json(rio.load(s6))[0]
    assert run(capsys, "destabilize", files["square"])[0] == 1
    assert run(capsys, "exchange", files["square"])[0] == 1


def test_explore(files, capsys):
    code, cap = run(capsys, "explore", files["square"], "--json")
    assert json.loads(cap.out)["rigid"] and json.loads(cap.out)["visited"] == 1
    out = str(files["dir"] / "ex.json")
    assert run(capsys, "exchange", files["knot10"], "--out", out)[0] == 0
    code, cap = run(capsys, "explore", files["knot10"], "--target", out, "--json")
    assert json.loads(cap.out)["status"] == "connected"


def test_mesh_and_plot(files, capsys):
    obj = str(files["dir"] / "m.obj")
    code, cap = run(capsys, "mesh", files["single"], "--res", "8", "--out", obj, "--json")
    assert code == 0 and json.loads(cap.out)["max_norm_error"] <= 1e-12
    assert open(obj).read().count("o tile_") == 1
    svg = str(files["dir"] / "p.svg")
    assert run(capsys, "plot", files["chain4"], "--layers", "giroux,dividing", "--out", svg)[0] == 0
    assert "<svg" in open(svg).read()
    assert run(capsys, "plot", files["hopf"], "--out", svg)[0] == 0
    assert run(capsys, "giroux", files["chain4"])[0] == 0


def test_fixtures_command(files, capsys):
    out = files["dir"] / "fx"
    assert run(capsys, "fixtures", "--out", str(out))[0] == 0
    assert (out / "minimal_square.json").exists()


def test_selftest_command(files, capsys, monkeypatch):
    monkeypatch.setattr(selftest, "CRITERIA", [(1, "always", lambda: (True, "fine"))])
    empty = files["dir"] / "nofixtures"
    os.makedirs(empty)
    rep = files["dir"] / "st"
    code, cap = run(capsys, "selftest", "--fixtures", str(empty), "--report", str(rep))
    assert code == 0 and "1/1 criteria passed" in cap.out
    assert json.loads((rep / "selftest.json").read_text())["outputs"]["passed"]
    monkeypatch.setattr(selftest, "CRITERIA", [(1, "never", lambda: (False, "broken"))])
    code, cap = run(capsys, "selftest", "--fixtures", str(empty), "--json")
    assert code == 1 and json.loads(cap.out)["criteria"][0]["detail"] == "broken"
