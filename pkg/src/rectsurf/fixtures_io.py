"""The on-disk fixture library: one JSON file per fixture plus a
``.expected.json`` sidecar with the values the package must reproduce.

Integers, booleans and lists are compared exactly.  Reals are stored as
``{"value": x, "tolerance": name}`` and compared against the named entry of
the tolerance table."""

from __future__ import annotations

import os
import warnings
from importlib import resources

from . import fixtures as fx
from . import io as rio
from .framing import framing_range, framing_values_exhaustive
from .link import LinkDiagram, connected_components
from .linking import linking_number, tb_minus, tb_plus
from .tolerances import TOL

FORMAT_VERSION = 1
SUFFIX = ".expected.json"


def library() -> dict:
    """name -> diagram, for every fixture written to disk."""
    out = {name: make() for name, make in fx.LINKS.items()}
    out.update({name: make() for name, make in fx.SURFACES.items()})
    out["random_link_seed7"] = fx.random_link_diagram(7)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        out["random_surface_seed7"] = fx.random_surface_diagram(7, 6)
    return out


def _real(value: float, tolerance: str) -> dict:
    return {"value": float(value), "tolerance": tolerance}


def link_expected(R: LinkDiagram) -> dict:
    comps = connected_components(R)
    ints = {"vertices": len(R), "components": len(comps),
            "tb_plus": tb_plus(R), "tb_minus": tb_minus(R),
            "framing_range": [list(p) for p in framing_range(R)]}
    if len(R.edges) <= 10 and R.genericity().is_generic:
        ints["framing_values"] = sorted(framing_values_exhaustive(R))
    if len(comps) > 1:
        ints["linking_number_first_component"] = linking_number(R, split=[comps[0]])
    return {"integers": ints, "reals": {}}


def surface_expected(P) -> dict:
    from .mesh import check_mesh, surface_mesh
    from .surface import classify
    from .tiles import HarmonicTile

    rep = classify(P)
    ints = {"rectangles": len(P.rectangles), "euler_characteristic": rep.euler_characteristic,
            "orientable": rep.orientable, "closed": rep.closed,
            "components": sorted(c.name for c in rep.components),
            "boundary": sorted([b.length, b.rel_tb_plus, b.rel_tb_minus] for b in rep.boundary),
            "dividing_curves": len(rep.giroux.dividing),
            "closed_dividing_curves": sum(c.closed for c in rep.giroux.dividing)}
    reals = {}
    for i, r in enumerate(P.rectangles):
        t = HarmonicTile.of(r)
        reals["h_centre_%d" % i] = _real(t.h_local(t.a / 2, t.b / 2), "complementarity")
        reals["h_probe_%d" % i] = _real(t.h_local(t.a / 3, t.b / 4), "complementarity")
    chk = check_mesh(surface_mesh(P, 0.0, 16))
    reals["mesh_max_norm_error"] = _real(chk.max_norm_error, "unit_norm")
    return {"integers": ints, "reals": reals}


def expected(obj) -> dict:
    body = link_expected(obj) if isinstance(obj, LinkDiagram) else surface_expected(obj)
    return dict(body, version=FORMAT_VERSION, kind="link" if isinstance(obj, LinkDiagram) else "surface")


def write_fixtures(out_dir: str) -> list[str]:
    os.makedirs(out_dir, exist_ok=True)
    written = []
    for name, obj in library().items():
        data = rio.diagram_to_json(obj) if isinstance(obj, LinkDiagram) else rio.surface_to_json(obj)
        for path, payload in ((name + ".json", data), (name + SUFFIX, expected(obj))):
            full = os.path.join(out_dir, path)
            with open(full, "w") as fh:
                fh.write(rio.dumps(payload))
            written.append(full)
    return written


def compare(want: dict, got: dict) -> list[str]:
    """Differences between two sidecars, as readable strings."""
    problems = []
    for key, w in want["integers"].items():
        g = got["integers"].get(key)
        if g != w:
            problems.append("%s: expected %r, got %r" % (key, w, g))
    for key, w in want["reals"].items():
        g = got["reals"].get(key)
        if g is None:
            problems.append("%s: missing" % key)
            continue
        tol = getattr(TOL, w["tolerance"])
        if abs(g["value"] - w["value"]) > tol:
            problems.append("%s: expected %.17g, got %.17g (tolerance %s = %g)"
                            % (key, w["value"], g["value"], w["tolerance"], tol))
    return problems


def check_fixture_dir(path: str) -> list[str]:
    """Recompute every sidecar in ``path``; an empty list means all match."""
    mismatches = []
    for fname in sorted(os.listdir(path)):
        if not fname.endswith(SUFFIX):
            continue
        name = fname[:-len(SUFFIX)]
        want = rio.load(os.path.join(path, fname))
        raw = rio.load(os.path.join(path, name + ".json"))
        obj = rio.surface_from_json(raw) if want["kind"] == "surface" else rio.diagram_from_json(raw)[0]
        mismatches += ["%s: %s" % (name, p) for p in compare(want, expected(obj))]
    return mismatches


def default_fixture_dir():
    """The fixture directory shipped inside the package, if present."""
    path = resources.files("rectsurf") / "data" / "fixtures"
    return str(path) if path.is_dir() else None
