"""Command-line front end.

Exit codes: 0 success, 1 validation error (bad diagram, illegal move,
failed check), 2 usage error."""

from __future__ import annotations

import argparse
import os
import sys
import time
from fractions import Fraction

from . import __version__
from . import io as rio
from .link import DiagramError, LinkDiagram, connected_components
from .tolerances import TOL

EXIT_OK, EXIT_INVALID, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _out(args, payload: dict, text: str) -> None:
    if args.json:
        sys.stdout.write(rio.dumps(payload))
    else:
        print(text)


def _write(path: str, text: str) -> None:
    d = os.path.dirname(path)
    if d:
        os.makedirs(d, exist_ok=True)
    with open(path, "w") as fh:
        fh.write(text)


def _report(args, command: str, outputs: dict, figures: dict, started: float) -> None:
    """Write a run report (JSON) plus SVG figures into --report DIR."""
    if not getattr(args, "report", None):
        return
    os.makedirs(args.report, exist_ok=True)
    written = {}
    for name, svg in figures.items():
        path = os.path.join(args.report, name + ".svg")
        _write(path, svg)
        written[name] = path
    report = {"command": command, "version": __version__,
              "inputs": {k: v for k, v in vars(args).items() if k not in ("func", "report")},
              "outputs": outputs, "figures": written,
              "timings": {"seconds": round(time.perf_counter() - started, 3)},
              "tolerances": TOL.as_dict()}
    _write(os.path.join(args.report, command + ".json"), rio.dumps(report))


def load_diagram(path: str):
    return rio.diagram_from_json(rio.load(path))


def load_surface(path: str):
    return rio.surface_from_json(rio.load(path))


def _vertex(R: LinkDiagram, text: str):
    """A vertex given as an index into the sorted vertex list or as 'p/q,p/q'."""
    if "," in text:
        t, p = text.split(",", 1)
        v = (rio._q(t.strip()), rio._q(p.strip()))
        from .torus import TorusPoint
        v = TorusPoint.of(*v)
        if v not in R:
            raise DiagramError("%s is not a vertex of the diagram" % (v,))
        return v
    try:
        i = int(text)
    except ValueError:
        raise UsageError("vertex must be an index or 'theta,phi'") from None
    if not 0 <= i < len(R):
        raise DiagramError("vertex index %d out of range 0..%d" % (i, len(R) - 1))
    return R.vertices[i]


# -- link commands ------------------------------------------------------------

def cmd_validate(args):
    obj = rio.load(args.file)
    if "rectangles" in obj:
        P = rio.surface_from_json(obj)
        _out(args, {"valid": True, "kind": "surface", "rectangles": len(P.rectangles)},
             "valid surface diagram with %d rectangles" % len(P.rectangles))
    else:
        R, signs = rio.diagram_from_json(obj)
        g = R.genericity()
        _out(args, {"valid": True, "kind": "link", "vertices": len(R),
                    "components": len(connected_components(R)), "generic": g.is_generic},
             "valid link diagram: %d vertices, %d components%s" % (
                 len(R), len(connected_components(R)), "" if g.is_generic else " (non-generic)"))
    return EXIT_OK


def cmd_tb(args):
    from .linking import tb_report
    R, signs = load_diagram(args.file)
    rep = tb_report(R, signs)
    lines = ["tb+=%d tb-=%d |R|=%d" % (rep.tb_plus, rep.tb_minus, rep.size)]
    for i, (n, p, m) in enumerate(rep.components):
        lines.append("  component %d: %d vertices, tb+=%d tb-=%d" % (i, n, p, m))
    _out(args, rep.as_dict(), "\n".join(lines))
    return EXIT_OK


def cmd_framing_value(args):
    from .framing import framing_value
    R, signs = load_diagram(args.file)
    obj = rio.load(args.framing)
    # accept a bare framing or the output of 'boundary'
    f = rio.framing_from_json(R, obj.get("framing", obj) if isinstance(obj, dict) else obj)
    val = framing_value(R, f, signs)
    _out(args, {"per_component": list(val.per_component), "total": val.total},
         "<f>=%d per component %s" % (val.total, list(val.per_component)))
    return EXIT_OK


def cmd_check_representable(args):
    from .framing import representability_check
    R, _ = load_diagram(args.file)
    try:
        lks = [int(x) for x in args.lk.split(",")]
    except ValueError:
        raise UsageError("--lk takes comma-separated integers") from None
    rep = representability_check(R, lks)
    comps = [{"tb_plus_rel": c.tb_plus, "tb_minus_rel": c.tb_minus, "representable": c.representable}
             for c in rep.components]
    _out(args, {"components": comps, "representable": rep.overall},
         "\n".join("component %d: tb+(K;F)=%d tb-(K;F)=%d %s" % (
             i, c.tb_plus, c.tb_minus, "ok" if c.representable else "NOT representable")
             for i, c in enumerate(rep.components)) + "\nrepresentable: %s" % rep.overall)
    return EXIT_OK if rep.overall else EXIT_INVALID


# -- surface commands ---------------------------------------------------------

def cmd_classify(args):
    from .surface import classify
    started = time.perf_counter()
    P = load_surface(args.file)
    rep = classify(P)
    d = rio.report_to_json(rep)
    text = ["chi=%d orientable=%s closed=%s" % (rep.euler_characteristic, rep.orientable, rep.closed)]
    for c in rep.components:
        text.append("  component %s: %s (chi=%d, %d boundary components)" % (
            list(c.rectangles), c.name, c.euler_characteristic, c.boundary_components))
    for b in rep.boundary:
        text.append("  boundary of length %d: rel tb %d/%d" % (b.length, b.rel_tb_plus, b.rel_tb_minus))
    if args.json:
        sys.stdout.write(rio.dumps(d))
    else:
        print("\n".join(text))
    if getattr(args, "report", None):
        from .plot import torus_projection_svg
        _report(args, "classify", d, {"surface": torus_projection_svg(P)}, started)
    return EXIT_OK


def cmd_boundary(args):
    from .surface import boundary, boundary_framing
    P = load_surface(args.file)
    R = boundary(P)
    payload = rio.diagram_to_json(R)
    if len(R) and R.genericity().is_generic:
        payload["framing"] = rio.framing_to_json(boundary_framing(P).framing)
    text = rio.dumps(payload)
    if args.out:
        _write(args.out, text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_giroux(args):
    from .surface import giroux_and_dividing
    P = load_surface(args.file)
    g = giroux_and_dividing(P)
    payload = {"giroux_edges": [rio.point_to_json(v) for v in g.giroux_edges],
               "dividing": [{"rectangles": list(c.rectangles), "closed": c.closed,
                             "nodes": [rio.point_to_json(v) for v in c.nodes]} for c in g.dividing]}
    _out(args, payload, "%d Giroux edges, %d dividing curves (%d closed)" % (
        len(g.giroux_edges), len(g.dividing), sum(c.closed for c in g.dividing)))
    return EXIT_OK


# -- moves --------------------------------------------------------------------

def _emit_diagram(args, R, signs, steps, start):
    payload = rio.diagram_to_json(R, signs)
    if args.out:
        _write(args.out, rio.dumps(payload))
    if args.trace:
        _write(args.trace, rio.dumps(rio.trace_to_json(start, steps)))
    if args.json or not args.out:
        sys.stdout.write(rio.dumps(payload))


def cmd_moves(args):
    from .moves import destabilization_sites, exchange_candidates, stabilization_sites
    R, _ = load_diagram(args.file)
    st = stabilization_sites(R)
    de = destabilization_sites(R)
    ex = exchange_candidates(R)
    payload = {"stabilize": [dict(rio.site_to_json(s), type=s.type,
                                  vertex_index=R.vertices.index(s.vertex)) for s in st],
               "destabilize": [rio.site_to_json(s) for s in de],
               "exchange": [rio.site_to_json(s) for s in ex]}
    _out(args, payload, "%d stabilization, %d destabilization, %d exchange sites" % (len(st), len(de), len(ex)))
    return EXIT_OK


def cmd_stabilize(args):
    from .moves import MoveStep, QUADRANTS, carry_orientation, stabilization_site, stabilize
    R, signs = load_diagram(args.file)
    v = _vertex(R, args.vertex)
    quads = QUADRANTS[args.type]
    site = stabilization_site(R, v, quads[args.choice])
    S = stabilize(R, site)
    _emit_diagram(args, S, carry_orientation(signs, site) if signs else None,
                  [MoveStep("stabilize", site)], R)
    return EXIT_OK


def cmd_destabilize(args):
    from .moves import MoveStep, carry_orientation, destabilization_sites, destabilize
    R, signs = load_diagram(args.file)
    sites = destabilization_sites(R)
    if not sites:
        raise DiagramError("no destabilization available")
    if args.index is None:
        site = sites[0]
    elif 0 <= args.index < len(sites):
        site = sites[args.index]
    else:
        raise DiagramError("destabilization index %d out of range 0..%d" % (args.index, len(sites) - 1))
    S = destabilize(R, site)
    _emit_diagram(args, S, carry_orientation(signs, site) if signs else None,
                  [MoveStep("destabilize", site)], R)
    return EXIT_OK


def cmd_exchange(args):
    from .moves import MoveStep, apply_exchange, carry_orientation, exchange_candidates
    R, signs = load_diagram(args.file)
    sites = exchange_candidates(R)
    if not sites:
        raise DiagramError("no exchange move available")
    i = args.index or 0
    if not 0 <= i < len(sites):
        raise DiagramError("exchange index %d out of range 0..%d" % (i, len(sites) - 1))
    S = apply_exchange(R, sites[i])
    _emit_diagram(args, S, carry_orientation(signs, sites[i]) if signs else None,
                  [MoveStep("exchange", sites[i])], R)
    return EXIT_OK


def cmd_explore(args):
    from .moves import explore_exchange_class
    R, _ = load_diagram(args.file)
    target = load_diagram(args.target)[0] if args.target else None
    res = explore_exchange_class(R, args.max_nodes, args.max_seconds, target)
    payload = {"visited": res.visited, "rigid": res.is_rigid, "complete": res.complete,
               "status": res.status, "target_found": res.target_found, "target_depth": res.target_depth}
    _out(args, payload, "visited %d classes, %s%s" % (res.visited, res.status, " (rigid)" if res.is_rigid else ""))
    return EXIT_OK


def cmd_replay(args):
    from .moves import replay
    start, steps = rio.trace_from_json(rio.load(args.file))
    out = replay(start, steps)
    _emit_diagram(args, out[-1], None, steps, start)
    return EXIT_OK


# -- numerics -----------------------------------------------------------------

def cmd_mesh(args):
    from .mesh import check_mesh, surface_mesh
    P = load_surface(args.file)
    pole = None
    if args.pole:
        from .tiles import embed
        t, p, tau = (float(Fraction(x)) for x in args.pole.split(","))
        pole = embed(t, p, tau)
    M = surface_mesh(P, args.kappa, args.res, pole)
    _write(args.out, M.to_obj())
    chk = check_mesh(M)
    _out(args, {"vertices": len(M.r4), "faces": len(M.faces), "out": args.out,
                "max_norm_error": chk.max_norm_error, "boundary_edges": chk.boundary_edges,
                "nonmanifold_edges": chk.nonmanifold_edges},
         "wrote %s: %d vertices, %d faces" % (args.out, len(M.r4), len(M.faces)))
    return EXIT_OK


def cmd_plot(args):
    from .plot import LAYERS, torus_projection_svg
    obj = rio.load(args.file)
    layers = tuple(x.strip() for x in args.layers.split(",")) if args.layers else LAYERS
    unknown = set(layers) - set(LAYERS)
    if unknown:
        raise UsageError("unknown layer(s): %s (choose from %s)" % (", ".join(sorted(unknown)), ",".join(LAYERS)))
    if "rectangles" in obj:
        P = rio.surface_from_json(obj)
        svg = torus_projection_svg(P, ("rectangles",) + layers, kappa=args.kappa)
    else:
        svg = torus_projection_svg(rio.diagram_from_json(obj)[0])
    _write(args.out, svg)
    _out(args, {"out": args.out, "layers": list(layers)}, "wrote %s" % args.out)
    return EXIT_OK


# -- fixtures and self test ---------------------------------------------------

def cmd_fixtures(args):
    from .fixtures_io import write_fixtures
    written = write_fixtures(args.out)
    _out(args, {"written": written}, "wrote %d files to %s" % (len(written), args.out))
    return EXIT_OK


def cmd_selftest(args):
    from .fixtures_io import check_fixture_dir, default_fixture_dir
    from .selftest import run_all
    started = time.perf_counter()
    results = run_all(echo=(lambda s: None) if args.json else print)
    fixture_dir = args.fixtures or default_fixture_dir()
    mismatches = check_fixture_dir(fixture_dir) if fixture_dir else []
    ok = all(r.passed for r in results) and not mismatches
    payload = {"criteria": [{"number": r.number, "name": r.name, "passed": r.passed,
                             "detail": r.detail, "seconds": round(r.seconds, 2)} for r in results],
               "fixture_mismatches": mismatches, "passed": ok}
    if args.json:
        sys.stdout.write(rio.dumps(payload))
    else:
        for m in mismatches:
            print("fixture mismatch: %s" % m)
        print("%d/%d criteria passed; fixtures %s" % (
            sum(r.passed for r in results), len(results), "ok" if not mismatches else "MISMATCH"))
    _report(args, "selftest", payload, {}, started)
    return EXIT_OK if ok else EXIT_INVALID


# -- parser -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="rectsurf", description="Rectangular diagrams of links and surfaces.")
    p.add_argument("--version", action="version", version="%(prog)s " + __version__)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable JSON on stdout")
    sub = p.add_subparsers(dest="command", metavar="command")

    def add(name, func, help, file=True):
        sp = sub.add_parser(name, parents=[common], help=help)
        if file:
            sp.add_argument("file")
        sp.set_defaults(func=func)
        return sp

    add("validate", cmd_validate, "validate a diagram or surface file")
    add("tb", cmd_tb, "Thurston-Bennequin numbers of a link diagram")
    sp = add("framing-value", cmd_framing_value, "the framing invariant <f>")
    sp.add_argument("--framing", required=True, help="framing JSON file")
    sp = add("check-representable", cmd_check_representable, "check lk(K, K^F) against the tb range")
    sp.add_argument("--lk", required=True, help="comma-separated lk(K, K^F) per component")
    sp = add("classify", cmd_classify, "topology, boundary and dividing set of a surface")
    sp.add_argument("--report", metavar="DIR", help="also write a JSON run report and an SVG figure")
    sp = add("boundary", cmd_boundary, "boundary diagram (and framing) of a surface")
    sp.add_argument("--out")
    add("giroux", cmd_giroux, "Giroux edges and dividing curves")
    add("moves", cmd_moves, "list legal moves").add_argument("--list", action="store_true",
                                                             help="list all sites (default)")
    for name, func, help in (("stabilize", cmd_stabilize, "stabilize at a vertex"),
                             ("destabilize", cmd_destabilize, "destabilize"),
                             ("exchange", cmd_exchange, "apply an exchange move"),
                             ("replay", cmd_replay, "replay a move trace")):
        sp = add(name, func, help)
        sp.add_argument("--out", help="write the resulting diagram here")
        if name != "replay":
            sp.add_argument("--trace", help="write a replayable move trace here")
        else:
            sp.set_defaults(trace=None)
        if name == "stabilize":
            sp.add_argument("--type", choices=("I", "II"), required=True)
            sp.add_argument("--vertex", required=True, help="index in sorted order, or 'theta,phi'")
            sp.add_argument("--choice", type=int, choices=(0, 1), default=0,
                            help="which of the two squares of this type (default 0)")
        elif name in ("destabilize", "exchange"):
            sp.add_argument("--index", type=int, help="site index as listed by 'moves'")
    sp = add("explore", cmd_explore, "search the exchange class")
    sp.add_argument("--max-nodes", type=int, default=10000)
    sp.add_argument("--max-seconds", type=float, default=30.0)
    sp.add_argument("--target", help="stop when this diagram is reached")
    sp = add("mesh", cmd_mesh, "OBJ mesh of the surface in R^3")
    sp.add_argument("--kappa", type=float, default=0.0)
    sp.add_argument("--res", type=int, default=64)
    sp.add_argument("--pole", help="projection pole as 'theta,phi,tau'")
    sp.add_argument("--out", required=True)
    sp = add("plot", cmd_plot, "SVG torus projection")
    sp.add_argument("--layers", help="comma-separated subset of vertices,framing,giroux,dividing,streamlines")
    sp.add_argument("--kappa", type=float, default=0.0)
    sp.add_argument("--out", required=True)
    sp = add("fixtures", cmd_fixtures, "write the fixture library", file=False)
    sp.add_argument("--out", default="fixtures")
    sp = add("selftest", cmd_selftest, "run the acceptance suite", file=False)
    sp.add_argument("--fixtures", help="fixture directory to compare against")
    sp.add_argument("--report", metavar="DIR", help="also write a JSON run report")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:          # argparse exits 2 on usage errors, 0 on --help
        return int(exc.code or 0)
    if not getattr(args, "func", None):
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        print("usage error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE
    except (DiagramError, ValueError, KeyError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_INVALID
    except OSError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
