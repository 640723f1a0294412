"""JSON formats.  Every rational is written as a reduced "p/q" string."""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Optional

from .framing import Framing
from .link import DiagramError, LinkDiagram, check_orientation
from .moves import DestabilizationSite, ExchangeSite, MoveStep, StabilizationSite
from .surface import Rectangle, SurfaceDiagram, SurfaceReport, validate_surface_diagram
from .torus import TorusPoint, format_fraction, parse_fraction


class FormatError(DiagramError):
    pass


def _q(text) -> Fraction:
    if not isinstance(text, (str, int)) or isinstance(text, bool):
        raise FormatError("expected a 'p/q' string, got %r" % (text,))
    try:
        return parse_fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise FormatError("bad rational %r: %s" % (text, exc)) from None


def point_to_json(v: TorusPoint) -> dict:
    return {"theta": format_fraction(v.theta), "phi": format_fraction(v.phi)}


def point_from_json(obj) -> TorusPoint:
    try:
        return TorusPoint.of(_q(obj["theta"]), _q(obj["phi"]))
    except (KeyError, TypeError):
        raise FormatError("a vertex needs 'theta' and 'phi' fields: %r" % (obj,)) from None


# -- link diagrams ------------------------------------------------------------

def diagram_to_json(R: LinkDiagram, signs: Optional[dict] = None) -> dict:
    out = {"vertices": [point_to_json(v) for v in R.vertices]}
    if signs is not None:
        out["signs"] = ["+" if signs[v] > 0 else "-" for v in R.vertices]
    return out


def diagram_from_json(obj) -> tuple[LinkDiagram, Optional[dict]]:
    if not isinstance(obj, dict) or "vertices" not in obj:
        raise FormatError("a diagram file needs a 'vertices' list")
    pts = [point_from_json(v) for v in obj["vertices"]]
    R = LinkDiagram(pts)
    signs = None
    if "signs" in obj:
        if len(obj["signs"]) != len(pts):
            raise FormatError("'signs' must have one entry per vertex")
        table = {"+": 1, "-": -1}
        try:
            signs = {v: table[s] for v, s in zip(pts, obj["signs"])}
        except KeyError as exc:
            raise FormatError("signs must be '+' or '-', got %s" % exc) from None
        check_orientation(R, signs)
    return R, signs


# -- surfaces -----------------------------------------------------------------

def rectangle_to_json(r: Rectangle) -> dict:
    return {"theta": [format_fraction(r.theta.start), format_fraction(r.theta.end)],
            "phi": [format_fraction(r.phi.start), format_fraction(r.phi.end)]}


def surface_to_json(P: SurfaceDiagram) -> dict:
    return {"rectangles": [rectangle_to_json(r) for r in P.rectangles]}


def surface_from_json(obj) -> SurfaceDiagram:
    if not isinstance(obj, dict) or "rectangles" not in obj:
        raise FormatError("a surface file needs a 'rectangles' list")
    rects = []
    for item in obj["rectangles"]:
        try:
            (t1, t2), (p1, p2) = item["theta"], item["phi"]
        except (KeyError, TypeError, ValueError):
            raise FormatError("a rectangle needs 'theta' and 'phi' pairs: %r" % (item,)) from None
        try:
            rects.append(Rectangle.of(_q(t1), _q(t2), _q(p1), _q(p2)))
        except ValueError as exc:
            raise FormatError(str(exc)) from None
    return validate_surface_diagram(rects)


# -- framings -----------------------------------------------------------------

def framing_to_json(f: Framing) -> dict:
    return {"edges": [{"from": point_to_json(lo), "to": point_to_json(hi)} for lo, hi in f.pairs()]}


def framing_from_json(R: LinkDiagram, obj) -> Framing:
    try:
        pairs = [(point_from_json(e["from"]), point_from_json(e["to"])) for e in obj["edges"]]
    except (KeyError, TypeError):
        raise FormatError("a framing file needs 'edges' with 'from' and 'to'") from None
    return Framing.from_pairs(R, pairs)


# -- move traces --------------------------------------------------------------

def site_to_json(site) -> dict:
    if isinstance(site, StabilizationSite):
        return {"vertex": point_to_json(site.vertex), "dtheta": format_fraction(site.dtheta),
                "dphi": format_fraction(site.dphi)}
    if isinstance(site, DestabilizationSite):
        return {"corner": point_to_json(site.corner), "removed": [point_to_json(v) for v in site.removed],
                "restored": point_to_json(site.restored), "type": site.type}
    if isinstance(site, ExchangeSite):
        return {"kind": site.kind, "first": format_fraction(site.first), "second": format_fraction(site.second)}
    raise TypeError("unknown site %r" % (site,))


def site_from_json(kind: str, obj):
    if kind == "stabilize":
        return StabilizationSite(point_from_json(obj["vertex"]), _q(obj["dtheta"]), _q(obj["dphi"]))
    if kind == "destabilize":
        return DestabilizationSite(point_from_json(obj["corner"]),
                                   tuple(point_from_json(v) for v in obj["removed"]),
                                   point_from_json(obj["restored"]), obj["type"])
    if kind == "exchange":
        return ExchangeSite(obj["kind"], _q(obj["first"]), _q(obj["second"]))
    raise FormatError("unknown move kind %r" % kind)


def trace_to_json(start: LinkDiagram, steps) -> dict:
    return {"start": diagram_to_json(start),
            "steps": [{"kind": s.kind, "site": site_to_json(s.site)} for s in steps]}


def trace_from_json(obj) -> tuple[LinkDiagram, list[MoveStep]]:
    start, _ = diagram_from_json(obj["start"])
    steps = [MoveStep(s["kind"], site_from_json(s["kind"], s["site"])) for s in obj["steps"]]
    return start, steps


# -- reports ------------------------------------------------------------------

def report_to_json(rep: SurfaceReport) -> dict:
    g = rep.giroux
    return {
        "euler_characteristic": rep.euler_characteristic,
        "orientable": rep.orientable,
        "closed": rep.closed,
        "cells": {"V": rep.complex.V, "E": rep.complex.E, "F": rep.complex.F},
        "components": [
            {"rectangles": list(c.rectangles), "euler_characteristic": c.euler_characteristic,
             "orientable": c.orientable, "boundary_components": c.boundary_components,
             "genus": c.genus, "crosscaps": c.crosscaps, "name": c.name}
            for c in rep.components],
        "boundary": [
            {"vertices": [point_to_json(v) for v in b.vertices], "length": b.length,
             "surface_component": b.surface_component, "tb_plus": b.tb_plus, "tb_minus": b.tb_minus,
             "framing": b.framing, "rel_tb_plus": b.rel_tb_plus, "rel_tb_minus": b.rel_tb_minus}
            for b in rep.boundary],
        "giroux": {
            "giroux_edges": [point_to_json(v) for v in g.giroux_edges],
            "dividing": [{"rectangles": list(c.rectangles), "nodes": [point_to_json(v) for v in c.nodes],
                          "closed": c.closed} for c in g.dividing],
        },
    }


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def load(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise FormatError("%s is not valid JSON: %s" % (path, exc)) from None
