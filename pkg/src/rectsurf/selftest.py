"""The acceptance suite: twelve checks, each returning a pass/fail line.

``run_all`` is what ``rectsurf selftest`` and tests/test_acceptance.py
execute.  Random inputs come from the seeded generators in
:mod:`rectsurf.fixtures`, so every run sees the same diagrams."""

from __future__ import annotations

import itertools
import logging
import os
import tempfile
import time
import warnings
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

import numpy as np

from . import fixtures as fx
from .framing import all_framings, corner_roles, framing_values_exhaustive
from .link import connected_components, orientations
from .linking import linking_number, tb_minus, tb_plus, writhe
from .moves import carry_orientation, destabilization_sites, destabilize, stabilization_sites, stabilize
from .oracles import fd_harmonic, triangulated_euler
from .surface import Rectangle, classify, lengthbound_check, validate_surface_diagram
from .tiles import (HarmonicTile, contact_field_check, crossing_separation, foliation_slope,
                    foliation_streamlines, tangency_check, zeta)
from .tolerances import TOL


@dataclass(frozen=True)
class CriterionResult:
    number: int
    name: str
    passed: bool
    detail: str
    seconds: float = 0.0

    def line(self) -> str:
        return "[%s] %2d %s: %s (%.1fs)" % ("PASS" if self.passed else "FAIL", self.number,
                                            self.name, self.detail, self.seconds)


# shared inputs ---------------------------------------------------------------

def fixture_links():
    out = {name: make() for name, make in fx.LINKS.items()}
    for name, make in fx.SURFACES.items():
        R = classify_boundary(make())
        if R is not None:
            out["boundary of " + name] = R
    return out


def classify_boundary(P):
    from .surface import boundary
    R = boundary(P)
    return R if len(R) else None


_SURFACES: dict = {}


def random_surfaces(count: int = 100, budget: int = 8):
    key = (count, budget)
    if key not in _SURFACES:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            _SURFACES[key] = [fx.random_surface_diagram(seed, budget) for seed in range(count)]
    return _SURFACES[key]


def crossing_pair():
    F = Fraction
    return validate_surface_diagram([Rectangle.of(F(2, 5), F(3, 5), F(1, 10), F(9, 10)),
                                     Rectangle.of(F(1, 10), F(9, 10), F(2, 5), F(3, 5))])


SHAPES = [(0.1, 0.4), (0.15, 0.3), (0.25, 0.25), (0.3, 0.15), (0.4, 0.1)]


# criteria ------------------------------------------------------------------

def c1_tb_identity():
    diagrams = list(fixture_links().values()) + [fx.random_link_diagram(s) for s in range(200)]
    bad = [R for R in diagrams if 2 * (tb_plus(R) + tb_minus(R)) != -len(R)]
    sizes = [len(R) for R in diagrams[-200:]]
    return not bad, "%d diagrams (random sizes %d..%d), %d failures" % (len(diagrams), min(sizes), max(sizes), len(bad))


def _random_cut(R, rng, extra=Fraction(1, 2 * 1009 * 64)):
    """A cut avoiding every line of R and of its shifted copies."""
    from .linking import shift_epsilon
    eps = shift_epsilon(R)
    lines_t = {t + d for t in R.thetas for d in (0, eps, -eps)}
    lines_p = {p + d for p in R.phis for d in (0, eps)}
    while True:
        ct = Fraction(int(rng.integers(0, 2 * 1009 * 64)) * 2 + 1, 4 * 1009 * 64)
        cp = Fraction(int(rng.integers(0, 2 * 1009 * 64)) * 2 + 1, 4 * 1009 * 64)
        if all((ct - t) % 1 != 0 for t in lines_t) and all((cp - p) % 1 != 0 for p in lines_p):
            return ct, cp


def c2_cut_invariance():
    """tb+, tb-, lk and writhe must not depend on the cut.  The writhe is a
    diagram quantity: tb+ = writhe - #(corners opening left and up) holds
    for every cut, and that corner count moves with the cut."""
    rng = fx.rng_for(2)
    diagrams = list(fixture_links().values()) + [fx.random_link_diagram(s, int(n))
                                                 for s, n in zip(range(1000, 1020), itertools.cycle((4, 8, 12, 16, 20)))]
    names = ("tb+", "tb-", "lk", "writhe")
    bad = dict.fromkeys(names, 0)
    for R in diagrams:
        comps = connected_components(R)

        def values(cut=None):
            return (tb_plus(R, cut=cut), tb_minus(R, cut=cut),
                    linking_number(R, split=[comps[0]], cut=cut) if len(comps) > 1 else None,
                    writhe(R, cut=cut))
        ref = values()
        for _ in range(5):
            got = values(_random_cut(R, rng))
            for n, g, r in zip(names, got, ref):
                bad[n] += g != r
    detail = "%d diagrams x 5 cuts, mismatches: %s" % (
        len(diagrams), ", ".join("%s %d" % kv for kv in bad.items()))
    return not any(bad.values()), detail


def c3_stabilization():
    bad, sites, roundtrip = 0, 0, 0
    for seed in range(50):
        R = fx.random_link_diagram(3000 + seed, 4 + 2 * (seed % 5))
        signs = next(iter(orientations(R)))
        base = (tb_plus(R, signs), tb_minus(R, signs))
        for site in stabilization_sites(R):
            S = stabilize(R, site)
            s2 = carry_orientation(signs, site)
            delta = (tb_plus(S, s2) - base[0], tb_minus(S, s2) - base[1])
            want = (0, -1) if site.type == "I" else (-1, 0)
            sites += 1
            bad += delta != want
            added = set(S.vertices) - set(R.vertices)
            back = [d for d in destabilization_sites(S)
                    if d.restored == site.vertex and set(d.removed) == added]
            if len(back) != 1 or destabilize(S, back[0]) != R:
                roundtrip += 1
    return bad == 0 and roundtrip == 0, "%d sites on 50 diagrams, %d wrong deltas, %d round-trip failures" % (sites, bad, roundtrip)


def c4_framing_range():
    diagrams = [R for R in fixture_links().values() if len(R.edges) <= 10 and R.genericity().is_generic]
    diagrams += [fx.random_link_diagram(4000 + s, n) for s, n in zip(range(12), itertools.cycle((4, 6, 8, 10)))]
    bad, framings, odd = 0, 0, 0
    for R in diagrams:
        vals = framing_values_exhaustive(R)
        if sorted(vals) != list(range(tb_plus(R), -tb_minus(R) + 1)):
            bad += 1
        comps = connected_components(R)
        for f in all_framings(R):
            roles = corner_roles(R, f)
            framings += 1
            odd += any(sum(roles[v].extremal for v in K.vertices) % 2 for K in comps)
    return bad == 0 and odd == 0, "%d diagrams, %d framings, %d range mismatches, %d odd n-" % (len(diagrams), framings, bad, odd)


def c5_boundary_admissibility():
    fails, comps = 0, 0
    for P in random_surfaces():
        rep = classify(P)
        for b in rep.boundary:
            comps += 1
            ok = (b.rel_tb_plus <= 0 and b.rel_tb_minus <= 0
                  and 2 * (b.rel_tb_plus + b.rel_tb_minus) == -b.length)
            fails += not ok
        fails += sum(not lb.holds for lb in lengthbound_check(P))
    return fails == 0, "100 surfaces, %d boundary components, %d failures" % (comps, fails)


def c6_topology():
    rows = []
    ok = True

    def tri(P):
        return triangulated_euler([(r.theta.start, r.theta.end, r.phi.start, r.phi.end) for r in P.rectangles])["chi"]

    P = fx.single_rect()
    r = classify(P)
    ok &= r.euler_characteristic == 1 == tri(P) and r.components[0].name == "disc"
    rows.append("disc chi=%d" % r.euler_characteristic)
    P = fx.sphere_pair()
    r = classify(P)
    ok &= r.euler_characteristic == 2 == tri(P) and r.closed and r.orientable
    rows.append("sphere chi=%d" % r.euler_characteristic)
    P = fx.chain(4)
    r = classify(P)
    ok &= (r.euler_characteristic == 0 == tri(P) and r.orientable and r.components[0].name == "annulus"
           and len(r.boundary) == 2 and all((b.rel_tb_plus, b.rel_tb_minus) == (0, -2) for b in r.boundary)
           and len(r.giroux.dividing) == 1 and r.giroux.dividing[0].closed)
    rows.append("chain4 %s rel tb %s" % (r.components[0].name, [(b.rel_tb_plus, b.rel_tb_minus) for b in r.boundary]))
    P = fx.chain(3)
    r = classify(P)
    ok &= (r.euler_characteristic == 0 == tri(P) and not r.orientable and len(r.boundary) == 1
           and r.components[0].name == "Moebius band")
    rows.append("chain3 %s" % r.components[0].name)
    return ok, "; ".join(rows)


def c7_dividing():
    bad = 0
    for P in random_surfaces():
        g = classify(P).giroux
        per = Counter(i for c in g.dividing for i in c.rectangles)
        bad += any(per[i] != 1 for i in range(len(P.rectangles)))
        bad += any(d > 2 for d in g.degrees.values())
    return bad == 0, "100 surfaces, %d failures" % bad


def c8_harmonic():
    worst = {"centre": 0.0, "swap": 0.0, "comp": 0.0, "fd": 0.0, "zeta": 0.0}
    for s in (0.1, 0.25, 0.4):
        t = HarmonicTile(0.3, 0.6, s, s)
        worst["centre"] = max(worst["centre"], abs(float(t.h_local(s / 2, s / 2)) - 0.5))
    for a, b in SHAPES:
        t, u = HarmonicTile(0, 0, a, b), HarmonicTile(0, 0, b, a)
        worst["swap"] = max(worst["swap"], abs(float(t.h_local(a / 2, b / 2) + u.h_local(b / 2, a / 2)) - 1))
        x, y, H, _ = fd_harmonic(a, b)
        X, Y = np.meshgrid(x, y, indexing="ij")
        worst["comp"] = max(worst["comp"], float(np.abs(t.s_vert(X, Y) + t.s_horiz(X, Y) - 1).max()))
        worst["fd"] = max(worst["fd"], float(np.abs(t.h_local(X, Y) - H).max()))
    xs = np.arange(1, 10) / 10
    worst["zeta"] = float(np.abs(zeta(xs) + zeta(1 - xs) - 1).max())
    ok = (worst["centre"] <= TOL.centre and worst["swap"] <= TOL.centre and worst["comp"] <= TOL.complementarity
          and worst["fd"] <= TOL.fd_oracle and worst["zeta"] <= TOL.involution)
    return ok, ", ".join("%s %.1e" % kv for kv in worst.items())


def c9_geometry():
    worst = 0.0
    for a, b in SHAPES:
        t = HarmonicTile(0.05, 0.55, a, b)
        for kappa in (0.0, 0.5):
            for c in ("BL", "BR", "TL", "TR"):
                for smp in tangency_check(t, c, np.linspace(*TOL.tau_window, 7), kappa):
                    worst = max(worst, smp.defect)
    P = crossing_pair()
    over, under = P.crossings[0]
    sep = crossing_separation(P.rectangles[over], P.rectangles[under], n=201)
    ok = worst <= TOL.tangency and sep.min_gap > 0 and sep.sign == 1
    return ok, "max tangency defect %.2e rad; crossing pair min gap %.3e (over tile higher: %s)" % (
        worst, sep.min_gap, sep.sign == 1)


def c10_contact():
    fails, lie, d0, d1 = 0, 0.0, 0.0, 0.0
    for a, b in SHAPES:
        for kappa in (0.0, 0.5):
            rep = contact_field_check(HarmonicTile(0.2, 0.7, a, b), samples=1000, kappa=kappa)
            fails += rep.transversality_failures
            lie, d0, d1 = max(lie, rep.max_lie_residual), max(d0, rep.tau0_defect), max(d1, rep.tau1_defect)
    ok = fails == 0 and lie <= TOL.lie_residual and d0 <= TOL.binding_parallel and d1 <= TOL.binding_parallel
    return ok, "%d transversality failures, Lie residual %.1e, binding defects %.1e / %.1e" % (fails, lie, d0, d1)


def c11_foliation():
    positive, samples = 0, 0
    for a, b in SHAPES:
        t = HarmonicTile(0.0, 0.0, a, b)
        for kappa in (0.0, 0.5):
            seeds = [(a * u, b * v) for u in (0.2, 0.5, 0.8) for v in (0.01, 0.2, 0.5, 0.8, 0.99)]
            for sl in foliation_streamlines(t, seeds, kappa, step=5e-3 * min(a, b)):
                samples += len(sl.slopes)
                positive += int(np.sum(sl.slopes >= 0))
    sq = HarmonicTile(0.0, 0.0, 0.25, 0.25)
    centre = abs(float(foliation_slope(sq, 0.125, 0.125)) + 1)
    # near a horizontal side, away from the corners
    near = 0.0
    for a, b in SHAPES:
        t = HarmonicTile(0.0, 0.0, a, b)
        xs = np.linspace(0.3, 0.7, 9) * a
        for kappa in (0.0, 0.5):
            for y in (TOL.slope_probe * b, b - TOL.slope_probe * b):
                near = max(near, float(np.abs(foliation_slope(t, xs, y, kappa)).max()))
    ok = positive == 0 and centre <= TOL.centre_slope and near < TOL.slope_limit
    return ok, "%d slope samples, %d non-negative; centre slope error %.1e; |slope| near horizontal sides <= %.3f" % (
        samples, positive, centre, near)


def c12_mesh():
    from .mesh import check_mesh, surface_mesh
    import trimesh
    rows, ok = [], True
    cases = {"single_rect": fx.single_rect(), "sphere_pair": fx.sphere_pair(),
             "chain4": fx.chain(4), "chain3": fx.chain(3)}
    with tempfile.TemporaryDirectory() as tmp:
        for name, P in cases.items():
            M = surface_mesh(P, 0.0, 32)
            chk = check_mesh(M)
            shared_ok = True
            for tiles in itertools.combinations(M.tiles, 2):
                for v in set(tiles[0].arcs) & set(tiles[1].arcs):
                    pts = [np.array([t.r4[t.keys.index(k)] for k in t.arcs[v]]) for t in tiles]
                    shared_ok &= tiles[0].arcs[v] == tiles[1].arcs[v] and np.array_equal(pts[0], pts[1])
            path = os.path.join(tmp, name + ".obj")
            with open(path, "w") as fh:
                fh.write(M.to_obj())
            log = _capture_log("trimesh")
            with warnings.catch_warnings(record=True) as caught:
                warnings.simplefilter("always")
                tm = trimesh.load(path, force="mesh", process=False)
            logging.getLogger("trimesh").removeHandler(log)
            n_warn = len(caught) + len(log.records)
            good = (chk.max_norm_error <= TOL.unit_norm and chk.ok and shared_ok and n_warn == 0
                    and len(tm.faces) == len(M.faces))
            ok &= good
            rows.append("%s %s" % (name, "ok" if good else "BAD"))
    return ok, ", ".join(rows)


class _ListHandler(logging.Handler):
    def __init__(self):
        super().__init__(logging.WARNING)
        self.records = []

    def emit(self, record):
        self.records.append(record)


def _capture_log(name: str) -> _ListHandler:
    h = _ListHandler()
    logging.getLogger(name).addHandler(h)
    return h


CRITERIA: list[tuple[int, str, Callable]] = [
    (1, "tb identity", c1_tb_identity),
    (2, "cut invariance", c2_cut_invariance),
    (3, "stabilization calculus", c3_stabilization),
    (4, "framing range", c4_framing_range),
    (5, "boundary admissibility", c5_boundary_admissibility),
    (6, "topology fixtures", c6_topology),
    (7, "dividing-set structure", c7_dividing),
    (8, "harmonic tile numerics", c8_harmonic),
    (9, "geometric claims", c9_geometry),
    (10, "convexity witness", c10_contact),
    (11, "foliation", c11_foliation),
    (12, "mesh integrity", c12_mesh),
]


def run_criterion(number: int) -> CriterionResult:
    num, name, fn = CRITERIA[number - 1]
    t0 = time.perf_counter()
    try:
        passed, detail = fn()
    except Exception as exc:          # a crash is a failure, reported as such
        passed, detail = False, "error: %s: %s" % (type(exc).__name__, exc)
    return CriterionResult(num, name, bool(passed), detail, time.perf_counter() - t0)


def run_all(echo: Callable[[str], None] = print) -> list[CriterionResult]:
    out = []
    for num, _, _ in CRITERIA:
        res = run_criterion(num)
        echo(res.line())
        out.append(res)
    return out
