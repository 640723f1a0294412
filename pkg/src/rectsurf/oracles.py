"""Independent reference computations used only for verification.

Nothing in the main computational path imports this module.  Each oracle
takes a different route to a quantity the library computes combinatorially
or through series:

* :func:`gauss_linking_number` integrates the Gauss linking form over the
  actual polygonal curves in S^3 (stereographically projected);
* :func:`fd_harmonic` solves the Dirichlet problem of a tile by finite
  differences and SOR;
* :func:`triangulated_euler` rebuilds each tile as two triangles and
  computes Betti numbers from boundary-matrix ranks.
"""

from __future__ import annotations

import math

import numpy as np

from .link import LinkDiagram, connected_components, default_orientation


# -- Gauss linking integral ---------------------------------------------------

def _embed(theta, phi, tau):
    t, p = 2 * math.pi * float(theta), 2 * math.pi * float(phi)
    c, s = math.cos(math.pi * tau / 2), math.sin(math.pi * tau / 2)
    return np.array([c * math.cos(p), c * math.sin(p), s * math.cos(t), s * math.sin(t)])


def link_polygons(R: LinkDiagram, orientation=None, samples: int = 24) -> list[np.ndarray]:
    """Closed polygons in R^4 approximating the oriented components of the
    link associated with ``R`` (each arc over a vertex is a quarter great
    circle, sampled uniformly in tau)."""
    signs = default_orientation(R) if orientation is None else orientation
    taus = np.linspace(0.0, 1.0, samples + 1)
    polys = []
    for K in connected_components(R):
        start = next(v for v in K.vertices if signs[v] > 0)
        cyc = K.cycle(start)
        # cyc[0] is positive and cyc[1] is its vertical partner
        pts = []
        for i, v in enumerate(cyc):
            ts = taus if i % 2 == 0 else taus[::-1]
            pts.extend(_embed(v.theta, v.phi, t) for t in ts[:-1])
        polys.append(np.array(pts))
    return polys


def stereographic_points(P: np.ndarray, pole: np.ndarray) -> np.ndarray:
    """Projection from ``pole``; the target basis (e1, e2, e3) is chosen with
    det(pole, e1, e2, e3) < 0 so the result does not depend on how the
    orthogonal complement happens to be parametrized.  This orientation of
    S^3 is the one for which tb_+ + tb_- = -|R|/2."""
    pole = pole / np.linalg.norm(pole)
    basis = np.linalg.svd(pole.reshape(1, 4))[2][1:]
    if np.linalg.det(np.vstack([pole, basis])) > 0:
        basis[0] = -basis[0]
    denom = 1.0 - P @ pole
    return (P @ basis.T) / denom[:, None]


def _polygon_linking(A: np.ndarray, B: np.ndarray) -> float:
    """Exact Gauss linking number of two closed polygons in R^3
    (segment-pair solid angle formula)."""
    a0, a1 = A, np.roll(A, -1, axis=0)
    b0, b1 = B, np.roll(B, -1, axis=0)
    p1 = a0[:, None, :]
    p2 = a1[:, None, :]
    p3 = b0[None, :, :]
    p4 = b1[None, :, :]
    r13, r14, r23, r24 = p3 - p1, p4 - p1, p3 - p2, p4 - p2

    def unit(v):
        n = np.linalg.norm(v, axis=-1, keepdims=True)
        return v / np.where(n == 0, 1.0, n)

    n1 = unit(np.cross(r13, r14))
    n2 = unit(np.cross(r14, r24))
    n3 = unit(np.cross(r24, r23))
    n4 = unit(np.cross(r23, r13))
    clip = lambda x: np.clip(x, -1.0, 1.0)
    omega = (np.arcsin(clip((n1 * n2).sum(-1))) + np.arcsin(clip((n2 * n3).sum(-1)))
             + np.arcsin(clip((n3 * n4).sum(-1))) + np.arcsin(clip((n4 * n1).sum(-1))))
    r34 = p4 - p3
    r12 = p2 - p1
    sgn = np.sign((np.cross(r34, r12) * r13).sum(-1))
    return float((omega * sgn).sum() / (4 * math.pi))


def gauss_linking_number(R1: LinkDiagram, o1, R2: LinkDiagram, o2,
                         samples: int = 24, pole=None) -> float:
    """lk of the links associated with two disjoint oriented diagrams,
    computed from the curves in S^3.  Returns a float close to an integer."""
    if pole is None:
        pole = np.array([0.3, -0.5, 0.6, 0.2])
    pole = np.asarray(pole, float)
    A = [stereographic_points(P, pole) for P in link_polygons(R1, o1, samples)]
    B = [stereographic_points(P, pole) for P in link_polygons(R2, o2, samples)]
    return sum(_polygon_linking(a, b) for a in A for b in B)


# -- Euler characteristic from a triangulation --------------------------------

def _rank_gf2(rows: list[int]) -> int:
    """Rank over GF(2) of a matrix given as row bitmasks."""
    pivots: dict[int, int] = {}
    rank = 0
    for row in rows:
        while row:
            top = row.bit_length() - 1
            if top not in pivots:
                pivots[top] = row
                rank += 1
                break
            row ^= pivots[top]
    return rank


def triangulated_euler(rectangles) -> dict:
    """Betti numbers (mod 2) of the surface built by cutting every tile into
    two triangles along the diagonal joining its two tau = 1 vertices.

    ``rectangles`` is a sequence of (t1, t2, p1, p2) tuples.  Returns b0,
    b1, b2 and chi = b0 - b1 + b2.  Vertices are binding-circle points, edges
    are corner arcs plus one private diagonal per tile."""
    verts: dict = {}
    edges: dict = {}

    def vid(key):
        return verts.setdefault(key, len(verts))

    def eid(key, a, b):
        if key not in edges:
            edges[key] = (len(edges), vid(a), vid(b))
        return edges[key][0]

    tris = []
    for i, (t1, t2, p1, p2) in enumerate(rectangles):
        T1, T2, P1, P2 = ("t", t1), ("t", t2), ("p", p1), ("p", p2)
        bl = eid(("arc", t1, p1), T1, P1)
        br = eid(("arc", t2, p1), T2, P1)
        tr = eid(("arc", t2, p2), T2, P2)
        tl = eid(("arc", t1, p2), T1, P2)
        d = eid(("diag", i), T1, T2)
        tris.append((bl, br, d))
        tris.append((tl, tr, d))
    nv, ne, nf = len(verts), len(edges), len(tris)
    d1 = [(1 << a) | (1 << b) for _, a, b in edges.values()]
    d2 = [sum(1 << e for e in t) for t in tris]
    r1, r2 = _rank_gf2(d1), _rank_gf2(d2)
    b0 = nv - r1
    b1 = ne - r1 - r2
    b2 = nf - r2
    return {"b0": b0, "b1": b1, "b2": b2, "chi": b0 - b1 + b2,
            "cells": (nv, ne, nf)}


def _corner_angles(X, Y, a: float, b: float):
    """Sum of the four corner angle functions: each is 0 on the horizontal
    side and 1 on the vertical side at its corner, and harmonic."""
    w = 0.0
    for cx, cy in ((0.0, 0.0), (a, 0.0), (0.0, b), (a, b)):
        w = w + (2 / math.pi) * np.arctan2(np.abs(Y - cy), np.abs(X - cx))
    return w


def fd_harmonic(a: float, b: float, samples: int = 65, refine: int = 2,
                tol: float = 1e-10, max_iter: int = 100000):
    """Finite-difference solution of the rectangle Dirichlet problem (1 on
    the vertical sides, 0 on the horizontal ones), returned on the interior
    sample grid x_i = i a/(samples+1), y_j = j b/(samples+1).

    The four corner singularities are subtracted in closed form; the smooth
    remainder is solved by red-black SOR on a grid refined ``refine`` times
    relative to the sample grid, so samples are grid nodes."""
    nx = ny = (samples + 1) * refine
    x = np.linspace(0.0, a, nx + 1)
    y = np.linspace(0.0, b, ny + 1)
    X, Y = np.meshgrid(x, y, indexing="ij")
    hx, hy = a / nx, b / ny
    with np.errstate(invalid="ignore"):
        W = _corner_angles(X, Y, a, b)
    data = np.zeros_like(X)
    data[0, :] = data[-1, :] = 1.0
    data[:, 0] = data[:, -1] = 0.0
    u = np.zeros_like(X)
    edge = np.zeros_like(X, dtype=bool)
    edge[0, :] = edge[-1, :] = edge[:, 0] = edge[:, -1] = True
    u[edge] = (data - W)[edge]
    # corner nodes: average of the neighbouring side values
    for i, j in ((0, 0), (0, -1), (-1, 0), (-1, -1)):
        u[i, j] = 0.5 * (u[i + (1 if i == 0 else -1), j] + u[i, j + (1 if j == 0 else -1)])
    cx, cy = 1 / hx ** 2, 1 / hy ** 2
    diag = 2 * (cx + cy)
    rho = (cx * math.cos(math.pi / nx) + cy * math.cos(math.pi / ny)) / (cx + cy)
    omega = 2 / (1 + math.sqrt(1 - rho ** 2))
    I, J = np.meshgrid(np.arange(1, nx), np.arange(1, ny), indexing="ij")
    colours = [((I + J) % 2 == c) for c in (0, 1)]
    residual = math.inf
    it = 0
    for it in range(1, max_iter + 1):
        for mask in colours:
            inner = u[1:-1, 1:-1]
            gs = (cx * (u[2:, 1:-1] + u[:-2, 1:-1]) + cy * (u[1:-1, 2:] + u[1:-1, :-2])) / diag
            inner[mask] += omega * (gs[mask] - inner[mask])
        if it % 20 == 0:
            lap = (cx * (u[2:, 1:-1] + u[:-2, 1:-1]) + cy * (u[1:-1, 2:] + u[1:-1, :-2])) - diag * u[1:-1, 1:-1]
            residual = float(np.abs(lap).max() / diag)
            if residual < tol:
                break
    h = u + W
    sl = slice(refine, nx, refine)
    return x[sl], y[sl], h[sl, sl], {"iterations": it, "residual": residual}
