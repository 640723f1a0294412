"""Triangle meshes of tiles and surfaces, OBJ export, and a small mesh
validator.

Vertices are identified by exact keys so that tiles meeting along a corner
arc or at a binding point share vertices:

    ('p', phi)           binding point on tau = 0
    ('t', theta)         binding point on tau = 1
    ('arc', v, j)        j-th sample of the arc over corner v, tau = j/m
    ('in', n, i, j)      interior grid node (i, j) of tile n
"""

from __future__ import annotations

import io
from collections import Counter
from dataclasses import dataclass, field

import numpy as np

from .surface import BL, BR, TL, TR, SurfaceDiagram, orient_surface
from .tiles import HarmonicTile, Projection, TileError, default_pole, embed, height


def graded_nodes(n: int) -> np.ndarray:
    """Chebyshev-Lobatto nodes on [0, 1]: refined toward both ends."""
    return (1 - np.cos(np.pi * np.arange(n + 1) / n)) / 2


def arc_points(v, m: int) -> np.ndarray:
    """Samples of the arc over corner v at tau = j/m; used by every tile
    with that corner so shared arcs are bit-identical."""
    tau = np.arange(m + 1) / m
    return embed(float(v.theta), float(v.phi), tau)


@dataclass
class TileMesh:
    index: int
    keys: list                      # vertex keys, local order
    r4: np.ndarray                  # (V, 4)
    faces: list                     # triangles as key triples
    arcs: dict = field(default_factory=dict)   # corner point -> key list A_0..A_m


def tile_mesh(rect, kappa: float = 0.0, resolution: int = 64, index: int = 0,
              flip: bool = False) -> TileMesh:
    if resolution < 8:
        raise ValueError("resolution must be at least 8")
    n = m = resolution
    tile = HarmonicTile.of(rect)
    g = graded_nodes(n)
    xs, ys = g * tile.a, g * tile.b
    t1, t2 = rect.theta.start, rect.theta.end
    p1, p2 = rect.phi.start, rect.phi.end
    X, Y = np.meshgrid(xs[1:-1], ys[1:-1], indexing="ij")
    tau_in = height(tile, X, Y, kappa)
    th_in, ph_in = tile.absolute(X, Y)
    r4_in = embed(th_in, ph_in, tau_in)

    points: dict = {}

    def node(i, j):
        """Key of grid node (i, j); side nodes collapse to binding points."""
        if i in (0, n) and j in (0, n):
            return None          # corners are expanded into arcs
        if i == 0 or i == n:
            key = ("t", t1 if i == 0 else t2)
            if key not in points:
                points[key] = embed(float(key[1]), 0.0, 1.0)
            return key
        if j == 0 or j == n:
            key = ("p", p1 if j == 0 else p2)
            if key not in points:
                points[key] = embed(0.0, float(key[1]), 0.0)
            return key
        key = ("in", index, i, j)
        points[key] = r4_in[i - 1, j - 1]
        return key

    arcs = {}
    for name in (BL, BR, TL, TR):
        v = rect.corner(name)
        pts = arc_points(v, m)
        keys = [("p", v.phi)] + [("arc", v, j) for j in range(1, m)] + [("t", v.theta)]
        for k, p in zip(keys, pts):
            points.setdefault(k, p)
        arcs[v] = keys

    corner_at = {(0, 0): BL, (n, 0): BR, (0, n): TL, (n, n): TR}
    faces = []
    for i in range(n):
        for j in range(n):
            ring = [(i, j), (i + 1, j), (i + 1, j + 1), (i, j + 1)]   # counterclockwise
            poly = []
            for k, ij in enumerate(ring):
                if ij in corner_at:
                    arc = arcs[rect.corner(corner_at[ij])]
                    prev = node(*ring[k - 1])
                    # walk the arc starting from the neighbour we came from
                    poly.extend(arc if prev == arc[0] else arc[::-1])
                else:
                    poly.append(node(*ij))
            dedup = [k for idx, k in enumerate(poly) if k != poly[idx - 1]]
            if len(dedup) < 3:
                continue
            if len(dedup) == 4 and all(ij not in corner_at for ij in ring):
                tris = [(dedup[0], dedup[1], dedup[2]), (dedup[0], dedup[2], dedup[3])]
            else:
                # fan from the interior node of the cell
                c = next(idx for idx, k in enumerate(dedup) if k[0] == "in")
                rot = dedup[c:] + dedup[:c]
                tris = [(rot[0], rot[s], rot[s + 1]) for s in range(1, len(rot) - 1)]
            for tri in tris:
                if len(set(tri)) == 3:
                    faces.append(tri[::-1] if flip else tri)
    keys = list(points)
    return TileMesh(index, keys, np.array([points[k] for k in keys]), faces, arcs)


@dataclass
class SurfaceMesh:
    keys: list
    r4: np.ndarray
    r3: np.ndarray
    faces: np.ndarray               # (F, 3) global indices
    tile_of_face: np.ndarray
    tiles: list
    pole: np.ndarray
    oriented: bool

    def to_obj(self) -> str:
        out = io.StringIO()
        out.write("# rectsurf surface mesh: %d vertices, %d faces\n" % (len(self.r3), len(self.faces)))
        for x, y, z in self.r3:
            out.write("v %.17g %.17g %.17g\n" % (x, y, z))
        for t in range(len(self.tiles)):
            out.write("o tile_%d\n" % t)
            for f in self.faces[self.tile_of_face == t]:
                out.write("f %d %d %d\n" % tuple(int(i) + 1 for i in f))
        return out.getvalue()


def surface_mesh(P: SurfaceDiagram, kappa: float = 0.0, resolution: int = 64,
                 pole=None) -> SurfaceMesh:
    orientations = orient_surface(P)
    signs = orientations[0] if orientations else {i: 1 for i in range(len(P.rectangles))}
    tiles = [tile_mesh(r, kappa, resolution, n, flip=signs[n] < 0) for n, r in enumerate(P.rectangles)]
    index: dict = {}
    r4 = []
    for t in tiles:
        for k, p in zip(t.keys, t.r4):
            if k not in index:
                index[k] = len(r4)
                r4.append(p)
    r4 = np.array(r4)
    pole = default_pole(P.rectangles) if pole is None else np.asarray(pole, float)
    try:
        r3 = Projection.from_pole(pole)(r4)
    except TileError as exc:
        raise TileError("%s (the surface passes near the pole)" % exc) from None
    faces, owner = [], []
    for t in tiles:
        for f in t.faces:
            faces.append([index[k] for k in f])
            owner.append(t.index)
    return SurfaceMesh(list(index), r4, r3, np.array(faces, dtype=int), np.array(owner, dtype=int),
                       tiles, pole, bool(orientations))


@dataclass(frozen=True)
class MeshCheck:
    max_norm_error: float
    degenerate_faces: int
    nonmanifold_edges: int           # edges in more than two faces
    boundary_edges: int
    orientation_conflicts: int       # directed edges used twice
    components: int

    @property
    def ok(self) -> bool:
        return self.degenerate_faces == 0 and self.nonmanifold_edges == 0


def check_mesh(mesh: SurfaceMesh) -> MeshCheck:
    norms = np.abs(np.linalg.norm(mesh.r4, axis=1) - 1.0)
    F = mesh.faces
    degenerate = int(sum(len(set(map(int, f))) < 3 for f in F))
    undirected = Counter()
    directed = Counter()
    for f in F:
        for a, b in ((f[0], f[1]), (f[1], f[2]), (f[2], f[0])):
            undirected[frozenset((int(a), int(b)))] += 1
            directed[(int(a), int(b))] += 1
    parent = list(range(len(mesh.r4)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for f in F:
        for a in f[1:]:
            parent[find(int(a))] = find(int(f[0]))
    used = {int(i) for i in F.ravel()}
    return MeshCheck(
        float(norms.max()), degenerate,
        sum(c > 2 for c in undirected.values()),
        sum(c == 1 for c in undirected.values()),
        sum(c > 1 for c in directed.values()),
        len({find(i) for i in used}))


def fan_gap(rect, kappa: float = 0.0, resolution: int = 64, probes: int = 16) -> float:
    """Largest R^4 distance between a corner fan and the tile it stands in
    for, probed at points of the tile inside the fan's grid cell."""
    tile = HarmonicTile.of(rect)
    g = graded_nodes(resolution)
    worst = 0.0
    for name, (fx, fy, sx, sy) in (("BL", (0, 0, 1, 1)), ("BR", (1, 0, -1, 1)),
                                   ("TL", (0, 1, 1, -1)), ("TR", (1, 1, -1, -1))):
        dx, dy = g[1] * tile.a, g[1] * tile.b
        corner = rect.corner(name)
        arc = arc_points(corner, resolution)
        cx, cy = fx * tile.a + sx * dx, fy * tile.b + sy * dy
        inner = embed(*tile.absolute(cx, cy), height(tile, cx, cy, kappa))
        for s in np.linspace(0.05, 0.95, probes):
            x = fx * tile.a + sx * dx * s
            y = fy * tile.b + sy * dy * s
            p = embed(*tile.absolute(x, y), height(tile, x, y, kappa))
            # distance to the fan: nearest point over the fan triangles' edges
            d = np.min(np.linalg.norm(arc - p, axis=1))
            d = min(d, float(np.linalg.norm(inner - p)))
            for j in range(resolution):
                for w in np.linspace(0, 1, 9):
                    q = (1 - w) * inner + w * (arc[j] + arc[j + 1]) / 2
                    d = min(d, float(np.linalg.norm(q - p)))
            worst = max(worst, d)
    return worst
