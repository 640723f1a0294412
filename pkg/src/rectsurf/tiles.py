"""Harmonic tiles: evaluation of h_r, the height reparametrization, the join
embedding S^1 * S^1 -> S^3 in R^4, and numerical checks of the tile
geometry (tangency to xi_-/xi_+, the convexity line field, the
characteristic foliation).

Torus coordinates are in turns.  Inside a rectangle we use local
coordinates x in [0, a], y in [0, b] measured from the bottom-left corner.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from .tolerances import TOL


class TileError(ValueError):
    pass


# -- harmonic function --------------------------------------------------------

def _strip_measure(y, s, b):
    """Harmonic measure of the end s = 0 of the half strip {s > 0, 0 < y < b}."""
    return (2 / math.pi) * np.arctan2(np.sin(np.pi * y / b), np.sinh(np.pi * s / b))


def side_measure(x, y, a: float, b: float, tol: float = 1e-17):
    """Harmonic measure of the two sides x = 0 and x = a of [0,a] x [0,b],
    as an alternating sum of reflected half-strip measures.  Terms decay
    like exp(-pi k a / b), so this is fast when a >= b."""
    x = np.asarray(x, float)
    y = np.asarray(y, float)
    kmax = int(math.ceil(b / (math.pi * a) * math.log(4 / (math.pi * tol)))) + 2
    k = np.arange(kmax + 1, dtype=float)
    sign = np.where(k % 2, -1.0, 1.0)
    xe, ye = x[..., None], y[..., None]
    terms = _strip_measure(ye, xe + k * a, b) + _strip_measure(ye, (k + 1) * a - xe, b)
    return (sign * terms).sum(-1)


def fourier_side_measure(x, y, a: float, b: float, terms: int = 2001):
    """Plain sine series of the same harmonic measure (slow near x = 0, a)."""
    x = np.asarray(x, float)[..., None]
    y = np.asarray(y, float)[..., None]
    n = np.arange(1, terms + 1, 2, dtype=float)
    v = n * np.pi * a / (2 * b)
    u = n * np.pi * (x - a / 2) / b
    ratio = (np.exp(u - v) + np.exp(-u - v)) / (1 + np.exp(-2 * v))
    return (4 / (n * np.pi) * np.sin(n * np.pi * y / b) * ratio).sum(-1)


@dataclass(frozen=True)
class HarmonicTile:
    """The Dirichlet problem of one rectangle: h = 1 on the vertical sides,
    0 on the horizontal ones."""

    theta1: float
    phi1: float
    a: float
    b: float

    @classmethod
    def of(cls, rect) -> "HarmonicTile":
        return cls(float(rect.theta.start), float(rect.phi.start),
                   float(rect.theta.length), float(rect.phi.length))

    def s_vert(self, x, y):
        return side_measure(x, y, self.a, self.b)

    def s_horiz(self, x, y):
        return side_measure(y, x, self.b, self.a)

    def h_local(self, x, y):
        if self.a >= self.b:
            return self.s_vert(x, y)
        return 1.0 - self.s_horiz(x, y)

    def local(self, theta, phi):
        x = np.mod(np.asarray(theta, float) - self.theta1, 1.0)
        y = np.mod(np.asarray(phi, float) - self.phi1, 1.0)
        return x, y

    def interior(self, x, y) -> np.ndarray:
        x, y = np.asarray(x, float), np.asarray(y, float)
        return (x > 0) & (x < self.a) & (y > 0) & (y < self.b)

    def h(self, theta, phi):
        """h_r at torus points (turns); raises for points not strictly inside."""
        x, y = self.local(theta, phi)
        if not np.all(self.interior(x, y)):
            raise TileError("h_r is only evaluated strictly inside the rectangle")
        return self.h_local(x, y)

    def centre(self) -> tuple[float, float]:
        return self.a / 2, self.b / 2

    def absolute(self, x, y):
        return (self.theta1 + np.asarray(x, float)) % 1.0, (self.phi1 + np.asarray(y, float)) % 1.0


def zeta(h, kappa: float = 0.0):
    """(2/pi) arctan(tan(pi h / 2)^(1/(2+kappa))): monotone, fixes 0, 1/2, 1."""
    if kappa < 0:
        raise ValueError("kappa must be non-negative")
    h = np.asarray(h, float)
    t = np.tan(np.pi * np.clip(h, 0.0, 1.0) / 2)
    out = (2 / np.pi) * np.arctan(np.power(t, 1.0 / (2.0 + kappa)))
    return np.where(h >= 1.0, 1.0, out)


def height(tile: HarmonicTile, x, y, kappa: float = 0.0):
    x, y = np.asarray(x, float), np.asarray(y, float)
    if not np.all(tile.interior(x, y)):
        raise TileError("height is only evaluated strictly inside the rectangle")
    return zeta(tile.h_local(x, y), kappa)


# -- embedding ----------------------------------------------------------------

def embed(theta, phi, tau) -> np.ndarray:
    """Join coordinates (turns, turns, tau in [0,1]) to the unit sphere in R^4."""
    theta, phi, tau = np.broadcast_arrays(*(np.asarray(v, float) for v in (theta, phi, tau)))
    if np.any((tau < 0) | (tau > 1)):
        raise ValueError("tau must lie in [0, 1]")
    c = np.where(tau == 1.0, 0.0, np.cos(np.pi * tau / 2))
    s = np.where(tau == 0.0, 0.0, np.sin(np.pi * tau / 2))
    s = np.where(tau == 1.0, 1.0, s)
    t, p = 2 * np.pi * theta, 2 * np.pi * phi
    return np.stack([c * np.cos(p), c * np.sin(p), s * np.cos(t), s * np.sin(t)], axis=-1)


def embed_jacobian(theta, phi, tau) -> np.ndarray:
    """Columns d/dtheta, d/dphi, d/dtau (theta and phi in turns)."""
    c, s = math.cos(math.pi * tau / 2), math.sin(math.pi * tau / 2)
    t, p = 2 * math.pi * theta, 2 * math.pi * phi
    dt = 2 * math.pi * np.array([0, 0, -s * math.sin(t), s * math.cos(t)])
    dp = 2 * math.pi * np.array([-c * math.sin(p), c * math.cos(p), 0, 0])
    dtau = (math.pi / 2) * np.array([-s * math.cos(p), -s * math.sin(p), c * math.cos(t), c * math.sin(t)])
    return np.stack([dt, dp, dtau], axis=1)


@dataclass(frozen=True)
class Projection:
    """Stereographic projection S^3 - {pole} -> R^3."""

    pole: np.ndarray
    basis: np.ndarray = field(repr=False)

    @classmethod
    def from_pole(cls, pole) -> "Projection":
        pole = np.asarray(pole, float)
        pole = pole / np.linalg.norm(pole)
        q, _ = np.linalg.qr(np.column_stack([pole, np.eye(4)]))
        basis = q[:, 1:4].T
        if np.linalg.det(np.vstack([pole, basis])) > 0:
            basis[0] = -basis[0]
        return cls(pole, basis)

    def __call__(self, r4: np.ndarray, guard: Optional[float] = None) -> np.ndarray:
        guard = TOL.pole_guard if guard is None else guard
        r4 = np.asarray(r4, float)
        dist = np.linalg.norm(r4 - self.pole, axis=-1)
        if np.any(dist < guard):
            raise TileError("a point lies within %.1e of the projection pole; "
                            "choose another pole" % guard)
        return (r4 @ self.basis.T) / (1.0 - r4 @ self.pole)[..., None]


def stereographic(r4, pole) -> np.ndarray:
    return Projection.from_pole(pole)(r4)


def default_pole(rectangles) -> np.ndarray:
    """A tau = 0 point away from the surface: the middle of the widest gap
    between corner phi values, preferring gaps no rectangle's phi-span
    covers.  Tiles reach tau = 0 only at corner phi values."""
    rectangles = list(rectangles)
    phis = sorted({float(r.phi.start) for r in rectangles} | {float(r.phi.end) for r in rectangles})
    if not phis:
        return embed(0.0, 0.5, 0.0)
    best, where = None, 0.0
    for i, p in enumerate(phis):
        q = phis[(i + 1) % len(phis)] + (1.0 if i + 1 == len(phis) else 0.0)
        mid = (p + (q - p) / 2) % 1.0
        covered = any(_in_span(r.phi, mid) for r in rectangles)
        score = (not covered, q - p)
        if best is None or score > best:
            best, where = score, mid
    return embed(0.0, where, 0.0)


def _in_span(arc, x: float) -> bool:
    return (x - float(arc.start)) % 1.0 < float(arc.length)


# -- tangency along the corner arcs ------------------------------------------

CORNER_FRAME = {"BL": (0, 0, 1, 1), "BR": (1, 0, -1, 1), "TL": (0, 1, 1, -1), "TR": (1, 1, -1, -1)}


def _orthonormal(M: np.ndarray) -> np.ndarray:
    q, _ = np.linalg.qr(M)
    return q


def principal_angle(A: np.ndarray, B: np.ndarray) -> float:
    """Largest principal angle between the column spans of A and B."""
    s = np.linalg.svd(_orthonormal(A).T @ _orthonormal(B), compute_uv=False)
    return float(np.arccos(np.clip(s.min(), -1.0, 1.0)))


def xi_plane(tau: float, sign: int, kappa: float = 0.0) -> np.ndarray:
    """Basis of xi_sign^kappa at tau in coordinates (theta, phi, tau):
    the kernel of cos^(2+k) dphi + sign * sin^(2+k) dtheta."""
    c = math.cos(math.pi * tau / 2) ** (2 + kappa)
    s = math.sin(math.pi * tau / 2) ** (2 + kappa)
    return np.array([[c, 0.0], [-sign * s, 0.0], [0.0, 1.0]])


@dataclass(frozen=True)
class TangencySample:
    corner: str
    tau: float
    defect: float            # vs the predicted plane field
    contrast: float          # vs the other plane field (should be large)


def _corner_point(tile: HarmonicTile, corner: str, rho: float, psi: float):
    fx, fy, sx, sy = CORNER_FRAME[corner]
    return fx * tile.a + sx * rho * math.cos(psi), fy * tile.b + sy * rho * math.sin(psi)


def tangency_check(tile: HarmonicTile, corner: str, taus: Sequence[float], kappa: float = 0.0,
                   rho: Optional[float] = None) -> list[TangencySample]:
    """Compare the tangent plane of the tile near the arc over ``corner``
    with xi_- (BL, TR) or xi_+ (TL, BR) in R^4.  For every target tau the
    point at distance rho from the corner with that height is located by
    bisection in the polar angle; the graph gradient there is taken by
    central differences."""
    rho = TOL.tangency_rho * min(tile.a, tile.b) if rho is None else rho
    sign = -1 if corner in ("BL", "TR") else 1
    out = []
    for tau0 in taus:
        lo, hi = 1e-9, math.pi / 2 - 1e-9

        def tau_at(psi):
            x, y = _corner_point(tile, corner, rho, psi)
            return float(height(tile, x, y, kappa))

        for _ in range(100):
            mid = (lo + hi) / 2
            if tau_at(mid) < tau0:
                lo = mid
            else:
                hi = mid
        psi = (lo + hi) / 2
        x, y = _corner_point(tile, corner, rho, psi)
        d = rho * TOL.tangency_fd
        gx = (height(tile, x + d, y, kappa) - height(tile, x - d, y, kappa)) / (2 * d)
        gy = (height(tile, x, y + d, kappa) - height(tile, x, y - d, kappa)) / (2 * d)
        tau = float(height(tile, x, y, kappa))
        th, ph = tile.absolute(x, y)
        J = embed_jacobian(float(th), float(ph), tau)
        surf = J @ np.array([[1.0, 0.0], [0.0, 1.0], [float(gx), float(gy)]])
        want = J @ xi_plane(tau, sign, kappa)
        other = J @ xi_plane(tau, -sign, kappa)
        out.append(TangencySample(corner, tau, principal_angle(surf, want), principal_angle(surf, other)))
    return out


# -- characteristic foliation -------------------------------------------------

def foliation_slope(tile: HarmonicTile, x, y, kappa: float = 0.0):
    """dphi/dtheta of the torus projection of the characteristic foliation."""
    h = tile.h_local(x, y)
    return -np.power(np.tan(np.pi * h / 2), 2.0 / (2.0 + kappa))


@dataclass
class Streamline:
    points: np.ndarray          # local (x, y)
    slopes: np.ndarray
    truncated: bool = False     # stopped by step-size underflow or the step cap


def foliation_streamlines(tile: HarmonicTile, seeds, kappa: float = 0.0,
                          step: Optional[float] = None, margin: Optional[float] = None,
                          max_steps: int = 20000) -> list[Streamline]:
    """Integrate the line field by RK4 in arc length in both directions from
    every seed until within ``margin`` of the boundary."""
    size = min(tile.a, tile.b)
    step = size * TOL.streamline_step if step is None else step
    margin = size * TOL.streamline_margin if margin is None else margin

    def direction(p, orient):
        m = np.asarray(foliation_slope(tile, p[:, 0], p[:, 1], kappa), float)
        norm = np.hypot(1.0, m)
        return (orient / norm)[:, None] * np.column_stack([np.ones_like(m), m])

    def inside(p):
        return ((margin < p[:, 0]) & (p[:, 0] < tile.a - margin)
                & (margin < p[:, 1]) & (p[:, 1] < tile.b - margin))

    seeds = np.asarray(seeds, float).reshape(-1, 2)
    n = len(seeds)
    # one trajectory per (seed, direction), integrated together
    p = np.vstack([seeds, seeds])
    orient = np.concatenate([np.ones(n), -np.ones(n)])
    ds = np.full(2 * n, step)
    active = np.ones(2 * n, bool)
    truncated = np.zeros(2 * n, bool)
    history = []                 # (trajectory indices, new points) per step
    for _ in range(max_steps):
        idx = np.flatnonzero(active)
        if not len(idx):
            break
        q, o, h = p[idx], orient[idx], ds[idx][:, None]
        k1 = direction(q, o)
        mid = q + h / 2 * k1
        ok = inside(mid)
        k2 = np.zeros_like(q)
        k2[ok] = direction(mid[ok], o[ok])
        mid2 = q + h / 2 * k2
        ok &= inside(mid2)
        k3 = np.zeros_like(q)
        k3[ok] = direction(mid2[ok], o[ok])
        end = q + h * k3
        stopped = ~ok
        shrink = ok & ~inside(end)
        ok &= ~shrink
        k4 = np.zeros_like(q)
        k4[ok] = direction(end[ok], o[ok])
        nxt = q + h / 6 * (k1 + 2 * k2 + 2 * k3 + k4)
        ok_in = ok & inside(nxt)
        stopped |= ok & ~ok_in
        # shrink toward the boundary, give up below a floor
        ds[idx[shrink]] /= 2
        floor = shrink & (ds[idx] < step * 1e-6)
        truncated[idx[floor]] = True
        stopped |= floor
        active[idx[stopped]] = False
        history.append((idx[ok_in], nxt[ok_in]))
        p[idx[ok_in]] = nxt[ok_in]
    else:
        truncated |= active

    if history:
        ids = np.concatenate([h[0] for h in history])
        pts = np.concatenate([h[1] for h in history])
    else:
        ids, pts = np.zeros(0, int), np.zeros((0, 2))
    order = np.argsort(ids, kind="stable")          # keeps step order per trajectory
    ids, pts = ids[order], pts[order]
    cuts = np.searchsorted(ids, np.arange(2 * n + 1))
    paths = [np.vstack([seeds[j % n][None, :], pts[cuts[j]:cuts[j + 1]]]) for j in range(2 * n)]

    out = []
    for i in range(n):
        line = np.vstack([paths[n + i][::-1], paths[i][1:]])
        out.append(Streamline(line, np.asarray(foliation_slope(tile, line[:, 0], line[:, 1], kappa)),
                              bool(truncated[i] or truncated[n + i])))
    return out


# -- the contact line element field l_r ---------------------------------------

def smoothstep(t):
    """C-infinity step from 0 (t <= 0) to 1 (t >= 1), with S(1-t) = 1 - S(t)."""
    t = np.clip(np.asarray(t, float), 0.0, 1.0)
    with np.errstate(divide="ignore", over="ignore"):
        f = np.where(t > 0, np.exp(-1.0 / np.where(t > 0, t, 1.0)), 0.0)
        g = np.where(t < 1, np.exp(-1.0 / np.where(t < 1, 1 - t, 1.0)), 0.0)
    return f / (f + g)


def smoothstep_prime(t):
    t = np.asarray(t, float)
    inside = (t > 0) & (t < 1)
    tt = np.where(inside, t, 0.5)
    f = np.exp(-1.0 / tt)
    g = np.exp(-1.0 / (1 - tt))
    fp = f / tt ** 2
    gp = -g / (1 - tt) ** 2
    d = (fp * (f + g) - f * (fp + gp)) / (f + g) ** 2
    return np.where(inside, d, 0.0)


@dataclass(frozen=True)
class Profile:
    """Profile functions of the line element field on one rectangle, with
    theta and phi in radians measured from the rectangle's bottom-left
    corner.  ``a`` is +1 near theta_1, odd about the centre, decreasing in
    between; ``b`` is -1 near phi_1, odd about the centre, increasing."""

    A: float                # theta-span in radians
    B: float                # phi-span in radians
    eps: float              # flat zone half-width (radians)

    def _t(self, u, L):
        return (np.asarray(u, float) - self.eps) / (L - 2 * self.eps)

    def a(self, u):
        return 1.0 - 2.0 * smoothstep(self._t(u, self.A))

    def da(self, u):
        return -2.0 * smoothstep_prime(self._t(u, self.A)) / (self.A - 2 * self.eps)

    def b(self, v):
        return -1.0 + 2.0 * smoothstep(self._t(v, self.B))

    def db(self, v):
        return 2.0 * smoothstep_prime(self._t(v, self.B)) / (self.B - 2 * self.eps)

    def validate(self, n: int = 401) -> None:
        if not 0 < self.eps < min(self.A, self.B) / 4:
            raise ValueError("flat zone must be positive and well inside the rectangle")
        u = np.linspace(-self.eps, self.A + self.eps, n)
        v = np.linspace(-self.eps, self.B + self.eps, n)
        if np.max(np.abs(self.a(u) + self.a(self.A - u))) > 1e-12:
            raise ValueError("profile a is not odd about the centre")
        if np.max(np.abs(self.b(v) + self.b(self.B - v))) > 1e-12:
            raise ValueError("profile b is not odd about the centre")
        # derivatives underflow right next to the flat zones, so strictness
        # is only asked for away from them
        mid_u = u[np.abs(self._t(u, self.A) - 0.5) < 0.45]
        mid_v = v[np.abs(self._t(v, self.B) - 0.5) < 0.45]
        if np.any(self.da(u) > 0) or np.any(self.db(v) < 0) \
                or np.any(self.da(mid_u) >= 0) or np.any(self.db(mid_v) <= 0):
            raise ValueError("profile is not strictly monotone in the middle")
        if np.any(self.a(u[u <= self.eps]) != 1.0) or np.any(self.b(v[v <= self.eps]) != -1.0):
            raise ValueError("profile is not flat near the first side")


def default_profile(tile: HarmonicTile, eps_fraction: float = 0.05) -> Profile:
    A, B = 2 * math.pi * tile.a, 2 * math.pi * tile.b
    return Profile(A, B, eps_fraction * min(A, B))


def line_field(profile: Profile, u, v, tau):
    """Components of l_r in (theta, phi, tau) with theta, phi in radians."""
    c = np.sin(np.pi * tau) / (2 * np.pi) * (profile.db(v) - profile.da(u))
    return np.stack(np.broadcast_arrays(profile.a(u), profile.b(v), c), axis=-1)


def alpha_plus(tau):
    """Coefficients (dtheta, dphi, dtau) of the xi_+ contact form."""
    s2 = np.sin(np.pi * tau / 2) ** 2
    c2 = np.cos(np.pi * tau / 2) ** 2
    return np.stack(np.broadcast_arrays(s2, c2, np.zeros_like(s2)), axis=-1)


@dataclass(frozen=True)
class ContactReport:
    samples: int
    transversality_failures: int
    min_pairing: float            # min of nu(l_r) over samples (nu = co-normal of the tile)
    max_lie_residual: float
    tau0_defect: float            # angle between l_r and d/dphi on tau = 0
    tau1_defect: float            # angle between l_r and d/dtheta on tau = 1


def _lie_residual(profile: Profile, p: np.ndarray, h: float) -> float:
    """|L_X alpha - g alpha| / |L_X alpha| at p, by central differences."""
    def X(q):
        return line_field(profile, q[0], q[1], q[2])

    def al(q):
        return alpha_plus(q[2])

    dX = np.zeros((3, 3))     # dX[j, i] = d_i X^j
    dal = np.zeros((3, 3))    # dal[k, i] = d_i alpha_k
    for i in range(3):
        e = np.zeros(3)
        e[i] = h
        dX[:, i] = (X(p + e) - X(p - e)) / (2 * h)
        dal[:, i] = (al(p + e) - al(p - e)) / (2 * h)
    x, a = X(p), al(p)
    lie = dal @ x + dX.T @ a
    g = lie @ a / (a @ a)
    scale = max(np.linalg.norm(lie), np.linalg.norm(a) * np.linalg.norm(x))
    return float(np.linalg.norm(lie - g * a) / scale)


def _angle(u, v) -> float:
    c = abs(u @ v) / (np.linalg.norm(u) * np.linalg.norm(v))
    return float(np.arccos(min(1.0, c)))


def contact_field_check(tile: HarmonicTile, profile: Optional[Profile] = None, samples: int = 1000,
                        seed: int = 0, kappa: float = 0.0) -> ContactReport:
    """Transversality of l_r to the tile, the contact property of l_r and
    its restrictions to the binding circles, all on sampled points."""
    profile = default_profile(tile) if profile is None else profile
    profile.validate()
    rng = np.random.Generator(np.random.PCG64(seed))
    # tile points: strictly interior, graph tau = T(x, y)
    x = rng.uniform(0.0, 1.0, samples) * tile.a
    y = rng.uniform(0.0, 1.0, samples) * tile.b
    x = np.clip(x, 1e-6 * tile.a, tile.a * (1 - 1e-6))
    y = np.clip(y, 1e-6 * tile.b, tile.b * (1 - 1e-6))
    tau = height(tile, x, y, kappa)
    d = 1e-7 * min(tile.a, tile.b)
    xm, xp = np.maximum(x - d, x / 2), np.minimum(x + d, (x + tile.a) / 2)
    ym, yp = np.maximum(y - d, y / 2), np.minimum(y + d, (y + tile.b) / 2)
    gx = (height(tile, xp, y, kappa) - height(tile, xm, y, kappa)) / (xp - xm)
    gy = (height(tile, x, yp, kappa) - height(tile, x, ym, kappa)) / (yp - ym)
    u, v = 2 * np.pi * x, 2 * np.pi * y
    X = line_field(profile, u, v, tau)
    # co-normal dtau - T_theta dtheta - T_phi dphi, with radians for theta, phi
    pairing = X[:, 2] - gx / (2 * np.pi) * X[:, 0] - gy / (2 * np.pi) * X[:, 1]
    failures = int(np.sum(pairing <= 0))
    # contact property at interior points of W_r
    lie = 0.0
    for _ in range(min(samples, 200)):
        p = np.array([rng.uniform(-profile.eps, profile.A + profile.eps),
                      rng.uniform(-profile.eps, profile.B + profile.eps),
                      rng.uniform(0.02, 0.98)])
        lie = max(lie, _lie_residual(profile, p, 1e-5))
    # binding circles: tau -> 0 and tau -> 1
    t_small = TOL.binding_tau
    d0, d1 = 0.0, 0.0
    for _ in range(min(samples, 200)):
        uu = rng.uniform(-profile.eps, profile.A + profile.eps)
        vv = rng.uniform(-profile.eps, profile.B + profile.eps)
        th, ph = tile.theta1 + uu / (2 * np.pi), tile.phi1 + vv / (2 * np.pi)
        if abs(profile.b(vv)) > TOL.binding_min_component:
            J = embed_jacobian(th, ph, t_small)
            w = J @ line_field(profile, uu, vv, t_small)
            d0 = max(d0, _angle(w, J[:, 1]))
        if abs(profile.a(uu)) > TOL.binding_min_component:
            J = embed_jacobian(th, ph, 1 - t_small)
            w = J @ line_field(profile, uu, vv, 1 - t_small)
            d1 = max(d1, _angle(w, J[:, 0]))
    return ContactReport(samples, failures, float(pairing.min()), lie, d0, d1)


# -- crossing pairs -----------------------------------------------------------

@dataclass(frozen=True)
class SeparationReport:
    min_gap: float
    sign: int                     # +1 when the over rectangle's tile is higher everywhere
    samples: int


def crossing_separation(over, under, n: int = 201, kappa: float = 0.0) -> SeparationReport:
    """Heights of two crossing tiles on a dense grid of the overlap."""
    t_over, t_under = HarmonicTile.of(over), HarmonicTile.of(under)
    # the overlap is the over rectangle's theta-span times the under one's phi-span
    s = (np.arange(n) + 0.5) / n
    th = (t_over.theta1 + s * t_over.a) % 1.0
    ph = (t_under.phi1 + s * t_under.b) % 1.0
    TH, PH = np.meshgrid(th, ph, indexing="ij")
    x1, y1 = t_over.local(TH, PH)
    x2, y2 = t_under.local(TH, PH)
    diff = height(t_over, x1, y1, kappa) - height(t_under, x2, y2, kappa)
    signs = np.unique(np.sign(diff))
    sign = int(signs[0]) if len(signs) == 1 else 0
    return SeparationReport(float(np.abs(diff).min()), sign, diff.size)
