"""Global search for the extremal Hankel modulus and region sampling.

The functional is affine in the third polydisk parameter, so its supremum
sits on |sigma2| = 1 and can be taken analytically; the coarse sweep then
runs over a polar grid in (sigma0, sigma1) only, followed by Nelder-Mead
refinement in all six real parameters with moduli clamped to [0,1].
Everything is deterministic for a fixed (grid, refine_iters, seed).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np
from scipy.optimize import minimize

from .coeffbody import ParamTriple
from .disk import PoleParam
from .errors import DegenerateBoundary, InvalidInput
from .hankel import lower_bound_M, omega_map, upper_bound_M
from .kernels import best_sigma2, phi_batch, phi_sigma2_max

REGION_BINS = 256


@dataclass(frozen=True)
class RegionSample:
    """Point cloud plus an ordered closed boundary polyline."""

    points: np.ndarray
    boundary: np.ndarray
    meta: dict = field(default_factory=dict)


@dataclass(frozen=True)
class ExtremalReport:
    p: float
    m_estimate: float
    arg_sigma: ParamTriple
    lower: float
    upper: float
    iterations: int
    grid: int


def _polar_grid(n_angle: int, n_mod: int) -> np.ndarray:
    """Distinct points {r e^(i theta)} including the origin and |z| = 1."""
    mods = np.linspace(0.0, 1.0, n_mod)
    angles = 2.0 * np.pi * np.arange(n_angle) / n_angle
    pts = np.outer(mods[1:], np.exp(1j * angles)).ravel()
    return np.concatenate(([0.0 + 0.0j], pts))


def _clamped_sigma(x: np.ndarray) -> ParamTriple:
    vals = []
    for k in range(3):
        r = min(max(x[2 * k], 0.0), 1.0)
        vals.append(r * np.exp(1j * x[2 * k + 1]))
    return ParamTriple(*map(complex, vals))


def estimate_M(pp: PoleParam, grid: int = 24, refine_iters: int = 200,
               seed: int = 1, n_mod: int = 8, n_starts: int = 16) -> ExtremalReport:
    """Estimate sup |H| over the polydisk by grid sweep plus simplex refinement.

    ``grid`` is the number of angular samples per parameter, ``n_mod`` the
    number of radial samples (boundary included).  The best ``n_starts``
    grid points seed Nelder-Mead runs capped at ``refine_iters`` iterations.
    """
    if grid < 8:
        raise InvalidInput("grid must be >= 8")
    if refine_iters < 0:
        raise InvalidInput("refine_iters must be >= 0")
    P = pp.P
    scale = 18.0 * P**3

    pts = _polar_grid(grid, n_mod)
    S0, S1 = np.meshgrid(pts, pts, indexing="ij")
    s0 = S0.ravel()
    s1 = S1.ravel()
    vals = phi_sigma2_max(P, s0, s1)

    # deterministic ordering: descending value, ties broken lexicographically
    order = np.lexsort((s1.imag, s1.real, s0.imag, s0.real, -vals))
    best_idx = order[: n_starts]
    best_val = float(vals[best_idx[0]])
    b0, b1 = complex(s0[best_idx[0]]), complex(s1[best_idx[0]])
    best_sigma = ParamTriple(b0, b1, best_sigma2(P, b0, b1))

    # dedicated fine scan along the real slice (t, -1, *): the extremal value
    # can sit on a bump narrower than the polar grid step when p is near 1
    ts = np.linspace(0.0, 1.0, 4097)
    slice_vals = phi_sigma2_max(P, ts.astype(np.complex128),
                                np.full(ts.size, -1.0 + 0.0j))
    j = int(np.argmax(slice_vals))
    t_star = float(ts[j])
    if float(slice_vals[j]) > best_val:
        best_val = float(slice_vals[j])
        best_sigma = ParamTriple(t_star + 0.0j, -1.0 + 0.0j,
                                 best_sigma2(P, t_star + 0.0j, -1.0 + 0.0j))

    rng = np.random.default_rng(seed)
    extra = rng.uniform(0.0, 1.0, size=(4, 6))  # a few seeded random starts

    def negobj(x):
        sig = _clamped_sigma(x)
        return -abs(phi_batch(P, *(np.array([v]) for v in sig))[0])

    starts = [[t_star, 0.0, 1.0, np.pi, 1.0, 0.0]]
    for i in best_idx:
        a, b = complex(s0[i]), complex(s1[i])
        c = best_sigma2(P, a, b)
        starts.append([abs(a), float(np.angle(a)), abs(b), float(np.angle(b)),
                       abs(c), float(np.angle(c))])
    for row in extra:
        starts.append([row[0], 2 * np.pi * row[1], row[2], 2 * np.pi * row[3],
                       row[4], 2 * np.pi * row[5]])

    total_iters = 0
    if refine_iters > 0:
        for x0 in starts:
            res = minimize(negobj, np.asarray(x0), method="Nelder-Mead",
                           options={"maxiter": refine_iters, "xatol": 1e-12,
                                    "fatol": 1e-14})
            total_iters += int(res.nit)
            val = -float(res.fun)
            if val > best_val:
                best_val = val
                best_sigma = _clamped_sigma(res.x)

    return ExtremalReport(
        p=pp.p,
        m_estimate=best_val / scale,
        arg_sigma=best_sigma,
        lower=lower_bound_M(pp),
        upper=upper_bound_M(pp),
        iterations=total_iters,
        grid=grid,
    )


def sample_polydisk(rng: np.random.Generator, n: int, boundary_rate: float = 0.1) -> np.ndarray:
    """Area-uniform polydisk samples (n, 3); a slice forced onto |s| = 1."""
    r = np.sqrt(rng.uniform(0.0, 1.0, size=(n, 3)))
    th = rng.uniform(0.0, 2.0 * np.pi, size=(n, 3))
    on_boundary = rng.uniform(size=(n, 3)) < boundary_rate
    r = np.where(on_boundary, 1.0, r)
    return r * np.exp(1j * th)


def sample_region_H(pp: PoleParam, n_samples: int = 1000, seed: int = 1) -> RegionSample:
    """Point cloud of H values over quasi-random polydisk parameters.

    The boundary field holds direction-binned radial maxima around the
    cloud centroid; the region is not assumed convex, so no hull is taken.
    """
    if n_samples < 1:
        raise InvalidInput("n_samples must be >= 1")
    rng = np.random.default_rng(seed)
    sig = sample_polydisk(rng, n_samples)
    # dedicated all-boundary slice plus the rotation-family slice
    n_extra = max(n_samples // 4, 8)
    th = rng.uniform(0.0, 2.0 * np.pi, size=(n_extra, 3))
    sig_bdry = np.exp(1j * th)
    p2 = pp.p**2
    zetas = np.exp(2j * np.pi * np.arange(n_extra) / n_extra)
    sig_rot = np.column_stack([(zetas - p2) / (1.0 - p2 * zetas),
                               np.zeros(n_extra, complex), np.zeros(n_extra, complex)])
    sig = np.vstack([sig, sig_bdry, sig_rot])
    vals = phi_batch(pp.P, sig[:, 0], sig[:, 1], sig[:, 2]) / (18.0 * pp.P**3)
    boundary = _binned_boundary(vals)
    return RegionSample(points=vals, boundary=boundary,
                        meta={"p": pp.p, "n_samples": n_samples, "seed": seed})


def _binned_boundary(points: np.ndarray, n_bins: int = REGION_BINS) -> np.ndarray:
    center = points.mean()
    rel = points - center
    ang = np.mod(np.angle(rel), 2.0 * np.pi)
    bins = np.minimum((ang / (2.0 * np.pi) * n_bins).astype(int), n_bins - 1)
    out = []
    for b in range(n_bins):
        mask = bins == b
        if not np.any(mask):
            continue
        sub = rel[mask]
        out.append(points[mask][np.argmax(np.abs(sub))])
    out.append(out[0])
    return np.asarray(out, dtype=np.complex128)


def sample_omega_boundary(pp: PoleParam, n_theta: int = 512) -> RegionSample:
    """Closed boundary polyline of the rotation-family region Omega_p."""
    if n_theta < 16:
        raise InvalidInput("n_theta must be >= 16")
    th = 2.0 * np.pi * np.arange(n_theta) / n_theta
    bdry = omega_map(pp, np.exp(1j * th))
    bdry = np.concatenate([bdry, bdry[:1]])
    return RegionSample(points=bdry[:-1], boundary=bdry,
                        meta={"p": pp.p, "n_theta": n_theta})


def contains(region: RegionSample, z: complex, tol: float = 1e-9) -> str:
    """Winding-number membership test against the closed boundary polyline.

    Returns "inside", "boundary" (within tol of the polyline), or "outside".
    """
    b = np.asarray(region.boundary, dtype=np.complex128)
    if np.unique(np.round(b, 12)).size < 3:
        raise DegenerateBoundary("boundary polyline needs >= 3 distinct points")
    a = b[:-1]
    c = b[1:]
    # distance from z to each segment [a, c]
    seg = c - a
    L2 = np.abs(seg) ** 2
    t = np.clip(np.where(L2 > 0, ((z - a) * np.conj(seg)).real / np.where(L2 > 0, L2, 1.0), 0.0), 0.0, 1.0)
    dist = np.min(np.abs(a + t * seg - z))
    if dist <= tol:
        return "boundary"
    # winding number via summed argument increments
    rel = b - z
    dphi = np.angle(rel[1:] / rel[:-1])
    wind = int(round(np.sum(dphi) / (2.0 * np.pi)))
    return "inside" if wind != 0 else "outside"


def check_omega_monotone(p_small: float, p_large: float, n_theta: int = 512,
                         tol: float = 1e-9) -> bool:
    """True iff the Omega boundary for p_large sits inside Omega for p_small."""
    if not 0.0 < p_small < p_large < 1.0:
        raise InvalidInput("need 0 < p_small < p_large < 1")
    outer = sample_omega_boundary(PoleParam(p_small), n_theta)
    inner = sample_omega_boundary(PoleParam(p_large), n_theta)
    for z in inner.boundary[:-1]:
        if contains(outer, complex(z), tol=tol) == "outside":
            return False
    return True


def hausdorff_distance(a: Sequence[complex], b: Sequence[complex]) -> float:
    """Discrete symmetric Hausdorff distance between two point sets."""
    A = np.asarray(a, dtype=np.complex128)[:, None]
    B = np.asarray(b, dtype=np.complex128)[None, :]
    D = np.abs(A - B)
    return float(max(D.min(axis=1).max(), D.min(axis=0).max()))
