"""Closed-form functionals: coefficient map, Hankel determinant, the
polydisk functional Phi_p, the one-parameter extremal family, and the
bound polynomials used in the sandwich estimate for M(p).

Transcribed polynomial displays live in module-level tables so the test
suite can perturb a single coefficient and confirm the defining identities
catch the drift.
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

from .coeffbody import CoeffTriple, ParamTriple, c_from_sigma
from .disk import DiskRegion, PoleParam
from .errors import InvalidInput


class ACoeffs(NamedTuple):
    a2: complex
    a3: complex
    a4: complex


def a_from_c(pp: PoleParam, c: CoeffTriple) -> ACoeffs:
    """Map (c0,c1,c2) of the self-map to (a2,a3,a4) of the reconstructed function."""
    P = pp.P
    c0, c1, c2 = c
    a2 = P - c0
    a3 = P * P + (-c1 + c0 * c0 - 4 * P * c0 - 2.0) / 3.0
    a4 = P**3 + (
        -c2 + c0 * c1 + 6 * c0 - 9 * P - 9 * P * P * c0 + 3 * P * c0 * c0 - 3 * P * c1
    ) / 6.0
    return ACoeffs(complex(a2), complex(a3), complex(a4))


def hankel2(a: ACoeffs) -> complex:
    """Second Hankel determinant a2*a4 - a3^2."""
    return complex(a.a2 * a.a4 - a.a3 * a.a3)


def hankel_from_c(pp: PoleParam, c: CoeffTriple) -> complex:
    """H expressed directly in the c-coefficients (times 18, then divided back)."""
    P = pp.P
    c0, c1, c2 = c
    h18 = (
        3 * (c0 - P) * c2
        - 2 * c1 * c1
        + (c0 * c0 - 4 * P * c0 + 3 * P * P - 8.0) * c1
        - (c0 * c0 - P * c0 + 1.0) * (2 * c0 * c0 - 5 * P * c0 + 3 * P * P + 8.0)
    )
    return complex(h18 / 18.0)


# --- the polydisk functional -------------------------------------------------

def phi_coeffs(P: float) -> dict:
    """Transcription constants of Phi_p, grouped per term.

    "b*" entries are sigma0-polynomials (ascending); scalar entries are
    prefactors.  Kept in one table so a single perturbation is observable.
    """
    return {
        "lead": -18.0 * P,
        "b0": (1.0, P * P - 2.0, 1.0),
        "c1": 3.0,
        "b1": (1.0 - 7.0 * P * P + 2.0 * P**4, 3.0 * P * P - 2.0, 1.0),
        "c2": -P,
        "b2_m0": 2.0,
        "b2_conj": 3.0,
        "b2": (P * P - 1.0, 1.0),
        "c3": 3.0 * P,
        "b3": (P * P - 1.0, 1.0),
    }


def _polyval_asc(coeffs, x):
    acc = 0.0 + 0.0j
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def phi_p(pp: PoleParam, sigma: ParamTriple) -> complex:
    """Phi_p(sigma0, sigma1, sigma2); H = phi_p / (18 P^3) on the polydisk."""
    C = phi_coeffs(pp.P)
    s0, s1, s2 = sigma
    m0 = 1.0 - abs(s0) ** 2
    m1 = 1.0 - abs(s1) ** 2
    t0 = C["lead"] * _polyval_asc(C["b0"], s0)
    t1 = C["c1"] * _polyval_asc(C["b1"], s0) * m0 * s1
    t2 = C["c2"] * (C["b2_m0"] * m0 + C["b2_conj"] * np.conj(s0) * _polyval_asc(C["b2"], s0)) * m0 * s1 * s1
    t3 = C["c3"] * _polyval_asc(C["b3"], s0) * m0 * m1 * s2
    return complex(t0 + t1 + t2 + t3)


def hankel_from_sigma(pp: PoleParam, sigma: ParamTriple) -> complex:
    return phi_p(pp, sigma) / (18.0 * pp.P**3)


def unimodular_eps(pp: PoleParam, sigma0: complex) -> complex:
    """|1 + p^2 sigma0| / (1 + p^2 sigma0), the rotation of the sigma chain."""
    a = 1.0 + pp.p**2 * sigma0
    return complex(abs(a) / a)


# --- the one-parameter extremal family ---------------------------------------

def A_n(pp: PoleParam, zeta: complex, n: int):
    """Coefficient a_n of the rotation-family extremal function."""
    if n < 1:
        raise InvalidInput("n must be >= 1")
    p = pp.p
    return (1.0 - p ** (2 * n) * zeta) / (p ** (n - 1) * (1.0 - p * p * zeta))


def koebe(z):
    return z / (1.0 - z) ** 2


def H_F(pp: PoleParam, zeta):
    """Closed-form Hankel determinant of the rotation family: a Koebe pullback."""
    p = pp.p
    return -((1.0 - p * p) ** 2 / (p * p)) * koebe(p * p * zeta)


def aw_disk(pp: PoleParam, n: int) -> DiskRegion:
    """The exact coefficient disk for a_n over the whole class (n >= 2)."""
    if n < 2:
        raise InvalidInput("n must be >= 2")
    p = pp.p
    denom = p ** (n - 1) * (1.0 - p**4)
    center = (1.0 - p ** (2 * n + 2)) / denom
    radius = (p * p - p ** (2 * n)) / denom
    return DiskRegion(complex(center), float(radius))


def omega_map(pp: PoleParam, z):
    """-(1/P^2) [1 + (P^2-2) z + z^2]; the image of the closed disk is Omega_p."""
    t = pp.P**2
    return -(1.0 + (t - 2.0) * z + z * z) / t


# --- bound polynomials for M(p) ----------------------------------------------

def hp_numerator_coeffs(P: float) -> np.ndarray:
    """Coefficients (t^0..t^4, ascending) of 18 P^3 h_p(t)."""
    return np.array(
        [
            6.0 * P**4 - 21.0 * P**2 + 20.0 * P + 3.0,
            3.0 * (7.0 * P**3 + 3.0 * P**2 - 13.0 * P - 2.0),
            -(6.0 * P**4 - 21.0 * P**2 - 17.0 * P),
            -(3.0 * P**3 + 9.0 * P**2 - 3.0 * P - 6.0),
            -(P + 3.0),
        ]
    )


def h_p(pp: PoleParam, t: float) -> float:
    """The quartic slice -Phi_p(t,-1,0)/(18 P^3) for t in [0,1]."""
    P = pp.P
    c = hp_numerator_coeffs(P)
    return float(np.polynomial.polynomial.polyval(t, c) / (18.0 * P**3))


def h_p_prime(pp: PoleParam, t: float) -> float:
    """Derivative of h_p; at t=1 equals -2(P-2)(P+1)/(3P)."""
    P = pp.P
    c = hp_numerator_coeffs(P)
    dc = c[1:] * np.arange(1, c.size)
    return float(np.polynomial.polynomial.polyval(t, dc) / (18.0 * P**3))


#: ascending coefficients of g(x), x^1 .. x^7
G_POLY_COEFFS = (
    -7.0 / 48.0,
    143.0 / 72.0,
    -121.0 / 128.0,
    -427.0 / 1152.0,
    343.0 / 384.0,
    5831.0 / 4608.0,
    -2401.0 / 1536.0,
)


def g_poly(x: float) -> float:
    """The degree-7 correction polynomial in the lower-bound identity."""
    acc = 0.0
    for c in reversed(G_POLY_COEFFS):
        acc = (acc + c) * x
    return acc


def lower_bound_M(pp: PoleParam) -> float:
    """h_p evaluated at t = 7/(4P); equals 1/(3p) + p/3 + g(1/P)."""
    return h_p(pp, 7.0 / (4.0 * pp.P))


def upper_bound_M(pp: PoleParam) -> float:
    """(P^2 + 2P - 2)/(3P), the proven upper bound for M(p)."""
    P = pp.P
    return (P * P + 2.0 * P - 2.0) / (3.0 * P)


def B_coeffs(pp: PoleParam, y: float):
    """The four bound terms (B0..B3) at y = |sigma0| in [0,1]."""
    if not 0.0 <= y <= 1.0:
        raise InvalidInput("y must lie in [0,1]")
    P = pp.P
    my = 1.0 - y * y
    B0 = 18.0 * P * (1.0 + (P * P - 2.0) * y + y * y)
    B1 = 3.0 * (1.0 - 7.0 * P * P + 2.0 * P**4 + (3.0 * P * P - 2.0) * y + y * y) * my
    B2 = P * (2.0 * my + 3.0 * y * (P * P - 1.0 + y)) * my
    B3 = 3.0 * P * (P * P - 1.0 + y) * my
    return B0, B1, B2, B3


def G_p(pp: PoleParam, t: float) -> float:
    """Cubic majorant of B0+B1+B3 at t = 1-|sigma0|; maximal at t=0."""
    if not 0.0 <= t <= 1.0:
        raise InvalidInput("t must lie in [0,1]")
    P = pp.P
    return (
        6.0 * (P**4 + 2.0 * P**3 - 2.0 * P**2)
        + 3.0 * (-3.0 * P**3 - 6.0 * P**2 + 4.0 * P + 1.0) * t * t
        + 3.0 * P * (3.0 * P + 1.0) * t**3
    )


def hankel_from_sigma_chain(pp: PoleParam, sigma: ParamTriple) -> complex:
    """H via the algebraic sigma-chain route (a-coefficients of c_from_sigma)."""
    return hankel2(a_from_c(pp, c_from_sigma(pp, sigma)))
