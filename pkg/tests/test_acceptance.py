"""Acceptance suite: one criterion per test, one printed pass/fail line each.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the lines inline.
"""

import json
import time

import numpy as np
import pytest

from hankelbody import (H_F, A_n, ParamTriple, PoleParam, a_from_c, aw_disk,
                        c_from_w, check_omega_monotone, dieudonne2_lhs,
                        dieudonne2_rhs, estimate_M, g_poly, h_p, h_p_prime,
                        hankel2, hausdorff_distance, lower_bound_M,
                        membership_x2, sample_omega_boundary, upper_bound_M)
from hankelbody.cli import main as cli_main
from hankelbody.kernels import phi_batch
from hankelbody.oracle import a_batch_from_w

from conftest import random_polydisk, triples

P99 = [k / 100.0 for k in range(1, 100)]


def report(num, label, ok):
    print(f"ACCEPTANCE {num} ({label}): {'PASS' if ok else 'FAIL'}")
    assert ok, f"criterion {num} ({label}) failed"


def test_criterion_1_bound_sandwich():
    ok = True
    for p in [k / 10.0 for k in range(1, 10)]:
        pp = PoleParam(p)
        m = estimate_M(pp).m_estimate
        ok &= 1.0 < m
        ok &= 1.0 / (3.0 * p) < m <= upper_bound_M(pp) + 1e-6
    report(1, "estimate_M sandwiched between proven bounds", ok)


def test_criterion_2_lower_bound_identity():
    worst = max(
        abs(lower_bound_M(PoleParam(p))
            - (1.0 / (3.0 * p) + p / 3.0 + g_poly(1.0 / PoleParam(p).P)))
        for p in P99
    )
    report(2, f"lower-bound identity, worst residual {worst:.2e}", worst < 1e-10)


def test_criterion_3_hp_anchors():
    worst_v = worst_d = 0.0
    for p in P99:
        pp = PoleParam(p)
        P = pp.P
        worst_v = max(worst_v, abs(h_p(pp, 1.0) - 1.0))
        worst_d = max(worst_d, abs(h_p_prime(pp, 1.0)
                                   + 2.0 * (P - 2.0) * (P + 1.0) / (3.0 * P)))
    eps = 1e-7
    pp = PoleParam(0.5)
    fd = (h_p(pp, 1.0 + eps) - h_p(pp, 1.0 - eps)) / (2.0 * eps)
    ok = worst_v < 1e-12 and worst_d < 1e-12 and abs(fd - h_p_prime(pp, 1.0)) < 1e-6
    report(3, "quartic slice anchors at t=1", ok)


def test_criterion_4_triple_path_agreement():
    t_start = time.perf_counter()
    rng = np.random.default_rng(11)
    worst = 0.0
    for p in (0.2, 0.5, 0.8):
        pp = PoleParam(p)
        P = pp.P
        W = random_polydisk(rng, 10_000)
        # sigma-chain route via the vectorized polydisk functional
        p2 = p * p
        d = 1.0 - p2 * W[:, 0]
        fac = np.conj(d) / d
        h_sigma = phi_batch(P, (W[:, 0] - p2) / d, fac * W[:, 1],
                            fac * W[:, 2]) / (18.0 * P**3)
        # w-chain route through the coefficient map
        h_w = np.array([
            hankel2(a_from_c(pp, c_from_w(pp, w))) for w in triples(W)
        ])
        # independent series route
        A = a_batch_from_w(pp, W)
        h_ser = A[:, 0] * A[:, 2] - A[:, 1] ** 2
        worst = max(worst, float(np.max(np.abs(h_sigma - h_w))),
                    float(np.max(np.abs(h_w - h_ser))),
                    float(np.max(np.abs(h_sigma - h_ser))))
    elapsed = time.perf_counter() - t_start
    ok = worst < 1e-8 and elapsed < 30.0
    report(4, f"triple-path Hankel agreement, worst {worst:.2e}, {elapsed:.1f}s", ok)


def test_criterion_5_rotation_family_closed_form():
    rng = np.random.default_rng(12)
    pp = PoleParam(0.5)
    p = pp.p
    worst = 0.0
    for _ in range(1000):
        zeta = complex(np.sqrt(rng.uniform())
                       * np.exp(1j * rng.uniform(0, 2 * np.pi)))
        a2, a3, a4 = (A_n(pp, zeta, n) for n in (2, 3, 4))
        closed = -(1 - p * p) ** 2 * zeta / (1 - p * p * zeta) ** 2
        worst = max(worst, abs((a2 * a4 - a3 * a3) - closed),
                    abs(H_F(pp, zeta) - closed))
    worst_disk = 0.0
    worst_bdry = 0.0
    for n in (2, 3, 4, 5):
        disk = aw_disk(pp, n)
        for _ in range(250):
            zeta = complex(np.sqrt(rng.uniform())
                           * np.exp(1j * rng.uniform(0, 2 * np.pi)))
            worst_disk = max(worst_disk,
                             abs(A_n(pp, zeta, n) - disk.center) - disk.radius)
        th = rng.uniform(0, 2 * np.pi)
        z = A_n(pp, np.exp(1j * th), n)
        worst_bdry = max(worst_bdry, abs(abs(z - disk.center) - disk.radius))
    ok = worst < 1e-12 and worst_disk < 1e-12 and worst_bdry < 1e-12
    report(5, "rotation-family determinant and coefficient disks", ok)


def test_criterion_6_omega_monotone_and_limits():
    ps = (0.1, 0.3, 0.5, 0.7, 0.9)
    ok = all(check_omega_monotone(a, b, n_theta=512)
             for a in ps for b in ps if a < b)
    th = 2.0 * np.pi * np.arange(512) / 512
    cardioid = -(1.0 + np.exp(1j * th)) ** 2 / 4.0
    circle = -np.exp(1j * th)
    d1 = hausdorff_distance(
        sample_omega_boundary(PoleParam(0.95), 512).boundary[:-1], cardioid)
    d0 = hausdorff_distance(
        sample_omega_boundary(PoleParam(0.05), 512).boundary[:-1], circle)
    ok = ok and d1 < 0.02 and d0 < 0.02
    report(6, f"region nesting and limit shapes ({d1:.3f}/{d0:.3f})", ok)


def test_criterion_7_membership_round_trip():
    rng = np.random.default_rng(13)
    pp = PoleParam(0.5)
    worst = 0.0
    W = random_polydisk(rng, 1000, scale=0.99)
    for w in triples(W):
        res = membership_x2(pp, c_from_w(pp, w))
        if res.decision != "inside":
            worst = max(worst, 1.0)
        else:
            worst = max(worst, max(abs(a - b) for a, b in zip(res.params, w)))
    # the squaring map at z0 = 0.5 attains second-order equality: both sides 2/3
    lhs = dieudonne2_lhs(0.5, 0.25, 1.0, 1.0)
    rhs = dieudonne2_rhs(0.5, 0.25)
    ok = worst < 1e-9 and abs(lhs - rhs) < 1e-9 and abs(lhs - 2.0 / 3.0) < 1e-9
    report(7, f"coefficient-body round trip, worst {worst:.2e}", ok)


def test_criterion_8_cli_determinism(tmp_path):
    pairs = []
    for tag, argv in (
        ("verify", ["verify", "--p", "0.3,0.6", "--samples", "120", "--seed", "4"]),
        ("extremal", ["extremal", "--p", "0.4", "--grid", "12",
                      "--iters", "60", "--seed", "4"]),
    ):
        outs = []
        for run in (1, 2):
            path = tmp_path / f"{tag}_{run}.json"
            code = cli_main(argv + ["--out", str(path)])
            assert code == 0
            outs.append(path.read_bytes())
        json.loads(outs[0])
        pairs.append(outs[0] == outs[1])
    report(8, "byte-identical JSON across repeated CLI runs", all(pairs))


def _criterion2_residual():
    worst = 0.0
    for p in (0.2, 0.5, 0.8):
        pp = PoleParam(p)
        worst = max(worst, abs(lower_bound_M(pp)
                               - (1.0 / (3.0 * p) + p / 3.0
                                  + g_poly(1.0 / pp.P))))
    return worst


def _criterion4_residual(n=150):
    rng = np.random.default_rng(14)
    worst = 0.0
    for p in (0.2, 0.5, 0.8):
        pp = PoleParam(p)
        from hankelbody import hankel_from_sigma, sigma_from_w
        for w in triples(random_polydisk(rng, n)):
            h_w = hankel2(a_from_c(pp, c_from_w(pp, w)))
            h_s = hankel_from_sigma(pp, sigma_from_w(pp, w))
            worst = max(worst, abs(h_w - h_s))
    return worst


def test_criterion_9_mutation_sensitivity(monkeypatch):
    import hankelbody.hankel as hk

    assert _criterion2_residual() < 1e-10
    assert _criterion4_residual() < 1e-8

    undetected = []

    orig_hp = hk.hp_numerator_coeffs
    for k in range(5):
        def bad_hp(P, _k=k):
            c = orig_hp(P).copy()
            c[_k] += 1e-3
            return c

        monkeypatch.setattr(hk, "hp_numerator_coeffs", bad_hp)
        if _criterion2_residual() <= 1e-10:
            undetected.append(f"quartic[{k}]")
    monkeypatch.setattr(hk, "hp_numerator_coeffs", orig_hp)

    orig_phi = hk.phi_coeffs
    base = orig_phi(2.5)
    for key in base:
        entries = range(len(base[key])) if isinstance(base[key], tuple) else (None,)
        for idx in entries:
            def bad_phi(P, _key=key, _idx=idx):
                c = orig_phi(P)
                if _idx is None:
                    c[_key] = c[_key] + 1e-3
                else:
                    t = list(c[_key])
                    t[_idx] += 1e-3
                    c[_key] = tuple(t)
                return c

            monkeypatch.setattr(hk, "phi_coeffs", bad_phi)
            if _criterion4_residual(60) <= 1e-8:
                undetected.append(f"{key}[{idx}]")
    monkeypatch.setattr(hk, "phi_coeffs", orig_phi)

    report(9, f"mutation sensitivity, undetected: {undetected or 'none'}",
           not undetected)
