"""Acceptance criteria AC1-AC12.

Each test prints one ``[PASS]`` or ``[FAIL]`` line (collected again in the
terminal summary) with the measured worst case next to its tolerance, then
asserts the verdict.
"""
import io
import json
import time
from pathlib import Path

import numpy as np

from bwgeom import (
    bogoliubov_e_to_m,
    bogoliubov_m_to_e,
    bogoliubov_metric,
    bw_distance_dn,
    bw_distance_pn,
    bw_metric,
    exp_pn,
    fisher_distance,
    geodesic_dn,
    geodesic_pn,
    hellinger_distance,
    log_pn,
    lyapunov_horizontal_residual,
    lyapunov_solve,
    sld_metric,
    square_map_isometry_residual,
    submersion_differential,
    unitary_polar_factor,
    wigner_yanase_isometry_residual,
)
from bwgeom.cli import main
from bwgeom.testing import (
    random_density,
    random_hermitian,
    random_invertible,
    random_pd,
    random_prob,
    random_pure_state,
    random_trace_free,
)

from _oracles import bogoliubov_quadrature, haar_unitaries, rel_fro, simpson_integral, sqrtm_oracle

FIX = Path(__file__).parent / "fixtures"
DIMS = (2, 3, 5)


def cond_for(k):
    # condition numbers spread over [10, 1e4]
    return 10.0 ** (1.0 + 3.0 * k / 99)


def length_rel_errors(rng, sample, geodesic, distance):
    errs = []
    for k in range(100):
        n = DIMS[k % 3]
        a, b = sample(rng, n, cond_for(k)), sample(rng, n, cond_for(k))
        g = geodesic(a, b)
        d = distance(a, b)

        def speed(t):
            v = g.velocity(t)
            return np.sqrt(max(bw_metric(g(t), v, v), 0.0))

        errs.append(abs(simpson_integral(speed, panels=1024) - d) / d)
    return max(errs)


def test_ac01_geodesic_length_pn(rng, report):
    start = time.perf_counter()
    worst = length_rel_errors(rng, random_pd, geodesic_pn, bw_distance_pn)
    elapsed = time.perf_counter() - start
    ok = worst <= 1e-6 and elapsed <= 30
    assert report(
        "AC1 geodesic length = distance on P(n)",
        ok,
        f"max rel err {worst:.2e} (tol 1e-6), {elapsed:.1f}s (limit 30s), 100 pairs, cond <= 1e4",
    )


def test_ac02_geodesic_length_dn(rng, report):
    worst = length_rel_errors(rng, random_density, geodesic_dn, bw_distance_dn)
    assert report(
        "AC2 geodesic length = distance on D(n)",
        worst <= 1e-6,
        f"max rel err {worst:.2e} (tol 1e-6), 100 pairs, cond <= 1e4",
    )


def test_ac03_submersion_isometry(rng, report):
    worst = 0.0
    for k in range(200):
        n = DIMS[k % 3]
        M = random_invertible(rng, n, cond=1e3)
        # H M with H Hermitian is horizontal by construction
        A = random_hermitian(rng, n) @ M
        B = random_hermitian(rng, n) @ M
        lhs = np.real(np.trace(A @ B.conj().T))
        rhs = bw_metric(M @ M.conj().T, submersion_differential(M, A), submersion_differential(M, B))
        scale = np.linalg.norm(A) * np.linalg.norm(B)
        worst = max(worst, abs(lhs - rhs) / scale)
    assert report(
        "AC3 submersion isometry",
        worst <= 1e-10,
        f"max |Re tr(AB*) - g_BW(dpi A, dpi B)| / (|A||B|) = {worst:.2e} (tol 1e-10), 200 triples",
    )


def test_ac04_pushforward_optimality(rng, report):
    worst_gain, worst_attain = -np.inf, 0.0
    for k in range(50):
        n = DIMS[k % 3]
        S1, S2 = random_pd(rng, n), random_pd(rng, n)
        R1, R2 = sqrtm_oracle(S1), sqrtm_oracle(S2)
        U = unitary_polar_factor(R2 @ R1)
        best = np.linalg.norm(R1 - R2 @ U)
        # the infimum in closed form, from the trace expression
        d = np.sqrt(np.trace(S1 + S2 - 2 * sqrtm_oracle(R1 @ S2 @ R1)).real)
        worst_attain = max(worst_attain, abs(best - d), abs(bw_distance_pn(S1, S2) - d))
        probes = np.linalg.norm(R1[None] - R2[None] @ haar_unitaries(rng, n, 10_000), axis=(1, 2))
        worst_gain = max(worst_gain, best - probes.min())
    ok = worst_gain <= 1e-8 and worst_attain <= 1e-8
    assert report(
        "AC4 polar factor attains the infimum",
        ok,
        f"max improvement by 1e4 Haar probes {worst_gain:.2e} (tol 1e-8), "
        f"|analytic - trace formula| {worst_attain:.2e} (tol 1e-8), 50 pairs",
    )


def test_ac05_triangle_inequality(rng, report):
    samplers = {
        "P(3) bw": (lambda: random_pd(rng, 3, cond=1e3), bw_distance_pn),
        "D(3) bw": (lambda: random_density(rng, 3, cond=1e3), bw_distance_dn),
        "simplex Fisher": (lambda: random_prob(rng, 3), fisher_distance),
        "simplex Hellinger": (lambda: random_prob(rng, 3), hellinger_distance),
    }
    worst = {}
    for name, (draw, dist) in samplers.items():
        v = -np.inf
        for _ in range(1000):
            x, y, z = draw(), draw(), draw()
            v = max(v, dist(x, z) - dist(x, y) - dist(y, z))
        worst[name] = v
    top = max(worst.values())
    detail = ", ".join(f"{k} {v:.1e}" for k, v in worst.items())
    assert report("AC5 triangle inequality", top <= 1e-10, f"max violation {detail} (tol 1e-10), 1000 triples each")


def test_ac06_classical_reduction(rng, report):
    hel, fis = 0.0, 0.0
    for k in range(1000):
        n = 1 + k % 6
        mu, nu = rng.uniform(0.05, 5.0, n), rng.uniform(0.05, 5.0, n)
        hel = max(hel, abs(hellinger_distance(mu, nu) - bw_distance_pn(np.diag(mu), np.diag(nu))))
        p, q = random_prob(rng, n + 1), random_prob(rng, n + 1)
        fis = max(fis, abs(fisher_distance(p, q) - bw_distance_dn(np.diag(p), np.diag(q))))
    assert report(
        "AC6 classical reduction on diagonals",
        max(hel, fis) <= 1e-12,
        f"Hellinger vs P(n) {hel:.1e}, Fisher vs D(n) {fis:.1e} (tol 1e-12), 1000 pairs",
    )


def test_ac07_metric_family(rng, report):
    sld = forms = trip = quad = 0.0
    for k in range(200):
        n = DIMS[k % 3]
        rho = random_density(rng, n, cond=cond_for(k % 100))
        H, K = random_trace_free(rng, n), random_trace_free(rng, n)
        bw = bw_metric(rho, H, K)
        sld = max(sld, abs(sld_metric(rho, H, K) - 4 * bw) / abs(4 * bw))
        m = bogoliubov_metric(rho, H, K)
        forms = max(forms, abs(m - bogoliubov_metric(rho, H, K, form="e")) / abs(m))
        trip = max(trip, rel_fro(bogoliubov_e_to_m(rho, bogoliubov_m_to_e(rho, H)), H))
        E = random_hermitian(rng, n)
        quad = max(quad, rel_fro(bogoliubov_e_to_m(rho, E), bogoliubov_quadrature(rho, E, nodes=10_001)))
    ok = sld <= 1e-12 and forms <= 1e-10 and trip <= 1e-8 and quad <= 1e-8
    assert report(
        "AC7 metric-family coherence",
        ok,
        f"SLD=4BW {sld:.1e} (1e-12), Bogoliubov forms {forms:.1e} (1e-10), "
        f"e<->m round trip {trip:.1e} (1e-8), kernel vs quadrature {quad:.1e} (1e-8), 200 each",
    )


def test_ac08_square_map_identities(rng, report):
    sq = lem = wy = 0.0
    for k in range(200):
        n = DIMS[k % 3]
        S = random_pd(rng, n, cond=1e2)
        H, K = random_hermitian(rng, n), random_hermitian(rng, n)
        sq = max(sq, square_map_isometry_residual(S, H, K))
        wy = max(wy, wigner_yanase_isometry_residual(S, H, K))
        M = random_invertible(rng, n, cond=1e2)
        A = random_hermitian(rng, n) @ M
        lem = max(lem, lyapunov_horizontal_residual(M, A))
    assert report(
        "AC8 square-map and Lyapunov identities",
        max(sq, lem, wy) <= 1e-10,
        f"square-map {sq:.1e}, L(dpi A) = A M^-1 {lem:.1e}, Wigner-Yanase {wy:.1e} (tol 1e-10), 200 each",
    )


def test_ac09_aligned_segment(rng, report):
    herm, min_eig = 0.0, np.inf
    for k in range(500):
        n = DIMS[k % 3]
        S, T = random_pd(rng, n, cond=1e3), random_pd(rng, n, cond=1e3)
        U = unitary_polar_factor(T @ S)
        X = T @ U @ np.linalg.inv(S)
        herm = max(herm, np.linalg.norm(X - X.conj().T) / np.linalg.norm(X))
        Xh = 0.5 * (X + X.conj().T)
        w = np.linalg.eigvalsh(Xh)
        min_eig = min(min_eig, w[0] / w[-1])
    min_sv = np.inf
    for k in range(100):
        n = DIMS[k % 3]
        g = geodesic_pn(random_pd(rng, n, cond=1e4), random_pd(rng, n, cond=1e4))
        for t in np.linspace(0.0, 1.0, 101):
            s = np.linalg.svd(g.ambient(t), compute_uv=False)
            min_sv = min(min_sv, s[-1] / s[0])
    ok = herm <= 1e-9 and min_eig > 0 and min_sv > 0
    assert report(
        "AC9 aligned segment stays invertible",
        ok,
        f"T U S^-1: Hermitian defect {herm:.1e} (tol 1e-9), min rel eigenvalue {min_eig:.1e} (> 0), 500 pairs; "
        f"segment min rel singular value {min_sv:.1e} (> 0), 100 pairs x 101 t",
    )


def test_ac10_exp_log(rng, report):
    trip, speed = 0.0, 0.0
    for k in range(200):
        n = DIMS[k % 3]
        S, L = random_pd(rng, n, cond=1e3), random_pd(rng, n, cond=1e3)
        trip = max(trip, rel_fro(exp_pn(S, log_pn(S, L)), L))
        H = random_hermitian(rng, n)
        # keep t L_S(H) well inside the unit ball so exp stays on the minimising segment
        H /= np.linalg.norm(lyapunov_solve(S, H), 2)
        norm = np.sqrt(bw_metric(S, H, H))
        for t in (0.1, 0.05, 0.01, 1e-3):
            speed = max(speed, abs(bw_distance_pn(S, exp_pn(S, t * H)) - t * norm))
    assert report(
        "AC10 exp/log",
        trip <= 1e-8 and speed <= 1e-8,
        f"round trip rel err {trip:.1e} (tol 1e-8); |d(S, exp(tH)) - t|H|| {speed:.1e} (tol 1e-8), 200 pairs",
    )


def test_ac11_pure_state_limit(rng, report):
    eps, n, worst = 1e-6, 3, 0.0
    for _ in range(100):
        phi, psi = random_pure_state(rng, n), random_pure_state(rng, n)
        r1 = (1 - eps) * np.outer(phi, phi.conj()) + eps / n * np.eye(n)
        r2 = (1 - eps) * np.outer(psi, psi.conj()) + eps / n * np.eye(n)
        worst = max(worst, abs(bw_distance_dn(r1, r2) - np.arccos(abs(np.vdot(phi, psi)))))
    assert report(
        "AC11 pure-state limit",
        worst <= 1e-3,
        f"max |d_D(n) - arccos|<phi,psi>|| {worst:.1e} (tol 1e-3), 100 pairs in C^3, eps = 1e-6",
    )


def _cli(*argv):
    out = io.StringIO()
    code = main([str(a) for a in argv], out=out)
    return code, out.getvalue()


def test_ac12_cli(report, capsys):
    checks = {}
    code, text = _cli("dist", "--space", "pn", FIX / "eye2.json", FIX / "four_eye2.json")
    checks["pn sqrt(2)"] = code == 0 and abs(json.loads(text)["distance"] - np.sqrt(2)) <= 1e-12
    code, text = _cli("dist", "--space", "hellinger", FIX / "measure11.json", FIX / "measure44.json")
    checks["hellinger sqrt(2)"] = code == 0 and abs(json.loads(text)["distance"] - np.sqrt(2)) <= 1e-12
    target = np.arccos(np.sqrt(0.05) + np.sqrt(0.45))
    code, text = _cli("dist", "--space", "dn", FIX / "mixed2.json", FIX / "skewed2.json")
    checks["dn 0.463648"] = code == 0 and abs(json.loads(text)["distance"] - target) <= 1e-12
    code, text = _cli("metric", "--metric", "bw", FIX / "eye2.json", FIX / "eye2_tangent.json", FIX / "eye2_tangent.json")
    checks["bw 0.5"] = code == 0 and abs(json.loads(text)["value"] - 0.5) <= 1e-12
    code, text = _cli("geodesic", "--space", "pn", "--steps", "2", FIX / "eye2.json", FIX / "four_eye2.json")
    mid = np.array(json.loads(text)[1]["point"]["data"]) if code == 0 else np.inf
    checks["midpoint 2.25 I"] = code == 0 and np.max(np.abs(mid - 2.25 * np.eye(2))) <= 1e-12
    checks["malformed -> 2"] = _cli("dist", "--space", "pn", FIX / "malformed.json", FIX / "eye2.json")[0] == 2
    checks["non-PD -> 3"] = _cli("dist", "--space", "pn", FIX / "not_pd.json", FIX / "eye2.json")[0] == 3
    checks["non-unit-trace -> 3"] = (
        _cli("dist", "--space", "dn", FIX / "not_unit_trace.json", FIX / "mixed2.json")[0] == 3
    )
    capsys.readouterr()
    failed = [k for k, v in checks.items() if not v]
    assert report(
        "AC12 CLI end to end",
        not failed,
        f"{len(checks) - len(failed)}/{len(checks)} checks" + (f", failed: {failed}" if failed else ""),
    )
