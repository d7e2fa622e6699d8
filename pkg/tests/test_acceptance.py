"""One test per acceptance criterion; each prints a single PASS/FAIL line.

The lines are also collected into the pytest terminal summary. Run this file
directly with ``python3 tests/test_acceptance.py`` for the lines alone.
"""

import cmath
import csv
import io
import math
import os
import subprocess
import sys
import time

import numpy as np

from latmin import (LatticeBasis, LatticeKind, SpeciesParams, apply_generator, axis_derivative, dual_point, eta4,
                    f_b, fourier_green, grad_f_b, green_array, interaction_F, interaction_F_quadrature, phase_diagram,
                    q_of_b, ratio_Y0_over_Y1, threshold_B, verify_product_identities)
from latmin.minimizer import _threshold
from latmin.modular import Generator
from latmin.verifier import check_beta_conditions, check_lemma_suite, check_paper_constants, check_T_positive

try:
    from conftest import ACCEPTANCE_LINES
except ImportError:  # run as a script
    ACCEPTANCE_LINES = []

SQRT3 = math.sqrt(3.0)
SEED = 20240601


def report(n, title, items):
    """``items`` is a list of (label, ok, detail); prints one line and asserts all ok."""
    ok = all(i[1] for i in items)
    failed = [f"{label} [{detail}]" for label, good, detail in items if not good]
    detail = "; ".join(failed) if failed else "; ".join(f"{label} {d}" for label, _, d in items)
    line = f"{'PASS' if ok else 'FAIL'} criterion {n}: {title} -- {detail}"
    print(line)
    ACCEPTANCE_LINES.append(line)
    assert ok, line


def near(label, value, want, tol):
    return (label, abs(value - want) <= tol, f"{value:.10g} vs {want} +/- {tol:g}")


def test_criterion_1_threshold():
    _threshold.cache_clear()
    t0 = time.perf_counter()
    B = threshold_B()
    d = axis_derivative(0, 1, 1.0)
    e = axis_derivative(1, 1, 1.0)
    dt = time.perf_counter() - t0
    report(1, "threshold B and its derivatives", [
        near("B", B, 0.1867, 5e-4),
        near("d", d, 0.2982, 5e-4),
        near("e", e, -1.298, 5e-3),
        ("runtime", dt < 1.0, f"{dt:.3f}s < 1s"),
    ])


def test_criterion_2_ratio_limit():
    report(2, "Y0/Y1 limit at y=1", [near("ratio(1)", ratio_Y0_over_Y1(1.0), -0.2297, 5e-4)])


def test_criterion_3_phase_structure():
    B = threshold_B()
    t0 = time.perf_counter()
    rows = phase_diagram(0.0, 1.0, 0.005, workers=1)
    dt = time.perf_counter() - t0
    kinds = [r.klass.kind for r in rows]
    runs = [k for i, k in enumerate(kinds) if i == 0 or k != kinds[i - 1]]
    changes = {(kinds[i - 1], kinds[i]): rows[i].b for i in range(1, len(rows)) if kinds[i] != kinds[i - 1]}
    b_rs = changes.get((LatticeKind.RECTANGULAR, LatticeKind.SQUARE), math.nan)
    b_sr = changes.get((LatticeKind.SQUARE, LatticeKind.RHOMBIC), math.nan)
    qs = [q_of_b(r.b) for r in rows if r.b < B]
    angles = [r.klass.param for r in rows if r.b > 1 - B and r.klass.kind is LatticeKind.RHOMBIC]
    z1 = rows[-1].z_star.z
    want = [LatticeKind.RECTANGULAR, LatticeKind.SQUARE, LatticeKind.RHOMBIC, LatticeKind.HEXAGONAL]
    report(3, "phase sweep at step 0.005", [
        ("sequence", runs == want, "->".join(k.value for k in runs)),
        ("rect->square", abs(b_rs - B) <= 0.005, f"at b={b_rs:.3f}, B={B:.5f}"),
        ("square->rhombic", abs(b_sr - (1 - B)) <= 0.005, f"at b={b_sr:.3f}, 1-B={1 - B:.5f}"),
        ("q_b decreasing", bool(np.all(np.diff(qs) < 0)), f"{len(qs)} samples"),
        ("angle decreasing", bool(np.all(np.diff(angles) < 0)), f"{len(angles)} samples"),
        near("q_0", q_of_b(0.0), SQRT3, 1e-9),
        ("z*(1)", abs(z1 - complex(0.5, SQRT3 / 2)) <= 1e-8, f"{z1}"),
        ("runtime", dt < 60.0, f"{dt:.2f}s < 60s"),
    ])


def test_criterion_4_reference_constants():
    c = {r.name: r.computed for r in check_paper_constants()}
    beta = {r.name: r.computed for r in check_beta_conditions(1.08)}
    items = [
        near("A1", c["A1"], 109.24, 0.01),
        near("A2", c["A2"], 1141.50, 0.01),
        near("A", c["A"], -21077.61, 0.02),
        near("kappa(1)", c["kappa(1)"], -13.63, 0.01),
        near("kappa(sqrt3)", c["kappa(sqrt3)"], -15.47, 0.01),
        near("alt3", c["alt3"], 56.68, 0.01),
        near("derivative bound", c["Y0'_bound"], -0.8388, 0.001),
    ]
    for k, want in enumerate((0.2058, 0.2608, -0.0007930, 35.20), start=1):
        v = beta[f"beta_condition_{k}"]
        items.append((f"beta{k}", float(f"{v:.3g}") == float(f"{want:.3g}"), f"{v:.4g} vs {want}"))
    report(4, "reference constants", items)


def test_criterion_5_property_suite():
    rng = np.random.default_rng(SEED)
    n = 100
    bs = rng.uniform(0.0, 1.0, n)
    zs = rng.uniform(-1.5, 1.5, n) + 1j * rng.uniform(0.3, 3.0, n)
    gens = rng.integers(0, 4, n)
    inv = dua = eta = grad = 0.0
    h = 1e-5
    for b, z, g in zip(bs, zs, gens):
        f = f_b(b, z)
        inv = max(inv, abs(f_b(b, apply_generator(z, list(Generator)[g])) - f))
        dua = max(dua, abs(f_b(b, dual_point(z)) - f_b(1 - b, z)))
        e4 = eta4(z)
        eta = max(eta, abs(eta4(z + 1) - cmath.exp(1j * math.pi / 3) * e4) / abs(e4),
                  abs(eta4(-1 / z) + z * z * e4) / abs(z * z * e4))
        X, Y = grad_f_b(b, z)
        fx = (f_b(b, z + h) - f_b(b, z - h)) / (2 * h)
        fy = (f_b(b, z + 1j * h) - f_b(b, z - 1j * h)) / (2 * h)
        grad = max(grad, abs(X - fx), abs(Y - fy))
    report(5, f"{n} seeded cases per property", [
        ("invariance", inv <= 1e-10, f"max {inv:.2e} <= 1e-10"),
        ("duality", dua <= 1e-10, f"max {dua:.2e} <= 1e-10"),
        ("eta relations", eta <= 1e-11, f"max {eta:.2e} <= 1e-11"),
        ("gradient vs FD", grad <= 1e-7, f"max {grad:.2e} <= 1e-7"),
    ])


def test_criterion_6_oracle_equivalence():
    sets = [
        (1j, SpeciesParams(0.01, 0.01, 1.0, 0.5, 1.0)),
        (complex(0.5, SQRT3 / 2), SpeciesParams(0.03, 0.01, 2.0, 1.0, 1.0)),
        (0.2 + 1.3j, SpeciesParams(0.05, 0.02, 1.0, 0.3, 0.5)),
    ]
    quad = max(abs(interaction_F(LatticeBasis.from_tau(t), p) - interaction_F_quadrature(LatticeBasis.from_tau(t), p))
               for t, p in sets)
    rng = np.random.default_rng(SEED)
    taus = rng.uniform(-0.5, 0.5, 20) + 1j * rng.uniform(0.9, 2.0, 20)
    four = 0.0
    for tau in taus:
        b = LatticeBasis.from_tau(tau)
        z = b.point(*rng.uniform(0.05, 0.95, 2))
        four = max(four, abs(float(green_array(b, np.array([z]))[0]) - fourier_green(b, z)))
    ptaus = rng.uniform(-1.0, 1.0, 10) + 1j * rng.uniform(0.3, 3.0, 10)
    prod = max(max(verify_product_identities(t)) for t in ptaus)
    report(6, "closed forms vs independent oracles", [
        ("F vs quadrature (3 sets)", quad <= 1e-6, f"max {quad:.2e} <= 1e-6"),
        ("G vs Fourier (20 points)", four <= 1e-7, f"max {four:.2e} <= 1e-7"),
        ("product identities (10 tau)", prod <= 1e-12, f"max {prod:.2e} <= 1e-12"),
    ])


def test_criterion_7_positivity_audit():
    T = {r.name: r for r in check_T_positive(n_samples=500)}
    ys = np.linspace(1.0, SQRT3, 502)[1:-1]
    ratio = np.array([ratio_Y0_over_Y1(y) for y in ys])
    lem = {r.name: r for r in check_lemma_suite()}
    signs = ["Y1>0_on_(0.2,1)", "Y1<0_on_(1,5)", "Y0_sign_+_on_(0.2,0.5774)", "Y0_sign_-_on_(0.5774,1)",
             "Y0_sign_+_on_(1,1.732)", "Y0_sign_-_on_(1.732,5)", "Y_b<0_off_i_for_b_in_[B,1-B]",
             "Y_b_sign_change_at_q_b_for_b<B"]
    items = [
        ("T>0 (500 samples)", T["T>0_on_500_samples"].passed, f"min {T['T>0_on_500_samples'].computed:.3e}"),
        ("Y0/Y1 increasing (500 samples)", bool(np.all(np.diff(ratio) > 0)), f"min step {np.diff(ratio).min():.2e}"),
    ]
    items += [(s, lem[s].passed, f"margin {lem[s].margin:.2e}") for s in signs]
    report(7, "positivity and sign patterns", items)


def test_criterion_8_cli_contract(tmp_path):
    env = dict(os.environ)
    v = subprocess.run([sys.executable, "-m", "latmin", "verify", "--suite", "all"], capture_output=True, env=env)
    failing = [ln.split()[1] for ln in v.stdout.decode().splitlines() if ln.startswith("FAIL")]
    out = tmp_path / "phase.csv"
    p = subprocess.run([sys.executable, "-m", "latmin", "phase", "--step", "0.05", "--format", "csv", "--out", str(out)],
                       capture_output=True, env=env)
    data = out.read_bytes() if out.exists() else b""
    header_ok = p.returncode == 0 and data.split(b"\n", 1)[0] == b"b,re_zstar,im_zstar,class,param,f_value"
    worst = 0.0
    for row in csv.DictReader(io.StringIO(data.decode("utf-8"))):
        z = complex(float(row["re_zstar"]), float(row["im_zstar"]))
        worst = max(worst, abs(float(row["f_value"]) - f_b(float(row["b"]), z)))
    report(8, "CLI contract", [
        ("verify --suite all exits 0", v.returncode == 0, f"exit {v.returncode}, failing {failing}"),
        ("phase CSV header", header_ok, "byte-exact"),
        ("CSV round-trip", bool(data) and worst <= 1e-12, f"max {worst:.2e} <= 1e-12"),
    ])


if __name__ == "__main__":
    import pathlib
    import tempfile

    for name, fn in list(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn(pathlib.Path(tempfile.mkdtemp())) if "tmp_path" in fn.__code__.co_varnames else fn()
            except AssertionError:
                pass
