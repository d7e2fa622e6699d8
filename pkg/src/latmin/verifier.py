"""Numerical audit of the constants, inequality chains and invariances behind the solver.

Each check returns a ``CheckResult``. Equality checks pass when
``|computed - expected| <= tolerance``; bound checks pass when ``computed``
lies strictly on the stated side of ``expected``. Informational checks are
reported but never counted as failures.

Random sample points come from ``numpy.random.default_rng(SEED)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .assembly import SpeciesParams, f_tilde, interaction_F
from .green import (LatticeBasis, fourier_green, green_array, h_regular_at_zero,
                    verify_product_identities)
from .minimizer import maximize_f_b, q_of_b, threshold_B
from .modular import (Generator, SeriesBudget, apply_generator, apply_word, canonicalize,
                      default_budget, eta4, in_w_bar)
from .objective import arg_z_eta, circle_transfer, dual_point, f_b, f_component, grad_f_b
from .series import SpeciesTag, axis_derivative, ratio_Y0_over_Y1

SEED = 20240601
PI = math.pi
SQRT3 = math.sqrt(3.0)
BETA = 1.08
ONE, ZERO = SpeciesTag.ONE, SpeciesTag.ZERO


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one named check.

    ``kind`` is ``"eq"`` (``|computed - expected| <= tolerance``), ``"lt"``
    (``computed < expected``), ``"gt"`` (``computed > expected``) or
    ``"info"`` (reported only).
    """

    name: str
    computed: float
    expected: float
    tolerance: float
    passed: bool
    kind: str = "eq"

    @property
    def informational(self) -> bool:
        return self.kind == "info"

    @property
    def margin(self) -> float:
        """Distance to failure; negative when the check fails."""
        if self.kind == "eq":
            return self.tolerance - abs(self.computed - self.expected)
        if self.kind == "lt":
            return self.expected - self.computed
        if self.kind == "gt":
            return self.computed - self.expected
        return math.nan

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "computed": self.computed,
            "expected": self.expected,
            "tolerance": self.tolerance,
            "passed": self.passed,
            "kind": self.kind,
            "margin": self.margin,
        }


def _eq(name, computed, expected, tol) -> CheckResult:
    computed = float(computed)
    return CheckResult(name, computed, float(expected), float(tol), bool(abs(computed - expected) <= tol), "eq")


def _lt(name, computed, bound) -> CheckResult:
    computed = float(computed)
    return CheckResult(name, computed, float(bound), 0.0, bool(computed < bound), "lt")


def _gt(name, computed, bound) -> CheckResult:
    computed = float(computed)
    return CheckResult(name, computed, float(bound), 0.0, bool(computed > bound), "gt")


def _info(name, computed, expected=0.0) -> CheckResult:
    return CheckResult(name, float(computed), float(expected), math.nan, True, "info")


def _rel(a, b):
    return abs(a - b) / max(abs(b), 1e-300)


# --- closed-form constants ---------------------------------------------------

def a1_constant() -> float:
    return 4 * PI**3 / (1 + math.exp(-PI)) ** 3


def a2_constant() -> float:
    e1, e2, e4 = math.exp(-PI), math.exp(-2 * PI), math.exp(-4 * PI)
    return 32 * PI**3 / (1 - e2) ** 3 + 4 * PI**3 * (1 + 4 * e2 + e4) / ((1 - e1) ** 3 * (1 - e2) ** 4)


def kappa(y: float) -> float:
    """Upper envelope of ``Y_0''(yi) / r`` on ``[1, sqrt(3)]``."""
    return 2 * math.exp(PI * y) / y**3 - a1_constant() + a2_constant() * math.exp(-PI * y)


def a_constant() -> float:
    e = math.exp
    first = 36 * PI**2 / (3 * (1 + e(-3 * PI)) ** 2) * (3 * PI * (1 - e(-3 * PI)) / (1 + e(-3 * PI)) - 2)
    second = (64 * PI**5 * (1 + e(-PI)) / (1 - e(-PI))
              * (1 + 31 * e(-4 * PI) + 55 * e(-8 * PI) + 9 * e(-12 * PI)) / (1 - e(-4 * PI)) ** 5)
    third = (1024 * PI**5 / (1 - e(-2 * PI)) ** 4
             * (e(-2 * PI) * (1 + 6 * e(-2 * PI) + e(-4 * PI)) / (1 - e(-2 * PI)) ** 3))
    return first - second - third


def alternating_decrease_constant() -> float:
    # lower bound on n^2/((n+1)^2 r) - ratio of denominators for y >= sqrt(3)
    return math.exp(SQRT3 * PI) / 4 - (1 + math.exp(-SQRT3 * PI)) ** 2 / (1 - math.exp(-2 * SQRT3 * PI)) ** 2


def derivative_bound_as_printed() -> float:
    # the printed chain drops a factor pi between its second and third lines
    return -1 + 4 * PI * 3 * math.exp(-PI * SQRT3)


def derivative_bound_corrected() -> float:
    return -1 + 4 * PI**2 * 3 * math.exp(-PI * SQRT3)


def cubic_alternating_pair() -> tuple[float, float]:
    return math.exp(PI) / 8, (1 + math.exp(-PI)) ** 3 / (1 - math.exp(-2 * PI)) ** 3


def diagonal_constant() -> float:
    return 1 - math.exp(-PI) - math.exp(-2 * PI)


# --- the four conditions on beta ---------------------------------------------

def beta_condition_1(b: float) -> float:
    return -1 / b**2 + 4 * PI**2 * math.exp(-PI * b) / (1 + math.exp(-PI * b)) ** 2 \
        - 16 * PI**2 * math.exp(-2 * PI * b) / (1 - math.exp(-2 * PI * b)) ** 2


def beta_condition_2(b: float) -> float:
    return -1 + 48 * math.exp(-PI * b) - 312 * math.exp(-2 * PI * b)


def sigma(y: float) -> float:
    """Upper envelope of ``Y_0'''(yi) / (4 pi^4)``."""
    return -6 / (4 * PI**4 * y**4) + (math.exp(-PI * y) - 24 * math.exp(-2 * PI * y)
                                      + 104 * math.exp(-3 * PI * y)) / (1 - math.exp(-2 * PI)) ** 4


def nu(y: float, b: float = BETA) -> float:
    """Increasing minorant factor of ``T(y) (1 + r)^3 / (pi^2 r^2)`` for ``y >= b``."""
    A = a_constant()
    return (4 * PI / y**2 - 8 / y**3) * math.exp(PI * y) - (4 * PI / y**2 + 8 / y**3) \
        + A * math.exp(-PI * b) * (1 + math.exp(-PI * b)) ** 3 / PI**2


def beta_condition_3(b: float) -> float:
    return sigma(b)


def beta_condition_4(b: float) -> float:
    return nu(b, b)


# --- axis quantities ---------------------------------------------------------

def wronskian_T(y: float, budget: SeriesBudget | None = None) -> float:
    """``T(y) = Y_0'' Y_1' - Y_0' Y_1''`` on the imaginary axis."""
    d = axis_derivative
    return d(ZERO, 2, y, budget) * d(ONE, 1, y, budget) - d(ZERO, 1, y, budget) * d(ONE, 2, y, budget)


def wronskian_T_prime(y: float, budget: SeriesBudget | None = None) -> float:
    d = axis_derivative
    return d(ZERO, 3, y, budget) * d(ONE, 1, y, budget) - d(ZERO, 1, y, budget) * d(ONE, 3, y, budget)


def _ck(k: int, y: float) -> float:
    r = math.exp(-PI * y)
    a = r ** (2 * k - 1)
    m = 2 * k - 1
    return 4 * PI**2 * m**2 * a / (y**2 * (1 + a) ** 2) * (PI * m * (1 - a) / (1 + a) - 2 / y)


def _dkn(k: int, n: int, y: float) -> float:
    r = math.exp(-PI * y)
    a = r ** (2 * k - 1)
    b = r ** (2 * n)
    m = 2 * k - 1
    return (16 * PI**5 * m**2 * (2 * n) ** 2 * r ** (2 * n + 2 * k - 1) / ((1 + a) ** 2 * (1 - b) ** 2)
            * (m * (1 - a) / (1 + a) - 2 * n * (1 + b) / (1 - b)))


def wronskian_T_expansion(y: float, kmax: int = 40) -> float:
    """``T(y)`` as the single sum of ``c_k`` plus the double sum of ``d_kn``."""
    total = 0.0
    for k in range(1, kmax + 1):
        total += _ck(k, y)
        for n in range(1, kmax + 1):
            total += _dkn(k, n, y)
    return total


def _open_samples(lo, hi, n):
    return np.linspace(lo, hi, n + 2)[1:-1]


# --- suites --------------------------------------------------------------------

def _constant_values(budget: SeriesBudget) -> dict[str, float]:
    d = axis_derivative(ZERO, 1, 1.0, budget)
    e = axis_derivative(ONE, 1, 1.0, budget)
    return {"B": d / (d - e), "d": d, "e": e, "ratio_at_i": ratio_Y0_over_Y1(1.0, budget)}


def check_paper_constants(budget: SeriesBudget | None = None) -> list[CheckResult]:
    """Recompute the printed constants and compare with the printed values.

    Truncated decimals are compared with a tolerance of one unit in the last
    printed place.
    """
    budget = budget or default_budget()
    vals = _constant_values(budget)
    hi, lo = cubic_alternating_pair()
    out = [
        _eq("A1", a1_constant(), 109.24, 0.01),
        _eq("A2", a2_constant(), 1141.50, 0.01),
        _eq("A", a_constant(), -21077.61, 0.02),
        _eq("kappa(1)", kappa(1.0), -13.63, 0.01),
        _eq("kappa(sqrt3)", kappa(SQRT3), -15.47, 0.01),
        _eq("alt3", alternating_decrease_constant(), 56.68, 0.01),
        _eq("Y0'_bound", derivative_bound_as_printed(), -0.8388, 0.001),
        _lt("Y0'_bound_corrected", derivative_bound_corrected(), 0.0),
        _eq("alt2_lead", hi, 2.8925, 1e-4),
        _eq("alt2_ratio", lo, 1.1417, 1e-4),
        _gt("alt2_gap", hi - lo, 0.0),
        _eq("dkk", diagonal_constant(), 0.9549, 1e-4),
        _eq("B", vals["B"], 0.1867, 1e-4),
        _eq("d", vals["d"], 0.2982, 1e-4),
        _eq("e", vals["e"], -1.298, 1e-3),
        _eq("ratio_at_i", vals["ratio_at_i"], -0.2297, 1e-4),
    ]
    doubled = _constant_values(budget.doubled())
    drift = max(abs(vals[k] - doubled[k]) for k in vals)
    out.append(_eq("constants_stable_doubled_max_terms", drift, 0.0, 1e-10))
    return out


def check_beta_conditions(beta: float = BETA, budget: SeriesBudget | None = None) -> list[CheckResult]:
    """The four sufficient conditions on ``beta``, compared with their printed values at 1.08.

    Each value must match to relative 1e-3; the sign requirement is
    carried by the printed value.
    """
    if not 1.0 < beta < SQRT3:
        raise ValueError(f"beta must lie in (1, sqrt(3)), got {beta}")
    printed = (0.2058, 0.2608, -0.0007930, 35.20)
    funcs = (beta_condition_1, beta_condition_2, beta_condition_3, beta_condition_4)
    out = []
    for i, (fn, want) in enumerate(zip(funcs, printed), start=1):
        out.append(_eq(f"beta_condition_{i}", fn(beta), want, 1e-3 * abs(want)))
    return out


def check_T_positive(budget: SeriesBudget | None = None, n_samples: int = 500) -> list[CheckResult]:
    """Positivity of ``T`` on ``(1, sqrt(3))`` and the chain of facts that proves it."""
    if n_samples < 10:
        raise ValueError("n_samples must be at least 10")
    budget = budget or default_budget()
    ys = np.linspace(1.0 + 1e-6, SQRT3 - 1e-6, n_samples)
    T = np.array([wronskian_T(y, budget) for y in ys])
    out = [_gt(f"T>0_on_{n_samples}_samples", T.min(), 0.0)]

    recursive = max(
        abs(axis_derivative(j, 2, 1.0, budget) + 3 * axis_derivative(j, 1, 1.0, budget)) for j in (ONE, ZERO)
    )
    out.append(_eq("recursive_relation_at_i", recursive, 0.0, 1e-10))
    out.append(_eq("T(1)", wronskian_T(1.0, budget), 0.0, 1e-8))

    yo = _open_samples(1.0, SQRT3, n_samples)
    ratio = np.array([ratio_Y0_over_Y1(y, budget) for y in yo])
    out.append(_gt("Y0/Y1_increasing", np.diff(ratio).min(), 0.0))
    dratio = np.array([axis_derivative(ZERO, 1, y, budget) / axis_derivative(ONE, 1, y, budget) for y in yo])
    out.append(_gt("Y0'/Y1'_increasing", np.diff(dratio).min(), 0.0))

    ys_closed = np.linspace(1.0, SQRT3, 101)
    y0pp = np.array([axis_derivative(ZERO, 2, y, budget) for y in ys_closed])
    out.append(_lt("Y0''<0_on_[1,sqrt3]", y0pp.max(), 0.0))
    env = np.array([math.exp(-PI * y) * kappa(y) for y in ys_closed])
    out.append(_gt("Y0''_below_r*kappa", (env - y0pp).min(), 0.0))
    out.append(_lt("kappa<0_on_[1,sqrt3]", max(kappa(y) for y in ys_closed), 0.0))

    ys_big = np.linspace(SQRT3 + 1e-6, 6.0, 101)
    out.append(_lt("Y0'<0_beyond_sqrt3", max(axis_derivative(ZERO, 1, y, budget) for y in ys_big), 0.0))

    ys_low = _open_samples(1.0, BETA, 50)
    lower1 = min(axis_derivative(ZERO, 1, y, budget) - beta_condition_1(y) for y in ys_low)
    out.append(_gt("Y0'_above_condition_1_envelope", lower1, 0.0))
    out.append(_lt("Y0'''_below_4pi^4_sigma(beta)",
                   max(axis_derivative(ZERO, 3, y, budget) - 4 * PI**4 * sigma(BETA) for y in ys_low), 0.0))
    out.append(_gt("T'>0_on_(1,beta)", min(wronskian_T_prime(y, budget) for y in ys_low), 0.0))

    ys_high = np.linspace(BETA, SQRT3, 50)
    gap = min(wronskian_T(y, budget) - PI**2 * math.exp(-2 * PI * y) / (1 + math.exp(-PI * y)) ** 3 * nu(BETA)
              for y in ys_high)
    out.append(_gt("T_above_nu(beta)_minorant", gap, 0.0))

    ys_mid = np.linspace(1.05, SQRT3, 12)
    expansion = max(abs(wronskian_T_expansion(y) - wronskian_T(y, budget)) for y in ys_mid)
    out.append(_eq("T_equals_c_plus_d_expansion", expansion, 0.0, 1e-10))
    out.append(_gt("c_k>0", min(_ck(k, y) for y in ys_mid for k in range(1, 8)), 0.0))
    pos = min(_dkn(k, n, y) for y in ys_mid for k in range(2, 8) for n in range(1, k))
    neg = max(_dkn(k, n, y) for y in ys_mid for k in range(1, 8) for n in range(k, 8))
    out.append(_gt("d_kn>0_for_k>n", pos, 0.0))
    out.append(_lt("d_kn<0_for_k<=n", neg, 0.0))

    def alt_terms(power, y, nmax=12):
        r = math.exp(-PI * y)
        return np.array([n**power * r**n / (1 - (-r) ** n) ** power for n in range(1, nmax + 1)])

    dec3 = min(np.diff(-alt_terms(2, y)).min() for y in np.linspace(SQRT3, 4.0, 20))
    dec2 = min(np.diff(-alt_terms(3, y)).min() for y in np.linspace(1.0 + 1e-6, 4.0, 40))
    out.append(_gt("square_series_terms_decrease_y>=sqrt3", dec3, 0.0))
    out.append(_gt("cubic_series_terms_decrease_y>1", dec2, 0.0))
    return out


def _sum_checks() -> list[CheckResult]:
    t = 0.1
    n = np.arange(1, 401, dtype=float)
    k = n
    s1 = np.sum(n**3 * t**n)
    s2 = np.sum((2 * k) ** 2 * (2 * k - 1) ** 2 * t ** (4 * k - 1))
    n2 = np.arange(2, 401, dtype=float)
    s3 = np.sum(n2**3 * t ** (2 * n2 - 1))
    s4 = np.sum((2 * k - 1) ** 2 * t ** (2 * k + 3))
    return [
        _eq("sum1_t=0.1", t * (1 + 4 * t + t * t) / (1 - t) ** 4, s1, 1e-12),
        _eq("sum2_t=0.1", 4 * t**3 * (1 + 31 * t**4 + 55 * t**8 + 9 * t**12) / (1 - t**4) ** 5, s2, 1e-12),
        _eq("sum3_t=0.1", t**3 * (8 - 5 * t**2 + 4 * t**4 - t**6) / (1 - t**2) ** 4, s3, 1e-12),
        _eq("sum4_t=0.1", t**5 * (1 + 6 * t**2 + t**4) / (1 - t**2) ** 3, s4, 1e-12),
    ]


def _random_uhp(rng, n, xlo=-1.5, xhi=1.5, ylo=0.3, yhi=3.0):
    return rng.uniform(xlo, xhi, n) + 1j * rng.uniform(ylo, yhi, n)


def _fd_grad(b, z, budget, h=1e-5):
    fx = (f_b(b, z + h, budget) - f_b(b, z - h, budget)) / (2 * h)
    fy = (f_b(b, z + 1j * h, budget) - f_b(b, z - 1j * h, budget)) / (2 * h)
    return fx, fy


def _green_zero_mean(basis: LatticeBasis, budget, n=64, rho=0.05) -> float:
    g = (np.arange(n) + 0.5) / n - 0.5
    T1, T2 = np.meshgrid(g, g)
    Z = basis.point(T1, T2).ravel()
    area = basis.area
    Z = Z[np.abs(Z) > rho]
    outside = np.sum(green_array(basis, Z, budget)) * area / n**2
    # G = -(1/2pi) log(2 pi |z| / sqrt|L|) + |z|^2/(4|L|) + H(z), integrated over |z| < rho
    c = math.log(2 * PI / math.sqrt(area))
    disc = -(rho**2 / 2) * c - (rho**2 / 2 * math.log(rho) - rho**2 / 4)
    disc += PI * rho**4 / (8 * area) + PI * rho**2 * h_regular_at_zero(basis, budget)
    return outside + disc


def check_lemma_suite(budget: SeriesBudget | None = None, seed: int = SEED) -> list[CheckResult]:
    """Invariances, dualities, sign patterns, identities and summation formulas.

    Random points are drawn from ``numpy.random.default_rng(seed)``.
    """
    budget = budget or default_budget()
    rng = np.random.default_rng(seed)
    out: list[CheckResult] = []

    # eta functional equations
    zs = _random_uhp(rng, 100, -1.0, 1.0, 0.3, 3.0)
    shift = invert = refl = 0.0
    for z in zs:
        e = eta4(z, budget)
        shift = max(shift, abs(eta4(z + 1, budget) - np.exp(2j * PI / 6) * e) / abs(e))
        invert = max(invert, abs(eta4(-1 / z, budget) + z * z * e) / abs(z * z * e))
        refl = max(refl, _rel(abs(eta4(-z.conjugate(), budget)), abs(e)))
    out.append(_eq("eta_shift_by_1", shift, 0.0, 1e-11))
    out.append(_eq("eta_inversion", invert, 0.0, 1e-11))
    out.append(_eq("eta_reflection_modulus", refl, 0.0, 1e-12))
    ei = eta4(1j, budget)
    out.append(_gt("eta(i)_real_positive", ei.real - 1e6 * abs(ei.imag), 0.0))

    # canonicalization
    worst = 0.0
    inside = True
    for z in _random_uhp(rng, 200, -5.0, 5.0, 0.05, 5.0):
        w, word = canonicalize(z)
        inside &= in_w_bar(w, 1e-12)
        worst = max(worst, abs(apply_word(word, z).z - w.z))
        for g in Generator:
            back = apply_generator(apply_generator(z, g), Generator(g).inverse)
            worst = max(worst, abs(back.z - z) / max(1.0, abs(z)))
    out.append(_eq("canonical_word_replays", worst, 0.0, 1e-12))
    out.append(_gt("canonical_point_in_W_bar", float(inside), 0.5))

    # group invariance and duality of f_b
    bs = rng.uniform(0.0, 1.0, 100)
    zs = _random_uhp(rng, 100)
    inv = dual = 0.0
    for b, z in zip(bs, zs):
        f = f_b(b, z, budget)
        for gz in (z + 2, -1 / z, -z.conjugate()):
            inv = max(inv, abs(f_b(b, gz, budget) - f) / (1 + abs(f)))
        dual = max(dual, abs(f_b(b, dual_point(z), budget) - f_b(1 - b, z, budget)))
    out.append(_eq("group_invariance_f_b", inv, 0.0, 1e-10))
    out.append(_eq("duality_f_b", dual, 0.0, 1e-10))
    z0 = 0.37 + 1.21j
    out.append(_eq("dual_b=0.3", abs(f_b(0.3, dual_point(z0), budget) - f_b(0.7, z0, budget)), 0.0, 1e-10))
    f1_shift = max(abs(f_component(ONE, z + 1, budget) - f_component(ONE, z, budget)) for z in zs[:20])
    out.append(_eq("f1_shift_by_1", f1_shift, 0.0, 1e-10))
    zw = 0.2 + 1.2j
    out.append(_gt("f0_not_shift_invariant", abs(f_component(ZERO, zw + 1, budget) - f_component(ZERO, zw, budget)),
                   1e-3))

    # gradient series
    bs = rng.uniform(0.0, 1.0, 100)
    zs = _random_uhp(rng, 100, -1.0, 1.0, 0.4, 3.0)
    fd = rf = 0.0
    for b, z in zip(bs, zs):
        X, Y = grad_f_b(b, z, budget)
        fx, fy = _fd_grad(b, z, budget)
        fd = max(fd, abs(X - fx) / (1 + abs(X)), abs(Y - fy) / (1 + abs(Y)))
        Xr, Yr = grad_f_b(b, complex(-z.real, z.imag), budget)
        rf = max(rf, abs(Xr + X), abs(Yr - Y))
    out.append(_eq("gradient_vs_finite_difference", fd, 0.0, 1e-7))
    out.append(_eq("gradient_reflection", rf, 0.0, 1e-11))

    # imaginary axis
    scale = max(abs(axis_derivative(j, 0, y, budget) + axis_derivative(j, 0, 1 / y, budget) / y**2)
                for j in (ONE, ZERO) for y in np.linspace(1.01, 3.0, 25))
    out.append(_eq("imaginary_scaling_identity", scale, 0.0, 1e-10))
    y1 = [axis_derivative(ONE, 0, y, budget) for y in _open_samples(0.2, 1.0, 40)]
    y1b = [axis_derivative(ONE, 0, y, budget) for y in _open_samples(1.0, 5.0, 40)]
    out.append(_gt("Y1>0_on_(0.2,1)", min(y1), 0.0))
    out.append(_lt("Y1<0_on_(1,5)", max(y1b), 0.0))
    out.append(_eq("Y1(i)=0", axis_derivative(ONE, 0, 1.0, budget), 0.0, 1e-10))
    r3 = SQRT3 / 3
    intervals = ((0.2, r3, 1), (r3, 1.0, -1), (1.0, SQRT3, 1), (SQRT3, 5.0, -1))
    for lo, hi, sgn in intervals:
        vals = [sgn * axis_derivative(ZERO, 0, y, budget) for y in _open_samples(lo, hi, 40)]
        out.append(_gt(f"Y0_sign_{'+' if sgn > 0 else '-'}_on_({lo:.4g},{hi:.4g})", min(vals), 0.0))
    zeros = max(abs(axis_derivative(ZERO, 0, y, budget)) for y in (r3, 1.0, SQRT3))
    out.append(_eq("Y0_zeros_at_sqrt3/3_1_sqrt3", zeros, 0.0, 1e-9))

    B = threshold_B(budget)
    worst = -math.inf
    for b in np.arange(B, 1 - B + 1e-12, 0.02):
        for y in (1.05, 1.2, 1.5, 2.0):
            worst = max(worst, b * axis_derivative(ONE, 0, y, budget) + (1 - b) * axis_derivative(ZERO, 0, y, budget))
    out.append(_lt("Y_b<0_off_i_for_b_in_[B,1-B]", worst, 0.0))
    margin = math.inf
    for b in (0.02, 0.08, 0.15):
        q = q_of_b(b, budget)

        def Yb(y):
            return b * axis_derivative(ONE, 0, y, budget) + (1 - b) * axis_derivative(ZERO, 0, y, budget)
        margin = min(margin, min(Yb(y) for y in _open_samples(1.0, q - 1e-4, 10)),
                     min(-Yb(y) for y in _open_samples(q + 1e-4, 4.0, 10)))
    out.append(_gt("Y_b_sign_change_at_q_b_for_b<B", margin, 0.0))
    qs = [q_of_b(b, budget) for b in np.linspace(0.0, B - 1e-4, 50)]
    out.append(_lt("q_b_decreasing", np.diff(qs).max(), 0.0))
    dm = 0.0
    for b in (0.05, 0.1, 0.15):
        w, _ = canonicalize(dual_point(maximize_f_b(b, budget).z_star))
        dm = max(dm, abs(w.z - maximize_f_b(1 - b, budget).z_star.z))
    out.append(_eq("duality_of_maximizers", dm, 0.0, 1e-8))

    # harmonic conjugate and circle transfer
    h = 1e-6
    cr = max(abs((arg_z_eta(complex(h, y), budget) - arg_z_eta(complex(-h, y), budget)) / (2 * h)
                 + axis_derivative(ONE, 0, y, budget)) for y in _open_samples(1.0, 3.0, 20))
    out.append(_eq("cauchy_riemann_arg_z_eta", cr, 0.0, 1e-6))
    ct = 0.0
    for b in (0.0, 0.3, 0.8):
        for u in (-0.6, -0.2, 0.1, 0.45, 0.8):
            z = complex(u, math.sqrt(1 - u * u))
            pred = circle_transfer(b, u, budget)
            got = grad_f_b(b, z, budget)
            ct = max(ct, abs(pred[0] - got[0]), abs(pred[1] - got[1]))
    out.append(_eq("circle_transfer", ct, 0.0, 1e-10))

    # monotonicity in x over the interior of W
    zs = []
    while len(zs) < 100:
        z = complex(rng.uniform(1e-3, 1 - 1e-3), rng.uniform(0.15, 3.0))
        if abs(z) > 1 + 1e-3:
            zs.append(z)
    worst = max(grad_f_b(b, z, budget)[0] for b in (0.0, 0.3, 1 - B) for z in zs)
    out.append(_lt("X_b<0_in_W", worst, 0.0))

    # Green's function
    taus = [1j, 0.5 + 0.8660254037844386j, 0.3 + 1.7j, 0.1 + 0.4j, -0.45 + 0.9j,
            0.2 + 1.3j, 0.05 + 2.5j, 0.49 + 0.87j, -0.3 + 1.1j, 0.25 + 0.6j]
    ident = max(max(verify_product_identities(t, budget)) for t in taus)
    out.append(_eq("product_identities_10_tau", ident, 0.0, 1e-12))
    per = even = four = 0.0
    mean = 0.0
    for t in taus[:4]:
        basis = LatticeBasis.from_tau(t)
        pts = basis.point(rng.uniform(0.05, 0.95, 5), rng.uniform(0.05, 0.95, 5))
        g = green_array(basis, pts, budget)
        for lam in (basis.a1, basis.a2, basis.a1 + basis.a2):
            per = max(per, np.abs(green_array(basis, pts + lam, budget) - g).max())
        even = max(even, np.abs(green_array(basis, -pts, budget) - g).max())
        four = max(four, np.abs(fourier_green(basis, pts) - g).max())
        mean = max(mean, abs(_green_zero_mean(basis, budget)))
    out.append(_eq("green_periodicity", per, 0.0, 1e-11))
    out.append(_eq("green_evenness", even, 0.0, 1e-11))
    out.append(_eq("green_vs_fourier_oracle", four, 0.0, 1e-7))
    out.append(_eq("green_zero_mean", mean, 0.0, 1e-3))

    basis = LatticeBasis.from_tau(0.2 + 1.3j)
    b = 0.35
    rel = f_tilde(basis, b, budget) + f_b(b, 0.2 + 1.3j, budget) / (4 * PI) + (1 + b) / (4 * PI) * math.log(2)
    out.append(_eq("f_tilde_vs_f_b", rel, 0.0, 1e-9))
    p = SpeciesParams(0.01, 0.01, 1.0, 0.5, 1.0)
    sq = LatticeBasis.from_tau(1j)
    change = abs(interaction_F(sq, p, budget) - interaction_F(LatticeBasis(sq.a1, 2 * sq.a1 + sq.a2), p, budget))
    out.append(_eq("interaction_F_basis_change", change, 0.0, 1e-9))

    out.extend(_sum_checks())
    out.append(singular_trend(budget))
    return out


def singular_trend(budget: SeriesBudget | None = None, b: float = 0.5) -> CheckResult:
    """Largest ``X_b`` along ``1 - 1/k^2 + i/k``, ``k = 5..40``; informational.

    The underlying statement is a limsup, so no finite probe can confirm it.
    The probe points sit just inside the unit circle, where ``X_b`` is
    negative and grows in size as ``k`` increases.
    """
    xs = [grad_f_b(b, complex(1 - 1 / k**2, 1 / k), budget)[0] for k in range(5, 41)]
    return _info("singular_trend", max(xs), 0.0)


SUITES: dict[str, Callable[[SeriesBudget], list[CheckResult]]] = {
    "constants": check_paper_constants,
    "beta": lambda budget: check_beta_conditions(BETA, budget),
    "appendix": lambda budget: check_T_positive(budget, 500),
    "lemmas": check_lemma_suite,
}


def run_suite(name: str = "all", budget: SeriesBudget | None = None) -> list[CheckResult]:
    """Run one named suite, or all of them in declaration order."""
    budget = budget or default_budget()
    if name == "all":
        return [r for fn in SUITES.values() for r in fn(budget)]
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)} or all")
    return SUITES[name](budget)


def all_passed(results: list[CheckResult]) -> bool:
    return all(r.passed for r in results if not r.informational)
