import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from latmin import (DiscAssembly, DomainError, InvalidParams, LatticeBasis, NotDisjoint, SpeciesParams,
                    check_disjoint, f_b, f_tilde, half_period_values, interaction_F, interaction_F_quadrature,
                    mix_weight, optimal_scale, require_disjoint)
from latmin.assembly import energy_at_scale, perimeter_coefficient

PI = math.pi
SQRT3 = math.sqrt(3.0)
HEX = complex(0.5, SQRT3 / 2)
SQUARE = LatticeBasis.from_tau(1j)
P_REF = SpeciesParams(0.01, 0.01, 1.0, 0.5, 1.0)

positive = st.floats(0.1, 5.0)


@pytest.mark.parametrize("p, b", [
    (SpeciesParams(0.1, 0.2, 1.0, 0.0, 2.0), 0.0),
    (SpeciesParams(0.2, 0.2, 1.0, 1.0, 1.0), 1.0),
    (SpeciesParams(0.04, 0.02, 2.0, 1.0, 1.0), 2 * 0.0008 / (2 * 0.0016 + 0.0004)),
])
def test_mix_weight_examples(p, b):
    assert abs(mix_weight(p).b - b) < 1e-15


def test_mix_weight_four_ninths():
    assert abs(mix_weight(SpeciesParams(0.04, 0.02, 2.0, 1.0, 1.0)).b - 4 / 9) < 1e-15


@given(w1=st.floats(0.001, 0.49), w2=st.floats(0.001, 0.49), g11=positive, g22=positive, s=st.floats(0.0, 1.0))
def test_mix_weight_in_unit_interval(w1, w2, g11, g22, s):
    p = SpeciesParams(w1, w2, g11, s * math.sqrt(g11 * g22), g22)
    assert 0.0 <= mix_weight(p).b <= 1.0


@pytest.mark.parametrize("args", [
    (0.7, 0.7, 1, 1, 1), (0.0, 0.1, 1, 1, 1), (0.1, 0.1, 0, 1, 1), (0.1, 0.1, 1, -1, 1),
    (0.1, 0.1, 1, 2, 1), (math.nan, 0.1, 1, 1, 1),
])
def test_species_params_validation(args):
    with pytest.raises(InvalidParams):
        SpeciesParams(*args)


def test_disjoint_tiny_discs():
    assert check_disjoint(DiscAssembly.from_omegas(SQUARE, 0.01, 0.01))


def test_disjoint_impossible_volume():
    assert not check_disjoint(DiscAssembly.from_omegas(SQUARE, 0.7, 0.7))


@pytest.mark.parametrize("r, want", [(0.25, False), (0.2499, True), (1 / (2 * math.sqrt(2)), False)])
def test_disjoint_tangency_boundary(r, want):
    # on the square lattice, neighbouring centres of different species are |a1|/2 apart
    assert check_disjoint(DiscAssembly(SQUARE, r, r)) is want


def test_require_disjoint_reports_scale():
    a = DiscAssembly.from_omegas(SQUARE, 0.45, 0.45)
    with pytest.raises(NotDisjoint) as exc:
        require_disjoint(a)
    s = exc.value.max_omega_scale
    assert 0 < s < 1
    assert not check_disjoint(DiscAssembly.from_omegas(SQUARE, 0.45 * s, 0.45 * s))
    assert check_disjoint(DiscAssembly.from_omegas(SQUARE, 0.45 * s * 0.999, 0.45 * s * 0.999))


def test_f_tilde_relation_to_f_b():
    tau, b = 0.2 + 1.3j, 0.35
    want = -f_b(b, tau) / (4 * PI) - (1 + b) / (4 * PI) * math.log(2)
    assert abs(f_tilde(LatticeBasis.from_tau(tau), b) - want) < 1e-9


@given(x=st.floats(-1.0, 1.0), y=st.floats(0.5, 3.0), b=st.floats(0.0, 1.0))
def test_f_tilde_relation_everywhere(x, y, b):
    tau = complex(x, y)
    want = -f_b(b, tau) / (4 * PI) - (1 + b) / (4 * PI) * math.log(2)
    assert abs(f_tilde(LatticeBasis.from_tau(tau), b) - want) < 1e-9


def test_f_tilde_b0_ignores_half_periods(monkeypatch):
    import latmin.assembly as asm
    real = asm.half_period_values

    def perturbed(basis, budget=None):
        g_mid, g1, g2, h0 = real(basis, budget)
        return g_mid, g1 + 5.0, g2 - 7.0, h0

    base = f_tilde(SQUARE, 0.0)
    monkeypatch.setattr(asm, "half_period_values", perturbed)
    assert f_tilde(SQUARE, 0.0) == base


def test_f_tilde_argmin_hexagonal():
    vals = {tau: f_tilde(LatticeBasis.from_tau(tau), 1.0) for tau in (1j, SQRT3 * 1j, HEX)}
    assert min(vals, key=vals.get) == HEX


def reassembled_F(basis, p):
    # written out from the disc-integral formulas, independent of the module helpers
    A = basis.area
    r1 = math.sqrt(p.omega1 * A / (2 * PI))
    r2 = math.sqrt(p.omega2 * A / (2 * PI))
    g_mid, g1, g2, h0 = half_period_values(basis)
    c11 = PI * r1**4 / 8 - PI * r1**4 / 2 * math.log(2 * PI * r1 / math.sqrt(A)) + PI**2 * r1**6 / (4 * A)
    c22 = PI * r2**4 / 8 - PI * r2**4 / 2 * math.log(2 * PI * r2 / math.sqrt(A)) + PI**2 * r2**6 / (4 * A)
    c11p = PI**2 * 2 * r1**6 / (8 * A)
    c22p = PI**2 * 2 * r2**6 / (8 * A)
    c12 = PI**2 * (r1**2 * r2**4 + r1**4 * r2**2) / (8 * A)
    return (p.g11 * (PI**2 * r1**4 * (h0 + g_mid) + c11 + c11p)
            + p.g22 * (PI**2 * r2**4 * (h0 + g_mid) + c22 + c22p)
            + 2 * p.g12 * (PI**2 * r1**2 * r2**2 * (g1 + g2) + 2 * c12))


@pytest.mark.parametrize("tau, p", [
    (1j, P_REF),
    (HEX, SpeciesParams(0.03, 0.01, 2.0, 1.0, 1.0)),
    (0.2 + 1.3j, SpeciesParams(0.05, 0.02, 1.0, 0.3, 0.5)),
])
def test_interaction_F_term_by_term(tau, p):
    b = LatticeBasis.from_tau(tau)
    assert abs(interaction_F(b, p) - reassembled_F(b, p)) < 1e-10


def test_interaction_F_quadrature():
    assert abs(interaction_F(SQUARE, P_REF) - interaction_F_quadrature(SQUARE, P_REF)) < 1e-6


def test_interaction_F_species_swap():
    p = SpeciesParams(0.03, 0.01, 2.0, 0.7, 1.0)
    assert abs(interaction_F(SQUARE, p) - interaction_F(SQUARE, p.swapped())) < 1e-14


def test_interaction_F_overlap():
    with pytest.raises(NotDisjoint):
        interaction_F(SQUARE, SpeciesParams(0.45, 0.45, 1.0, 0.0, 1.0))


@pytest.mark.parametrize("c", [0.5, 2.0, 10.0])
def test_optimal_scale_homogeneity(c):
    t, e = optimal_scale(SQUARE, P_REF)
    tc, ec = optimal_scale(SQUARE, P_REF.scaled_gamma(c))
    assert abs(tc / t - c ** (-1 / 3)) < 1e-12
    assert abs(ec / e - c ** (1 / 3)) < 1e-12


@pytest.mark.parametrize("tau", [1j, HEX, 0.2 + 1.3j])
def test_optimal_scale_grid_minimum(tau):
    b = LatticeBasis.from_tau(tau)
    t, e = optimal_scale(b, P_REF)
    vals = [energy_at_scale(t * (1 + k / 100), b, P_REF) for k in range(-5, 6)]
    assert int(np.argmin(vals)) == 5
    assert abs(vals[5] - e) < 1e-9


def test_optimal_scale_first_order_condition():
    t, _ = optimal_scale(SQUARE, P_REF)
    perim = perimeter_coefficient(P_REF) / t
    inter = t * t * interaction_F(SQUARE, P_REF)
    assert abs(perim - 2 * inter) < 1e-12 * perim


def test_energy_monotone_in_F():
    rng = np.random.default_rng(5)
    taus = rng.uniform(-0.5, 0.5, 30) + 1j * rng.uniform(0.9, 2.5, 30)
    rows = sorted((interaction_F(LatticeBasis.from_tau(t), P_REF), optimal_scale(LatticeBasis.from_tau(t), P_REF)[1])
                  for t in taus)
    assert all(b[1] > a[1] for a, b in zip(rows, rows[1:]) if b[0] > a[0])


@pytest.mark.parametrize("tau", [0.2 + 1.3j, HEX])
@pytest.mark.parametrize("move", ["shift", "turn"])
def test_energy_basis_change_invariant(tau, move):
    # a2 -> a2 + 2 a1 and (a1, a2) -> (-a2, a1) keep the disc arrangement
    b = LatticeBasis.from_tau(tau)
    other = LatticeBasis(b.a1, b.a2 + 2 * b.a1) if move == "shift" else LatticeBasis(-b.a2, b.a1)
    assert abs(optimal_scale(b, P_REF)[1] - optimal_scale(other, P_REF)[1]) < 1e-11


def test_optimal_scale_needs_unit_area():
    with pytest.raises(DomainError):
        optimal_scale(SQUARE.scaled(2.0), P_REF)


def test_scaled_assembly_radii():
    a = DiscAssembly.from_params(SQUARE, P_REF)
    s = a.scaled(3.0)
    assert abs(s.r1 - 3 * a.r1) < 1e-15 and abs(s.basis.area - 9.0) < 1e-12
    assert abs(2 * PI * a.r1**2 - 0.01) < 1e-15
