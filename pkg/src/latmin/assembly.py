"""Two-species periodic disc assemblies and their interaction energy.

Each cell of the lattice spanned by ``(a1, a2)`` carries two discs of
species 1 centred at ``3/4 a1 + 1/4 a2`` and ``1/4 a1 + 3/4 a2`` and two of
species 2 at ``1/4 a1 + 1/4 a2`` and ``3/4 a1 + 3/4 a2``. Disc radii follow
from the volume fractions: ``2 pi r_j^2 = omega_j |cell|``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateInteraction, DomainError, InvalidParams, NotDisjoint
from .green import LatticeBasis, green_array, half_period_values
from .modular import SeriesBudget
from .objective import MixWeight

PI = math.pi
CENTER_COORDS = ((0.75, 0.25), (0.25, 0.75), (0.25, 0.25), (0.75, 0.75))
SPECIES = (0, 0, 1, 1)


@dataclass(frozen=True)
class SpeciesParams:
    """Volume fractions ``omega1, omega2`` and interaction matrix entries."""

    omega1: float
    omega2: float
    g11: float
    g12: float
    g22: float

    def __post_init__(self):
        vals = (self.omega1, self.omega2, self.g11, self.g12, self.g22)
        if not all(math.isfinite(v) for v in vals):
            raise InvalidParams("species parameters must be finite")
        if not (self.omega1 > 0 and self.omega2 > 0 and self.omega1 + self.omega2 < 1):
            raise InvalidParams(f"need 0 < omega_j and omega1 + omega2 < 1, got {self.omega1}, {self.omega2}")
        if not (self.g11 > 0 and self.g22 > 0 and self.g12 >= 0):
            raise InvalidParams("need g11 > 0, g22 > 0, g12 >= 0")
        if self.g11 * self.g22 - self.g12**2 < 0:
            raise InvalidParams("interaction matrix must be positive semidefinite")

    @property
    def gamma(self) -> np.ndarray:
        return np.array([[self.g11, self.g12], [self.g12, self.g22]])

    def swapped(self) -> "SpeciesParams":
        return SpeciesParams(self.omega2, self.omega1, self.g22, self.g12, self.g11)

    def scaled_gamma(self, c: float) -> "SpeciesParams":
        return SpeciesParams(self.omega1, self.omega2, c * self.g11, c * self.g12, c * self.g22)


def mix_weight(p: SpeciesParams) -> MixWeight:
    """``b = 2 g12 w1 w2 / (g11 w1^2 + g22 w2^2)``, which lies in [0, 1]."""
    if not isinstance(p, SpeciesParams):
        raise InvalidParams("expected SpeciesParams")
    num = 2.0 * p.g12 * p.omega1 * p.omega2
    den = p.g11 * p.omega1**2 + p.g22 * p.omega2**2
    # Cauchy-Schwarz bounds num by den; clip rounding at the equality case
    return MixWeight(min(num / den, 1.0))


@dataclass(frozen=True)
class DiscAssembly:
    """Disc radii and centres on a lattice basis."""

    basis: LatticeBasis
    r1: float
    r2: float

    @classmethod
    def from_omegas(cls, basis: LatticeBasis, omega1: float, omega2: float) -> "DiscAssembly":
        area = basis.area
        return cls(basis, math.sqrt(omega1 * area / (2 * PI)), math.sqrt(omega2 * area / (2 * PI)))

    @classmethod
    def from_params(cls, basis: LatticeBasis, p: SpeciesParams) -> "DiscAssembly":
        return cls.from_omegas(basis, p.omega1, p.omega2)

    @property
    def centers(self) -> tuple[complex, complex, complex, complex]:
        """``(xi1, xi1', xi2, xi2')``."""
        return tuple(self.basis.point(t1, t2) for t1, t2 in CENTER_COORDS)

    @property
    def radii(self) -> tuple[float, float, float, float]:
        return (self.r1, self.r1, self.r2, self.r2)

    def scaled(self, t: float) -> "DiscAssembly":
        return DiscAssembly(self.basis.scaled(t), t * self.r1, t * self.r2)

    def separation_ratio(self) -> float:
        """Smallest centre distance over radius sum, across all lattice translates."""
        red = self.basis.reduced()
        tau = red.tau
        c = self.centers
        rad = self.radii
        js = np.arange(-2, 3)
        lam = (js[:, None] * red.a1 + js[None, :] * red.a2).ravel()
        worst = math.inf
        for i in range(4):
            for j in range(i, 4):
                # fold the offset into the central cell of the reduced basis
                u = (c[i] - c[j]) / red.a1
                u = u - round(u.imag / tau.imag) * tau
                u = u - round(u.real)
                d = np.abs(u * red.a1 + lam)
                if i == j:
                    d = d[d > 0.5 * abs(red.a1)]
                worst = min(worst, float(d.min()) / (rad[i] + rad[j]))
        return worst


def check_disjoint(a: DiscAssembly) -> bool:
    """True iff every pair of discs, over all lattice translates, is strictly separated.

    Tangent discs count as overlapping.
    """
    return a.separation_ratio() > 1.0


def require_disjoint(a: DiscAssembly) -> None:
    if not check_disjoint(a):
        scale = a.separation_ratio() ** 2
        raise NotDisjoint(
            f"discs overlap; volume fractions must shrink by a factor {scale:.6g} to separate them",
            max_omega_scale=scale,
        )


def f_tilde(basis: LatticeBasis, b, budget: SeriesBudget | None = None) -> float:
    """``H(0) + G((a1+a2)/2) + b (G(a1/2) + G(a2/2))``."""
    bv = float(b)
    g_mid, g1, g2, h0 = half_period_values(basis, budget)
    return h0 + g_mid + bv * (g1 + g2)


def _pair_constants(basis: LatticeBasis, r1: float, r2: float):
    area = basis.area

    def c_self(r):
        return PI * r**4 / 8 - PI * r**4 / 2 * math.log(2 * PI * r / math.sqrt(area)) + PI**2 * r**6 / (4 * area)

    def c_cross(rj, rk):
        return PI**2 * (rj**2 * rk**4 + rj**4 * rk**2) / (8 * area)

    return {
        "c11": c_self(r1),
        "c22": c_self(r2),
        "c11p": c_cross(r1, r1),
        "c22p": c_cross(r2, r2),
        "c12": c_cross(r1, r2),
        "c12p": c_cross(r1, r2),
    }


def interaction_F(basis: LatticeBasis, p: SpeciesParams, budget: SeriesBudget | None = None,
                  check: bool = True) -> float:
    """Interaction energy per cell from the closed-form disc integrals.

    Parameters
    ----------
    basis : LatticeBasis
        Lattice basis; the cell area enters through the disc radii.
    p : SpeciesParams
        Volume fractions and interaction coefficients.
    check : bool
        Raise ``NotDisjoint`` if the discs overlap.
    """
    a = DiscAssembly.from_params(basis, p)
    if check:
        require_disjoint(a)
    r1, r2 = a.r1, a.r2
    g_mid, g1, g2, h0 = half_period_values(basis, budget)
    c = _pair_constants(basis, r1, r2)
    w11 = p.g11 * PI**2 * r1**4
    w22 = p.g22 * PI**2 * r2**4
    return (
        (w11 + w22) * (h0 + g_mid)
        + 2 * p.g12 * PI**2 * r1**2 * r2**2 * (g1 + g2)
        + p.g11 * (c["c11"] + c["c11p"])
        + p.g22 * (c["c22"] + c["c22p"])
        + 2 * p.g12 * (c["c12"] + c["c12p"])
    )


def _disc_rule(n: int):
    # polar Gauss-Legendre in r (weight r dr) times the trapezoid rule in angle
    x, w = np.polynomial.legendre.leggauss(n)
    rho = 0.5 * (x + 1.0)
    wr = 0.5 * w * rho
    th = 2 * PI * np.arange(2 * n) / (2 * n)
    wt = np.full(2 * n, 2 * PI / (2 * n))
    pts = (rho[:, None] * np.exp(1j * th[None, :])).ravel()
    wts = (wr[:, None] * wt[None, :]).ravel()
    return pts, wts


def _self_pair(basis, r, n, budget):
    # inner integral in polar coordinates about the outer point; rho = R s^2 tames the log
    outer, wo = _disc_rule(n)
    outer = outer * r
    wo = wo * r * r
    x, w = np.polynomial.legendre.leggauss(n)
    s = 0.5 * (x + 1.0)
    ws = 0.5 * w
    phi = 2 * PI * np.arange(2 * n) / (2 * n)
    wphi = 2 * PI / (2 * n)
    d = np.abs(outer)[:, None]
    psi = phi[None, :] - np.angle(outer)[:, None]
    R = -d * np.cos(psi) + np.sqrt(r * r - (d * np.sin(psi)) ** 2)
    rho = R[:, :, None] * s[None, None, :] ** 2
    jac = 2.0 * R[:, :, None] ** 2 * s[None, None, :] ** 3
    vals = green_array(basis, rho * np.exp(1j * phi)[None, :, None], budget, guard=False)
    inner = wphi * np.sum(vals * jac * ws[None, None, :], axis=(1, 2))
    return float(wo @ inner)


def _cross_pair(basis, ci, ri, cj, rj, n, budget):
    pts, wts = _disc_rule(n)
    zi, wi = ci + ri * pts, wts * ri * ri
    zj, wj = cj + rj * pts, wts * rj * rj
    diff = zi[:, None] - zj[None, :]
    return float(wi @ green_array(basis, diff, budget) @ wj)


def interaction_F_quadrature(basis: LatticeBasis, p: SpeciesParams, n: int = 24,
                             budget: SeriesBudget | None = None) -> float:
    """Interaction energy by direct quadrature of G over all 16 ordered disc pairs.

    ``F = 1/2 sum_{j,k} g_jk sum_{discs D of j, D' of k} int_D int_D' G(zeta - chi)``.
    Uses an ``n``-point Gauss rule per radial direction. Independent of the
    closed form used by ``interaction_F``.
    """
    a = DiscAssembly.from_params(basis, p)
    c, rad = a.centers, a.radii
    g = p.gamma
    self_vals = {r: _self_pair(basis, r, n, budget) for r in {a.r1, a.r2}}
    total = 0.0
    for i in range(4):
        for j in range(4):
            gij = g[SPECIES[i], SPECIES[j]]
            if gij == 0.0:
                continue
            if i == j:
                v = self_vals[rad[i]]
            elif j < i:
                continue
            else:
                v = 2.0 * _cross_pair(basis, c[i], rad[i], c[j], rad[j], n, budget)
            total += 0.5 * gij * v
    return total


def optimal_scale(basis: LatticeBasis, p: SpeciesParams, budget: SeriesBudget | None = None,
                  check: bool = True) -> tuple[float, float]:
    """Optimal size ``t_alpha`` and the resulting energy per cell area.

    Minimizes ``P/t + t^2 F`` over ``t > 0`` with perimeter coefficient
    ``P = 2 sqrt(2 pi w1) + 2 sqrt(2 pi w2)``.

    Raises
    ------
    DegenerateInteraction
        If the interaction energy is not positive.
    """
    if abs(basis.area - 1.0) > 1e-9:
        raise DomainError(f"optimal_scale needs a unit-area basis, got area {basis.area}")
    F = interaction_F(basis, p, budget, check=check)
    if not F > 0.0:
        raise DegenerateInteraction(f"interaction energy {F} is not positive")
    P = perimeter_coefficient(p)
    t = (P / (2.0 * F)) ** (1.0 / 3.0)
    energy = 3.0 * (P / 2.0) ** (2.0 / 3.0) * F ** (1.0 / 3.0)
    return t, energy


def perimeter_coefficient(p: SpeciesParams) -> float:
    return 2.0 * math.sqrt(2 * PI * p.omega1) + 2.0 * math.sqrt(2 * PI * p.omega2)


def energy_at_scale(t: float, basis: LatticeBasis, p: SpeciesParams, budget: SeriesBudget | None = None) -> float:
    """Energy per cell area ``P/t + t^2 F`` of the assembly on ``t * basis``."""
    return perimeter_coefficient(p) / t + t * t * interaction_F(basis, p, budget, check=False)
