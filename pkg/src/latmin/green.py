"""Periodic Green's function of -Laplace on a planar lattice.

``G`` solves ``-Lap G = sum_lambda delta_lambda - 1/|Lambda|`` with zero cell
mean. With ``u = zeta/a1`` and ``tau = a2/a1`` it reads

    G = (Im u)^2 / (2 Im tau) - Im u / 2 + Im tau / 12
        - (1/2pi) [log|1 - e(u)| + sum_n log|1 - e(n tau + u)| + log|1 - e(n tau - u)|]

which depends only on the shape of the lattice, not on its scale.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import exp1

from . import kernels
from .errors import DomainError, OnLattice
from .modular import PointLike, SeriesBudget, as_complex, default_budget

TWO_PI = 2.0 * math.pi
LATTICE_GUARD = 1e-9


@dataclass(frozen=True)
class LatticeBasis:
    """Ordered basis ``(a1, a2)`` with ``Im(conj(a1) a2) > 0``."""

    a1: complex
    a2: complex

    def __post_init__(self):
        object.__setattr__(self, "a1", complex(self.a1))
        object.__setattr__(self, "a2", complex(self.a2))
        if not all(map(math.isfinite, (self.a1.real, self.a1.imag, self.a2.real, self.a2.imag))):
            raise DomainError("basis vectors must be finite")
        if not self.area > 0.0:
            raise DomainError(f"basis must be positively oriented, got area {self.area}")

    @classmethod
    def from_tau(cls, tau: PointLike) -> "LatticeBasis":
        """Unit-area basis ``a1 = 1/sqrt(Im tau)``, ``a2 = tau a1``."""
        tau = as_complex(tau)
        a1 = 1.0 / math.sqrt(tau.imag)
        return cls(a1, tau * a1)

    @property
    def area(self) -> float:
        return (self.a1.conjugate() * self.a2).imag

    @property
    def tau(self) -> complex:
        return self.a2 / self.a1

    def scaled(self, t: float) -> "LatticeBasis":
        return LatticeBasis(t * self.a1, t * self.a2)

    def unit_area(self) -> "LatticeBasis":
        return self.scaled(1.0 / math.sqrt(self.area))

    def point(self, t1: float, t2: float) -> complex:
        """Cell coordinates to a point of the plane."""
        return t1 * self.a1 + t2 * self.a2

    def reduced(self) -> "LatticeBasis":
        """Lagrange-reduced positively oriented basis of the same lattice."""
        a1, a2 = self.a1, self.a2
        for _ in range(10_000):
            if abs(a2) < abs(a1):
                a1, a2 = a2, a1
            m = round((a2 * a1.conjugate()).real / abs(a1) ** 2)
            if m == 0:
                break
            a2 = a2 - m * a1
        if (a1.conjugate() * a2).imag < 0:
            a2 = -a2
        return LatticeBasis(a1, a2)


def _reduced_coords(basis: LatticeBasis, zeta):
    # zeta / a1' in the cell of the reduced basis centred at 0
    red = basis.reduced()
    tau = red.tau
    u = np.asarray(zeta, dtype=np.complex128) / red.a1
    u = u - np.round(u.imag / tau.imag) * tau
    u = u - np.round(u.real)
    return red, tau, u


def green_array(basis: LatticeBasis, zeta, budget: SeriesBudget | None = None, guard: bool = True):
    """Vectorized ``G_Lambda`` at an array of points.

    ``guard=False`` skips the near-lattice check; quadrature rules that
    integrate the log singularity use it.
    """
    budget = budget or default_budget()
    red, tau, u = _reduced_coords(basis, zeta)
    dist = np.abs(u) * abs(red.a1)
    if guard and np.any(dist < LATTICE_GUARD * abs(basis.a1)):
        raise OnLattice(f"point within {LATTICE_GUARD:g}|a1| of a lattice point")
    # |e(n tau +- u)| <= exp(-2 pi (n - 1/2) Im tau)
    nterms = budget.terms_for(math.exp(-TWO_PI * tau.imag), "Green product") + 1
    s, t = u.real, u.imag
    # |1 - e(u)| = 2 |sin(pi u)| exp(pi Im u), accurate near u = 0
    head = np.log(2.0 * np.abs(np.sin(math.pi * u))) - math.pi * t
    tail = kernels.green_logsum(s, t, tau.real, tau.imag, nterms)
    return t * t / (2.0 * tau.imag) - t / 2.0 + tau.imag / 12.0 - (head + tail) / TWO_PI


def green_value(basis: LatticeBasis, zeta: complex, budget: SeriesBudget | None = None) -> float:
    """Periodic Green's function ``G_Lambda(zeta)`` from its product formula.

    The point is first moved into the central cell of a reduced basis, where
    every factor of the product converges geometrically.

    Raises
    ------
    OnLattice
        If ``zeta`` lies within ``1e-9 |a1|`` of a lattice point.
    """
    return float(green_array(basis, np.array([complex(zeta)]), budget)[0])


def _log_prod(w: np.ndarray, sign: float) -> float:
    return float(np.sum(np.log1p(sign * w)).real)


def _terms(budget: SeriesBudget, im: float) -> int:
    return budget.terms_for(math.exp(-math.pi * im), "half-period product") + 1


def h_regular_at_zero(basis: LatticeBasis, budget: SeriesBudget | None = None) -> float:
    """``H_Lambda(0) = -(1/2pi) log|sqrt(Im tau) e(tau/12) prod (1 - e(n tau))^2|``.

    Evaluated at the basis' own ``tau`` with no reduction.
    """
    budget = budget or default_budget()
    tau = basis.tau
    n = np.arange(1, _terms(budget, tau.imag) + 1)
    q = np.exp(1j * TWO_PI * n * tau)
    val = 0.5 * math.log(tau.imag) - TWO_PI * tau.imag / 12.0 + 2.0 * _log_prod(q, -1.0)
    return -val / TWO_PI


def half_period_values(basis: LatticeBasis, budget: SeriesBudget | None = None):
    """Closed forms for ``G((a1+a2)/2)``, ``G(a1/2)``, ``G(a2/2)`` and ``H(0)``.

    Returns
    -------
    tuple of float
        ``(G_mid, G_half1, G_half2, H0)``.
    """
    budget = budget or default_budget()
    tau = basis.tau
    n = np.arange(1, _terms(budget, tau.imag) + 1)
    q = np.exp(1j * TWO_PI * n * tau)
    qh = np.exp(1j * TWO_PI * (n - 0.5) * tau)
    y = tau.imag
    g_mid = -(TWO_PI * y / 24.0 + 2.0 * _log_prod(qh, 1.0)) / TWO_PI
    g_half1 = -(math.log(2.0) - TWO_PI * y / 12.0 + 2.0 * _log_prod(q, 1.0)) / TWO_PI
    g_half2 = -(TWO_PI * y / 24.0 + 2.0 * _log_prod(qh, -1.0)) / TWO_PI
    return g_mid, g_half1, g_half2, h_regular_at_zero(basis, budget)


def h_regular(basis: LatticeBasis, zeta, budget: SeriesBudget | None = None):
    """``H_Lambda(zeta)``: G minus its log singularity and quadratic part."""
    zeta = np.asarray(zeta, dtype=np.complex128)
    area = basis.area
    g = green_array(basis, zeta, budget)
    return g + np.log(TWO_PI * np.abs(zeta) / math.sqrt(area)) / TWO_PI - np.abs(zeta) ** 2 / (4.0 * area)


def verify_product_identities(tau: PointLike, budget: SeriesBudget | None = None) -> tuple[float, float]:
    """Residuals of the two theta-product identities at ``tau``.

    ``prod(1 - q^n) prod(1 + q^(n-1/2)) = prod(1 - e(n (tau+1)/2))`` and
    ``prod(1 + q^(n-1/2)) prod(1 + q^n) prod(1 - q^(n-1/2)) = 1`` with ``q = e(tau)``.
    """
    budget = budget or default_budget()
    tau = as_complex(tau)
    n = np.arange(1, budget.terms_for(math.exp(-math.pi * tau.imag), "identity product") + 2)
    q = np.exp(1j * TWO_PI * n * tau)
    qh = np.exp(1j * TWO_PI * (n - 0.5) * tau)
    qt = np.exp(1j * TWO_PI * n * (tau + 1.0) / 2.0)

    def prod(w, sign):
        return complex(np.exp(np.sum(np.log1p(sign * w))))

    r1 = abs(prod(q, -1.0) * prod(qh, 1.0) - prod(qt, -1.0))
    r2 = abs(prod(qh, 1.0) * prod(q, 1.0) * prod(qh, -1.0) - 1.0)
    return r1, r2


def fourier_green(basis: LatticeBasis, zeta, k_radius: float = 400.0):
    """Independent evaluation of G from the dual-lattice sum.

    Uses ``G = (1/|L|) sum_{k != 0} exp(i k.zeta - s|k|^2) / |k|^2
    + (1/4pi) sum_lambda E1(|zeta - lambda|^2 / 4s) - s/|L|``, which is exact
    for every ``s > 0``. ``s`` is set so the Gaussian factor is ``e^-37`` at
    the cutoff ``|k| = k_radius`` of the unit-area lattice; the real-space
    part then only needs the nearest few lattice points.
    """
    scalar = np.ndim(zeta) == 0
    scale = 1.0 / math.sqrt(basis.area)
    red = basis.reduced().scaled(scale)
    zeta = np.atleast_1d(np.asarray(zeta, dtype=np.complex128)) * scale
    A = np.array([[red.a1.real, red.a2.real], [red.a1.imag, red.a2.imag]])
    K = TWO_PI * np.linalg.inv(A).T
    s = 37.0 / k_radius**2
    mmax = int(math.ceil(k_radius * max(abs(red.a1), abs(red.a2)) / TWO_PI)) + 1
    m, n = np.meshgrid(np.arange(-mmax, mmax + 1), np.arange(-mmax, mmax + 1), indexing="ij")
    kx = K[0, 0] * m + K[0, 1] * n
    ky = K[1, 0] * m + K[1, 1] * n
    k2 = kx * kx + ky * ky
    keep = (k2 > 0) & (k2 <= k_radius**2)
    kx, ky, k2 = kx[keep], ky[keep], k2[keep]
    weight = np.exp(-s * k2) / k2
    out = np.empty(zeta.shape)
    _, _, u = _reduced_coords(red, zeta)
    zc = u * red.a1
    js = np.arange(-3, 4)
    lam = (js[:, None] * red.a1 + js[None, :] * red.a2).ravel()
    for i, z in enumerate(zc):
        dual = np.sum(weight * np.cos(kx * z.real + ky * z.imag))
        real = np.sum(exp1(np.abs(z - lam) ** 2 / (4.0 * s))) / (4.0 * math.pi)
        out[i] = dual + real - s
    return float(out[0]) if scalar else out
