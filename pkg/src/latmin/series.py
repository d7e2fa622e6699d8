"""Closed-form series for the partial derivatives of f_1 and f_0.

``X_j = d f_j / dx`` and ``Y_j = d f_j / dy`` anywhere in the upper
half-plane, plus ``Y_j(yi)`` and its first three y-derivatives on the
imaginary axis written in ``r = exp(-pi*y)``.
"""

from __future__ import annotations

import math
from enum import Enum

import numpy as np

from . import kernels
from .errors import BudgetExceeded, DomainError
from .modular import PointLike, SeriesBudget, as_complex, default_budget

PI = math.pi
SQRT3 = math.sqrt(3.0)


class SpeciesTag(str, Enum):
    """Selects the f_1 (``ONE``) or f_0 (``ZERO``) side."""

    ONE = "one"
    ZERO = "zero"

    @classmethod
    def coerce(cls, j) -> "SpeciesTag":
        if isinstance(j, cls):
            return j
        if j in (1, "1"):
            return cls.ONE
        if j in (0, "0"):
            return cls.ZERO
        return cls(j)


def _gradient_terms(j: SpeciesTag, ymin: float, budget: SeriesBudget) -> int:
    # |term_n| <= 8 k n q^n / (1-q)^2 with q = exp(-k y); sum the tail bound
    k = 2 * PI if j is SpeciesTag.ONE else PI
    q = math.exp(-k * ymin)
    if q >= 1.0:
        raise BudgetExceeded(math.inf, budget.max_terms, "gradient series")
    pref = 8.0 * k / (1.0 - q) ** 4
    qm = q
    for m in range(1, budget.max_terms + 2):
        if pref * m * qm < budget.rel_tol:
            return max(m - 1, 1)
        qm *= q
    needed = math.ceil(math.log(budget.rel_tol / pref) / math.log(q))
    raise BudgetExceeded(needed, budget.max_terms, "gradient series")


def gradient_array(j, x, y, budget: SeriesBudget | None = None):
    """Vectorized (X_j, Y_j) at arrays of coordinates."""
    j = SpeciesTag.coerce(j)
    budget = budget or default_budget()
    x = np.asarray(x, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    if np.any(y <= 0):
        raise DomainError("gradient series needs y > 0")
    n = _gradient_terms(j, float(np.min(y)), budget)
    shifted = j is SpeciesTag.ZERO
    if shifted:
        # X_0, Y_0 are 2-periodic in x
        xr = x - 2.0 * np.round(x / 2.0)
    else:
        xr = x - np.round(x)
    X, Y = kernels.grad_series(xr, np.broadcast_to(y, xr.shape), shifted, n)
    Y = Y + 1.0 / y - (PI / 3.0 if j is SpeciesTag.ONE else PI / 6.0)
    return X, Y


def gradient_series(j, z: PointLike, budget: SeriesBudget | None = None) -> tuple[float, float]:
    """(X_j(z), Y_j(z)) from the explicit Fourier-type series.

    Raises ``BudgetExceeded`` if ``Im z`` is too small for the budget.
    """
    z = as_complex(z)
    X, Y = gradient_array(j, np.array([z.real]), np.array([z.imag]), budget)
    return float(X[0]), float(Y[0])


_LEAD = {
    0: lambda y: 1.0 / y,
    1: lambda y: -1.0 / y**2,
    2: lambda y: 2.0 / y**3,
    3: lambda y: -6.0 / y**4,
}


def _axis_term(j: SpeciesTag, order: int, n: int, r: float) -> float:
    if j is SpeciesTag.ONE:
        u = r ** (2 * n)
        den = 1.0 - u
        if order == 0:
            return 8 * PI * n * u / den
        if order == 1:
            return -16 * PI**2 * n**2 * u / den**2
        if order == 2:
            return 32 * PI**3 * n**3 * (u + u * u) / den**3
        return -64 * PI**4 * n**4 * (u + 4 * u * u + u**3) / den**4
    v = (-r) ** n
    den = 1.0 - v
    if order == 0:
        return 4 * PI * n * v / den
    if order == 1:
        return -4 * PI**2 * n**2 * v / den**2
    if order == 2:
        return 4 * PI**3 * n**3 * (v + v * v) / den**3
    return -4 * PI**4 * n**4 * (v + 4 * v * v + v**3) / den**4


def axis_derivative(j, order: int, y: float, budget: SeriesBudget | None = None) -> float:
    """``d^order/dy^order Y_j(yi)`` for order 0..3.

    The f_0 series alternates for ``y > 1``; there the sum stops once the next
    term is below ``rel_tol`` times the scale of the sum. Elsewhere a
    geometric tail bound decides.
    """
    j = SpeciesTag.coerce(j)
    if order not in _LEAD:
        raise DomainError(f"order must be 0..3, got {order}")
    y = float(y)
    if not y > 0.0:
        raise DomainError(f"y must be positive, got {y}")
    budget = budget or default_budget()
    tol = budget.rel_tol
    r = math.exp(-PI * y)
    rho = r * r if j is SpeciesTag.ONE else r
    lead = _LEAD[order](y)
    if order == 0:
        lead -= PI / 3.0 if j is SpeciesTag.ONE else PI / 6.0
    scale = max(abs(lead), abs(_LEAD[order](y)))
    alternating = j is SpeciesTag.ZERO and y > 1.0
    total = lead
    prev = math.inf
    for n in range(1, budget.max_terms + 1):
        t = _axis_term(j, order, n, r)
        total += t
        a = abs(t)
        scale = max(scale, a)
        if alternating and a <= prev:
            if abs(_axis_term(j, order, n + 1, r)) < tol * scale:
                return total
        else:
            ratio = ((n + 1) / n) ** (order + 1) * rho
            if ratio < 1.0 and a * ratio / (1.0 - ratio) < tol * scale:
                return total
        prev = a
    raise BudgetExceeded(budget.max_terms + 1, budget.max_terms, "axis series")


def ratio_Y0_over_Y1(y: float, budget: SeriesBudget | None = None) -> float:
    """``Y_0(yi) / Y_1(yi)``; at ``y = 1`` the 0/0 limit is taken by L'Hospital.

    Within ``1e-5`` of ``y = 1`` a third-order Taylor quotient replaces the
    direct quotient to avoid cancellation.
    """
    y = float(y)
    h = y - 1.0
    if abs(h) < 1e-5:
        num = [axis_derivative(SpeciesTag.ZERO, k, 1.0, budget) for k in (1, 2, 3)]
        den = [axis_derivative(SpeciesTag.ONE, k, 1.0, budget) for k in (1, 2, 3)]
        p = num[0] + num[1] * h / 2 + num[2] * h * h / 6
        q = den[0] + den[1] * h / 2 + den[2] * h * h / 6
        return p / q
    return axis_derivative(SpeciesTag.ZERO, 0, y, budget) / axis_derivative(SpeciesTag.ONE, 0, y, budget)
