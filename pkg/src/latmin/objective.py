"""The reduced objective f_b = b f_1 + (1 - b) f_0 and its companions.

``f_1(z) = log|Im(z) eta(z)|`` and ``f_0(z) = f_1((z + 1)/2)``, with eta the
fourth power of the Dedekind eta function.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .modular import PointLike, SeriesBudget, UhpPoint, as_complex, log_abs_im_eta, log_eta4
from .series import SpeciesTag, gradient_array, gradient_series

SINGULAR_FLAG_Y = 0.05


@dataclass(frozen=True)
class MixWeight:
    """Weight ``b`` of f_1 in f_b. Any real is allowed; ``physical`` flags ``0 <= b <= 1``."""

    b: float

    def __post_init__(self):
        if not math.isfinite(self.b):
            raise DomainError(f"mix weight must be finite, got {self.b}")

    @property
    def physical(self) -> bool:
        return 0.0 <= self.b <= 1.0

    def __float__(self):
        return float(self.b)


def _bval(b) -> float:
    return float(b.b) if isinstance(b, MixWeight) else float(b)


def f_component_array(j, z, budget: SeriesBudget | None = None):
    """Vectorized f_1 or f_0 over an array of complex points."""
    j = SpeciesTag.coerce(j)
    z = np.asarray(z, dtype=np.complex128)
    if np.any(z.imag <= 0):
        raise DomainError("f_j needs Im z > 0")
    w = z if j is SpeciesTag.ONE else (z + 1.0) / 2.0
    return log_abs_im_eta(w, budget)


def f_component(j, z: PointLike, budget: SeriesBudget | None = None) -> float:
    """f_1(z) = log|Im(z) eta(z)| or f_0(z) = f_1((z+1)/2).

    The argument is first reduced by the modular group, which leaves
    ``|Im(w) eta(w)|`` unchanged, so any point of the upper half-plane
    is accepted.
    """
    z = as_complex(z)
    return float(f_component_array(j, np.array([z]), budget)[0])


def f_b_array(b, z, budget: SeriesBudget | None = None):
    bv = _bval(b)
    out = 0.0
    if bv != 0.0:
        out = out + bv * f_component_array(SpeciesTag.ONE, z, budget)
    if bv != 1.0:
        out = out + (1.0 - bv) * f_component_array(SpeciesTag.ZERO, z, budget)
    return out


def f_b(b, z: PointLike, budget: SeriesBudget | None = None) -> float:
    """Reduced objective ``b f_1(z) + (1 - b) f_0(z)``.

    Parameters
    ----------
    b : float or MixWeight
        Mix weight. Values outside [0, 1] are accepted.
    z : UhpPoint or complex
        Point of the upper half-plane.
    budget : SeriesBudget, optional
        Truncation control; defaults to ``default_budget()``.
    """
    z = as_complex(z)
    return float(np.asarray(f_b_array(b, np.array([z]), budget))[0])


def grad_f_b(b, z: PointLike, budget: SeriesBudget | None = None) -> tuple[float, float]:
    """(X_b, Y_b), the x- and y-partials of f_b, from the explicit series."""
    bv = _bval(b)
    z = as_complex(z)
    x1, y1 = gradient_series(SpeciesTag.ONE, z, budget)
    x0, y0 = gradient_series(SpeciesTag.ZERO, z, budget)
    return bv * x1 + (1 - bv) * x0, bv * y1 + (1 - bv) * y0


def grad_f_b_array(b, x, y, budget: SeriesBudget | None = None):
    bv = _bval(b)
    x1, y1 = gradient_array(SpeciesTag.ONE, x, y, budget)
    x0, y0 = gradient_array(SpeciesTag.ZERO, x, y, budget)
    return bv * x1 + (1 - bv) * x0, bv * y1 + (1 - bv) * y0


def near_singular_corner(z: PointLike) -> bool:
    """True when ``Im z < 0.05``; the series there need many terms and lose digits."""
    return as_complex(z).imag < SINGULAR_FLAG_Y


def dual_point(z: PointLike) -> UhpPoint:
    """``w = (z - 1)/(z + 1)``, which exchanges f_b and f_{1-b}."""
    z = as_complex(z)
    x, y = z.real, z.imag
    d = (x + 1.0) ** 2 + y * y
    return UhpPoint((x * x + y * y - 1.0) / d, 2.0 * y / d)


def arg_z_eta(z: PointLike, budget: SeriesBudget | None = None) -> float:
    """Continuous harmonic branch of ``arg(z eta(z))`` with value pi/2 at i.

    Uses ``arg z + pi x / 3 + 4 sum arg(1 - e(nz))``. Each summand uses the
    principal branch, which is continuous because ``|e(nz)| < 1`` throughout
    the upper half-plane, so no path continuation is required.
    """
    z = as_complex(z)
    return math.atan2(z.imag, z.real) + complex(log_eta4(z, budget)).imag


def circle_transfer(b, u: float, budget: SeriesBudget | None = None) -> tuple[float, float]:
    """Predicted (X_b, Y_b) at ``u + i sqrt(1 - u^2)`` from Y_{1-b} on the imaginary axis."""
    u = float(u)
    if not -1.0 < u < 1.0:
        raise DomainError(f"u must lie in (-1, 1), got {u}")
    bv = _bval(b)
    s = math.sqrt(1.0 - u * u) / (1.0 - u)
    _, y1 = gradient_series(SpeciesTag.ONE, complex(0.0, s), budget)
    _, y0 = gradient_series(SpeciesTag.ZERO, complex(0.0, s), budget)
    yd = (1 - bv) * y1 + bv * y0
    return s * yd, -u / (1.0 - u) * yd
