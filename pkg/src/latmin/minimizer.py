"""Maximizers of f_b over W-bar, lattice classification and the b phase diagram.

For ``b < B`` the maximizer sits on the imaginary axis at ``q_b i``; for
``B <= b <= 1 - B`` it is ``i``; for ``b > 1 - B`` it sits on the unit
circle at ``p_b + i sqrt(1 - p_b^2)``. ``B = d / (d - e)`` with ``d, e`` the
y-derivatives of ``Y_0`` and ``Y_1`` at ``i``.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import NamedTuple

import numpy as np
from scipy.optimize import brentq

from .assembly import DiscAssembly, SpeciesParams, mix_weight, optimal_scale, require_disjoint
from .errors import BracketFailure, DomainError, GridBeatsFormula, OutOfRange, Unclassified
from .green import LatticeBasis
from .modular import SeriesBudget, UhpPoint, default_budget
from .objective import f_b, f_component_array
from .series import SpeciesTag, axis_derivative

SQRT3 = math.sqrt(3.0)
CLASS_TOL = 1e-9
GRID_SLACK = 1e-9
GRID_N = 161
ROOT_XTOL = 1e-12
BRACKET_LO = 1.0 + 1e-8


class LatticeKind(str, Enum):
    RECTANGULAR = "Rectangular"
    SQUARE = "Square"
    RHOMBIC = "Rhombic"
    HEXAGONAL = "Hexagonal"


@dataclass(frozen=True)
class LatticeClass:
    """Lattice type; ``param`` is the side ratio (rectangular) or acute angle in radians (rhombic)."""

    kind: LatticeKind
    param: float | None = None

    def __str__(self):
        if self.param is None:
            return self.kind.value
        return f"{self.kind.value}({self.param:.12g})"


@dataclass(frozen=True)
class PhasePoint:
    """One row of the phase diagram."""

    b: float
    z_star: UhpPoint
    klass: LatticeClass
    f_value: float


def _budget(budget):
    return budget or default_budget()


@lru_cache(maxsize=8)
def _threshold(budget: SeriesBudget) -> float:
    d = axis_derivative(SpeciesTag.ZERO, 1, 1.0, budget)
    e = axis_derivative(SpeciesTag.ONE, 1, 1.0, budget)
    return d / (d - e)


def threshold_B(budget: SeriesBudget | None = None) -> float:
    """Threshold ``B = d / (d - e)`` separating the rectangular and square phases.

    Memoized per budget.
    """
    return _threshold(_budget(budget))


def axis_Y_b(b: float, y: float, budget: SeriesBudget | None = None) -> float:
    """``Y_b(yi) = b Y_1(yi) + (1 - b) Y_0(yi)``."""
    budget = _budget(budget)
    return b * axis_derivative(SpeciesTag.ONE, 0, y, budget) + (1 - b) * axis_derivative(SpeciesTag.ZERO, 0, y, budget)


def q_of_b(b: float, budget: SeriesBudget | None = None) -> float:
    """Ordinate ``q_b`` of the maximizer on the imaginary axis, for ``0 <= b < B``.

    ``q_0 = sqrt(3)`` exactly; otherwise the root of ``Y_b(yi)`` on
    ``[1 + 1e-8, sqrt(3)]`` by Brent's method with ``xtol = 1e-12``.

    Raises
    ------
    OutOfRange
        If ``b`` is outside ``[0, B)``.
    BracketFailure
        If ``Y_b`` does not change sign from + to - on the bracket.
    """
    budget = _budget(budget)
    b = float(b)
    B = threshold_B(budget)
    if not 0.0 <= b < B:
        raise OutOfRange(f"q_b is defined for 0 <= b < B = {B:.12g}, got {b}")
    if b == 0.0:
        return SQRT3
    lo = axis_Y_b(b, BRACKET_LO, budget)
    hi = axis_Y_b(b, SQRT3, budget)
    if not (lo > 0.0 > hi):
        raise BracketFailure(f"Y_b has no +/- sign change on [1, sqrt(3)] for b = {b} ({lo:.3g}, {hi:.3g})")
    return brentq(lambda y: axis_Y_b(b, y, budget), BRACKET_LO, SQRT3, xtol=ROOT_XTOL, maxiter=200)


def p_of_b(b: float, budget: SeriesBudget | None = None) -> float:
    """Abscissa ``p_b = (q^2 - 1)/(q^2 + 1)`` with ``q = q_{1-b}``, for ``1 - B < b <= 1``."""
    budget = _budget(budget)
    b = float(b)
    B = threshold_B(budget)
    if not 1.0 - B < b <= 1.0:
        raise OutOfRange(f"p_b is defined for 1 - B < b <= 1, got {b}")
    q = q_of_b(1.0 - b, budget)
    return (q * q - 1.0) / (q * q + 1.0)


def classify(z_star) -> LatticeClass:
    """Lattice type of the shape ``z_star``, which must lie on the imaginary axis or the unit circle.

    A side ratio within 1e-9 of 1 is Square; an angle within 1e-9 of pi/3
    is Hexagonal and within 1e-9 of pi/2 is Square.
    """
    z = complex(z_star.z if isinstance(z_star, UhpPoint) else z_star)
    if abs(z.real) <= CLASS_TOL:
        ratio = z.imag if z.imag >= 1.0 else 1.0 / z.imag
        if abs(ratio - 1.0) <= CLASS_TOL:
            return LatticeClass(LatticeKind.SQUARE)
        return LatticeClass(LatticeKind.RECTANGULAR, ratio)
    if abs(abs(z) - 1.0) <= CLASS_TOL:
        theta = math.atan2(z.imag, z.real)
        acute = min(theta, math.pi - theta)
        if abs(acute - math.pi / 3) <= CLASS_TOL:
            return LatticeClass(LatticeKind.HEXAGONAL)
        if abs(acute - math.pi / 2) <= CLASS_TOL:
            return LatticeClass(LatticeKind.SQUARE)
        return LatticeClass(LatticeKind.RHOMBIC, acute)
    raise Unclassified(f"{z} is neither on the imaginary axis nor on the unit circle")


def w_bar_grid(nx: int = GRID_N, ny: int = GRID_N, ymin: float = 1.0, ymax: float = 4.0) -> np.ndarray:
    """Points of a regular grid over ``[0, 1] x [ymin, ymax]`` that lie in W-bar."""
    x = np.linspace(0.0, 1.0, nx)
    y = np.linspace(ymin, ymax, ny)
    Z = (x[None, :] + 1j * y[:, None]).ravel()
    return Z[np.abs(Z) >= 1.0]


@lru_cache(maxsize=4)
def _grid_components(budget: SeriesBudget):
    Z = w_bar_grid()
    return Z, f_component_array(SpeciesTag.ONE, Z, budget), f_component_array(SpeciesTag.ZERO, Z, budget)


def grid_check(b: float, f_star: float, budget: SeriesBudget | None = None) -> float:
    """Largest grid value of f_b minus ``f_star``; raises if it exceeds 1e-9."""
    Z, f1, f0 = _grid_components(_budget(budget))
    vals = b * f1 + (1.0 - b) * f0
    k = int(np.argmax(vals))
    gap = float(vals[k] - f_star)
    if gap > GRID_SLACK:
        raise GridBeatsFormula(f"grid point {Z[k]} beats the maximizer by {gap:.3g} at b = {b}")
    return gap


def maximizer(b: float, budget: SeriesBudget | None = None) -> complex:
    """Analytic maximizer of f_b in W-bar, without the grid check."""
    budget = _budget(budget)
    b = float(b)
    if not 0.0 <= b <= 1.0:
        raise OutOfRange(f"b must lie in [0, 1], got {b}")
    B = threshold_B(budget)
    if b <= 1.0 - B:
        q = q_of_b(b, budget) if b < B else 1.0
        return complex(0.0, q)
    p = p_of_b(b, budget)
    return complex(p, math.sqrt(1.0 - p * p))


def maximize_f_b(b: float, budget: SeriesBudget | None = None, check_grid: bool = True) -> PhasePoint:
    """Maximizer of f_b over W-bar, classified, with an optional grid cross-check.

    Raises
    ------
    GridBeatsFormula
        If a point of the 161 x 161 grid over ``[0,1] x [1,4]`` exceeds
        ``f_b(z*)`` by more than 1e-9.
    """
    budget = _budget(budget)
    b = float(b)
    z = maximizer(b, budget)
    fz = f_b(b, z, budget)
    if check_grid:
        grid_check(b, fz, budget)
    return PhasePoint(b, UhpPoint(z.real, z.imag), classify(z), fz)


def sweep_values(b_min: float, b_max: float, step: float) -> list[float]:
    if not (0.0 <= b_min <= b_max <= 1.0):
        raise DomainError(f"need 0 <= b_min <= b_max <= 1, got {b_min}, {b_max}")
    if not step > 0.0:
        raise DomainError(f"step must be positive, got {step}")
    count = int(math.floor((b_max - b_min) / step + 1e-9)) + 1
    return [min(b_min + k * step, b_max) for k in range(count)]


def _phase_task(args):
    b, budget, check_grid = args
    return maximize_f_b(b, budget, check_grid)


def phase_diagram(b_min: float, b_max: float, step: float, budget: SeriesBudget | None = None,
                  workers: int | None = None, check_grid: bool = True) -> list[PhasePoint]:
    """Maximizer and lattice class for ``b = b_min, b_min + step, ...`` up to ``b_max``.

    ``workers > 1`` spreads the b-values over a process pool; rows are
    always returned in increasing b.
    """
    budget = _budget(budget)
    bs = sweep_values(b_min, b_max, step)
    tasks = [(b, budget, check_grid) for b in bs]
    if workers and workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_phase_task, tasks))
    else:
        rows = [_phase_task(t) for t in tasks]
    return sorted(rows, key=lambda r: r.b)


def unit_basis(z_star) -> LatticeBasis:
    """Unit-area basis ``a1 = 1/sqrt(Im z)``, ``a2 = z a1``."""
    return LatticeBasis.from_tau(z_star.z if isinstance(z_star, UhpPoint) else z_star)


class MinimalAssembly(NamedTuple):
    assembly: DiscAssembly
    t_alpha: float
    energy: float
    klass: LatticeClass


def minimal_assembly(p: SpeciesParams, budget: SeriesBudget | None = None) -> MinimalAssembly:
    """Energy-minimizing two-species disc assembly for the given species.

    Pipeline: mix weight b, maximizer z* of f_b, unit-area basis from z*,
    optimal scale, then the assembly on the scaled basis.

    Raises
    ------
    NotDisjoint
        If discs overlap at the optimum; ``max_omega_scale`` tells how far
        the volume fractions must shrink.
    """
    budget = _budget(budget)
    pt = maximize_f_b(mix_weight(p).b, budget)
    basis = unit_basis(pt.z_star)
    require_disjoint(DiscAssembly.from_params(basis, p))
    t, energy = optimal_scale(basis, p, budget)
    return MinimalAssembly(DiscAssembly.from_params(basis, p).scaled(t), t, energy, pt.klass)

