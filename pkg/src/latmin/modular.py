"""q-series for the fourth power of Dedekind eta and reduction into W-bar.

W-bar is ``{0 <= Re z <= 1, |z| >= 1}``; the group acting on the upper
half-plane is generated by ``z -> z + 2``, ``z -> -1/z`` and ``z -> -conj(z)``.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence, Union

import numpy as np

from . import kernels
from .errors import BudgetExceeded, DomainError, NonConvergence

TWO_PI = 2.0 * math.pi
REDUCTION_CAP = 10_000
W_SLACK = 1e-12


@dataclass(frozen=True)
class UhpPoint:
    """A point ``x + iy`` of the upper half-plane."""

    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise DomainError(f"non-finite point ({self.x}, {self.y})")
        if self.y <= 0.0:
            raise DomainError(f"Im z must be positive, got {self.y}")

    @classmethod
    def from_complex(cls, z: complex) -> "UhpPoint":
        z = complex(z)
        return cls(z.real, z.imag)

    @property
    def z(self) -> complex:
        return complex(self.x, self.y)

    def __complex__(self):
        return self.z


PointLike = Union[UhpPoint, complex, float]


def as_complex(z: PointLike) -> complex:
    """Coerce to ``complex`` and check that it lies in the upper half-plane."""
    if isinstance(z, UhpPoint):
        return z.z
    z = complex(z)
    UhpPoint(z.real, z.imag)
    return z


@dataclass(frozen=True)
class SeriesBudget:
    """Truncation control for every q-product and q-series."""

    rel_tol: float = 1e-14
    max_terms: int = 4096

    def __post_init__(self):
        if not (0.0 < self.rel_tol < 1e-6):
            raise DomainError(f"rel_tol must lie in (0, 1e-6), got {self.rel_tol}")
        if int(self.max_terms) != self.max_terms or self.max_terms < 16:
            raise DomainError(f"max_terms must be an integer >= 16, got {self.max_terms}")

    def doubled(self) -> "SeriesBudget":
        """Same tolerance with twice the term cap; used in self-convergence checks."""
        return SeriesBudget(self.rel_tol, 2 * self.max_terms)

    def terms_for(self, q: float, what: str = "q-series") -> int:
        """Smallest N with ``q**N < rel_tol * (1 - q)`` for a ratio ``0 <= q < 1``."""
        if q <= 0.0:
            return 1
        if q >= 1.0:
            raise BudgetExceeded(math.inf, self.max_terms, what)
        n = max(1, math.ceil(math.log(self.rel_tol * (1.0 - q)) / math.log(q)))
        if n > self.max_terms:
            raise BudgetExceeded(n, self.max_terms, what)
        return n


def default_budget() -> SeriesBudget:
    """Default budget; ``LATMIN_BUDGET_MAXTERMS`` overrides ``max_terms``."""
    raw = os.environ.get("LATMIN_BUDGET_MAXTERMS")
    if raw:
        return SeriesBudget(max_terms=int(raw))
    return SeriesBudget()


class Generator(str, Enum):
    T2 = "T2"
    T2inv = "T2inv"
    S = "S"
    R = "R"

    @property
    def inverse(self) -> "Generator":
        return {Generator.T2: Generator.T2inv, Generator.T2inv: Generator.T2}.get(self, self)


GroupWord = tuple  # tuple[Generator, ...], applied left to right


def e_of(z) -> complex:
    """``e(z) = exp(2*pi*i*z)``; works elementwise on arrays."""
    if isinstance(z, UhpPoint):
        z = z.z
    if np.ndim(z):
        return np.exp(1j * TWO_PI * np.asarray(z, dtype=np.complex128))
    return complex(np.exp(1j * TWO_PI * complex(z)))


def _apply(z: complex, g: Generator) -> complex:
    if g is Generator.T2:
        return z + 2.0
    if g is Generator.T2inv:
        return z - 2.0
    if g is Generator.S:
        return -1.0 / z
    return complex(-z.real, z.imag)


def apply_generator(z: PointLike, g) -> UhpPoint:
    return UhpPoint.from_complex(_apply(as_complex(z), Generator(g)))


def apply_word(word: Iterable, z: PointLike) -> UhpPoint:
    w = as_complex(z)
    for g in word:
        w = _apply(w, Generator(g))
    return UhpPoint.from_complex(w)


def in_w_bar(z: PointLike, slack: float = W_SLACK) -> bool:
    z = as_complex(z)
    return -slack <= z.real <= 1.0 + slack and abs(z) >= 1.0 - slack


def canonicalize(z: PointLike) -> tuple[UhpPoint, GroupWord]:
    """Move ``z`` into W-bar with the generators T2, T2inv, S, R.

    Returns the reduced point and the word that carries ``z`` to it.
    Boundary points of W-bar are returned untouched.

    Raises
    ------
    NonConvergence
        If more than ``REDUCTION_CAP`` inversions are needed, which only
        happens for points extremely close to the real axis.
    """
    w = as_complex(z)
    word: list[Generator] = []
    if in_w_bar(w, 0.0):
        return UhpPoint.from_complex(w), ()
    for _ in range(REDUCTION_CAP):
        if w.real > 1.0 or w.real < -1.0:
            k = math.floor((w.real + 1.0) / 2.0)
            g = Generator.T2inv if k > 0 else Generator.T2
            word.extend([g] * abs(k))
            w = w - 2.0 * k
        if abs(w) < 1.0:
            w = _apply(w, Generator.S)
            word.append(Generator.S)
            continue
        if -1.0 <= w.real <= 1.0:
            break
    else:
        raise NonConvergence(f"reduction of {complex(z)} exceeded {REDUCTION_CAP} steps")
    if w.real < 0.0:
        w = _apply(w, Generator.R)
        word.append(Generator.R)
    return UhpPoint.from_complex(w), tuple(word)


def reduce_modular(z):
    """Reduce points into the standard fundamental domain of the full modular group.

    Vectorized. |Im(z) eta(z)| is invariant under the full group, so this is
    the reduction used internally before evaluating q-series; it guarantees
    ``Im z >= sqrt(3)/2``.
    """
    w = np.array(z, dtype=np.complex128, copy=True, ndmin=1)
    for _ in range(REDUCTION_CAP):
        w = w - np.round(w.real)
        # points within rounding of the unit circle would cycle under S and T
        inside = np.abs(w) < 1.0 - 1e-14
        if not inside.any():
            return w
        w[inside] = -1.0 / w[inside]
    raise NonConvergence("modular reduction did not terminate")


def log_eta4(z, budget: SeriesBudget | None = None):
    """``log eta(z)`` on the branch ``pi*i*z/3 + 4*sum Log(1 - e(nz))``.

    Vectorized; no reduction is applied, so ``budget`` bounds the term count.
    """
    budget = budget or default_budget()
    zz = np.asarray(z, dtype=np.complex128)
    ymin = float(np.min(zz.imag))
    if ymin <= 0.0:
        raise DomainError("eta needs Im z > 0")
    n = budget.terms_for(math.exp(-TWO_PI * ymin), "eta product")
    out = 1j * (math.pi / 3.0) * zz + 4.0 * kernels.eta_logsum(zz.real, zz.imag, n)
    return out if np.ndim(z) else complex(out)


def eta4(z: PointLike, budget: SeriesBudget | None = None) -> complex:
    """Fourth power of the Dedekind eta function, ``e(z/6) prod (1 - e(nz))^4``.

    Raises ``BudgetExceeded`` when ``Im z`` is so small that the product
    needs more than ``budget.max_terms`` factors.
    """
    return complex(np.exp(log_eta4(as_complex(z), budget)))


def log_abs_im_eta(w, budget: SeriesBudget | None = None):
    """``log|Im(w) eta(w)|``, evaluated after modular reduction of ``w``.

    Vectorized over ``w``. This is f_1(w); f_0(z) is this at ``(z + 1)/2``.
    """
    budget = budget or default_budget()
    scalar = np.ndim(w) == 0
    wr = reduce_modular(w)
    y = wr.imag
    n = budget.terms_for(math.exp(-TWO_PI * float(y.min())), "eta product")
    val = np.log(y) - (math.pi / 3.0) * y + 4.0 * kernels.eta_logsum(wr.real, y, n).real
    return float(val[0]) if scalar else val.reshape(np.shape(w))
