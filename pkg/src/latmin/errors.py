"""Exception hierarchy shared by all latmin modules."""


class LatminError(Exception):
    """Base class for every error raised by latmin."""


class DomainError(LatminError, ValueError):
    """An argument lies outside the domain of the operation."""


class BudgetExceeded(LatminError):
    """A series needs more terms than the budget allows."""

    def __init__(self, needed, max_terms, what="series"):
        super().__init__(
            f"{what} needs {needed} terms but max_terms={max_terms}; "
            "canonicalize the point or raise the budget"
        )
        self.needed = needed
        self.max_terms = max_terms


class NonConvergence(LatminError):
    """Fundamental-domain reduction did not terminate within its cap."""


class OnLattice(DomainError):
    """Green's function requested at (or numerically at) a lattice point."""


class InvalidParams(DomainError):
    """Species parameters violate the admissibility conditions."""


class NotDisjoint(LatminError):
    """Disc assembly has overlapping discs."""

    def __init__(self, message, max_omega_scale=None):
        super().__init__(message)
        self.max_omega_scale = max_omega_scale


class DegenerateInteraction(LatminError):
    """The interaction quadratic form is not positive."""


class OutOfRange(DomainError):
    """Mix weight outside the range where the branch is defined."""


class BracketFailure(LatminError):
    """Root bracket lacks a sign change."""


class GridBeatsFormula(LatminError):
    """A grid point beats the analytic maximizer of f_b."""


class Unclassified(LatminError):
    """A point lies on neither the imaginary axis nor the unit circle."""
