"""
Exception hierarchy for the Weierstrass curve library.

Every operation in ``core`` raises one of these. Argument problems derive from
``DomainError`` (a ``ValueError``); disagreements between two independent
computations derive from ``ConsistencyError`` (a ``RuntimeError``). The CLI maps
the two families to exit codes 1 and 2.
"""


class WeierstrassError(Exception):
    """Root of all library errors."""


class DomainError(WeierstrassError, ValueError):
    """An argument lies outside the domain of the operation."""


class InvalidDiscriminantError(DomainError):
    """D is not a discriminant: D < 5 or D is 2 or 3 mod 4."""

    def __init__(self, value: int) -> None:
        self.value = value
        super().__init__(
            f"Invalid discriminant {value}: D must be >= 5 and D ≡ 0,1 (mod 4)"
        )


class NotApplicableError(DomainError):
    """The operation is not defined for this discriminant (residue or squareness)."""


class ConfigurationError(DomainError):
    """Settings or environment overrides are malformed."""


class ConsistencyError(WeierstrassError, RuntimeError):
    """Two routes to the same quantity disagree, or a proven bound fails."""


class LatticeNotPreservedError(ConsistencyError):
    """A linear map expected to preserve a lattice has non-integral matrix."""


class PrecisionError(WeierstrassError, ArithmeticError):
    """Working precision is insufficient for exact rational reconstruction."""


class ReferenceDataError(WeierstrassError):
    """Reference tables are missing or malformed."""
