"""
Exact arithmetic in a biquadratic field Q(sqrt(d1), sqrt(d2)).

Elements are stored as rational coordinates on the basis
{1, sqrt(d1), sqrt(d2), sqrt(d1*d2)}. With d1 > 0 and d2 < 0 the second
conjugation (sqrt(d2) -> -sqrt(d2)) is complex conjugation, which is what the
lattice oracles need to take imaginary parts exactly.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple, Union

from core.arith import is_square, is_squarefree, squarefree_part
from core.errors import DomainError

Scalar = Union[int, Fraction]


@dataclass(frozen=True)
class QuadraticTower:
    d1: int
    d2: int

    def __post_init__(self) -> None:
        for d in (self.d1, self.d2):
            if d in (0, 1) or not is_squarefree(d):
                raise DomainError(f"tower generators must be squarefree and != 0, 1; got {d}")
        if self.d1 == self.d2 or (self.d1 * self.d2 > 0 and is_square(self.d1 * self.d2)):
            raise DomainError(f"Q(sqrt({self.d1}), sqrt({self.d2})) is not a degree 4 field")

    def __call__(self, a: Scalar = 0, b: Scalar = 0, c: Scalar = 0, d: Scalar = 0) -> "QTowerElem":
        return QTowerElem(self, (Fraction(a), Fraction(b), Fraction(c), Fraction(d)))

    @property
    def one(self) -> "QTowerElem":
        return self(1)

    @property
    def sqrt_d1(self) -> "QTowerElem":
        return self(0, 1)

    @property
    def sqrt_d2(self) -> "QTowerElem":
        return self(0, 0, 1)


@dataclass(frozen=True)
class QTowerElem:
    tower: QuadraticTower
    coeffs: Tuple[Fraction, Fraction, Fraction, Fraction]

    def _coerce(self, other) -> "QTowerElem":
        if isinstance(other, QTowerElem):
            if other.tower != self.tower:
                raise DomainError("cannot combine elements of different towers")
            return other
        if isinstance(other, (int, Fraction)):
            return self.tower(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return QTowerElem(self.tower, tuple(x + y for x, y in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> "QTowerElem":
        return QTowerElem(self.tower, tuple(-x for x in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        d1, d2 = self.tower.d1, self.tower.d2
        a0, a1, a2, a3 = self.coeffs
        b0, b1, b2, b3 = other.coeffs
        return QTowerElem(
            self.tower,
            (
                a0 * b0 + d1 * a1 * b1 + d2 * a2 * b2 + d1 * d2 * a3 * b3,
                a0 * b1 + a1 * b0 + d2 * (a2 * b3 + a3 * b2),
                a0 * b2 + a2 * b0 + d1 * (a1 * b3 + a3 * b1),
                a0 * b3 + a3 * b0 + a1 * b2 + a2 * b1,
            ),
        )

    __rmul__ = __mul__

    def conj1(self) -> "QTowerElem":
        a0, a1, a2, a3 = self.coeffs
        return QTowerElem(self.tower, (a0, -a1, a2, -a3))

    def conj2(self) -> "QTowerElem":
        a0, a1, a2, a3 = self.coeffs
        return QTowerElem(self.tower, (a0, a1, -a2, -a3))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def rational(self) -> Fraction:
        if not self.is_rational():
            raise DomainError(f"{self} is not rational")
        return self.coeffs[0]

    def inverse(self) -> "QTowerElem":
        """
        Exact inverse through the norm tower.

        x * conj1(x) lies in Q(sqrt(d2)); multiplying by its conj2 gives a rational.
        """
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in quadratic tower")
        y = self * self.conj1()
        norm = (y * y.conj2()).rational()
        return self.conj1() * y.conj2() / norm

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero in quadratic tower")
            return QTowerElem(self.tower, tuple(x / other for x in self.coeffs))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.tower(other) * self.inverse()

    def imag_sign(self) -> int:
        """
        Sign of the imaginary part when d1 > 0 > d2.

        Im(x) = (a2 + a3*sqrt(d1)) * sqrt(|d2|), so only the sign of
        a2 + a3*sqrt(d1) matters.
        """
        if self.tower.d1 < 0 or self.tower.d2 > 0:
            raise DomainError("imaginary part needs a real d1 and an imaginary d2")
        return _sign_of(self.coeffs[2], self.coeffs[3], self.tower.d1)

    def __str__(self) -> str:
        d1, d2 = self.tower.d1, self.tower.d2
        names = ("", f"√{d1}", f"√{d2}", f"√{d1 * d2}")
        terms = [f"{c}{n}" if n else f"{c}" for c, n in zip(self.coeffs, names) if c]
        return " + ".join(terms) or "0"


def _sign_of(r: Fraction, s: Fraction, d: int) -> int:
    """Sign of r + s*sqrt(d) for d > 0 squarefree."""
    if s == 0:
        return (r > 0) - (r < 0)
    if r == 0 or (r > 0) == (s > 0):
        return 1 if s > 0 or r > 0 else -1
    # opposite signs: compare r^2 with d*s^2
    dominant = r if r * r > d * s * s else s
    return 1 if dominant > 0 else -1


def tower_for_discriminant(D: int) -> QuadraticTower:
    """Q(sqrt(3), sqrt(-D)): enough for tau in Q(sqrt(-D)) and the sqrt(3) entries."""
    return QuadraticTower(3, squarefree_part(-D))


def imaginary_quadratic(tower: QuadraticTower, re: Scalar, D: int, den: int) -> QTowerElem:
    """
    The element (re + sqrt(-D)) / den of the tower.

    Raises:
        DomainError: If sqrt(-D) is not a rational multiple of sqrt(d2).
    """
    d2 = tower.d2
    if (-D) % d2 or not is_square(-D // d2):
        raise DomainError(f"sqrt({-D}) does not lie in Q(sqrt({d2}))")
    m = math.isqrt(-D // d2)
    return tower(Fraction(re, den), 0, Fraction(m, den))
