"""
Exact oracles for the Jacobian lattices of the D8 and D12 families.

Vectors of C^2 are pairs of tower elements. The symplectic form is
<(a,b),(c,d)> = -Im(a*conj(c) + b*conj(d)) / (2*Im(tau)), evaluated exactly as
-(w - conj(w)) / (2*(tau - conj(tau))).

Matrices act on row coordinate vectors: row i holds the coordinates of the
image of the i-th basis vector. Composition A-then-B is A*B, preservation of
the form is M*G*M^T == G and self-adjointness is S*G == G*S^T.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

import sympy

from core.errors import DomainError, LatticeNotPreservedError
from core.lattice.qtower import (
    QTowerElem,
    QuadraticTower,
    imaginary_quadratic,
    tower_for_discriminant,
)
from core.models import PinwheelPrototype

Vector = Tuple[QTowerElem, QTowerElem]
Map2 = Tuple[Tuple[QTowerElem, QTowerElem], Tuple[QTowerElem, QTowerElem]]


def _rational(x: Fraction) -> sympy.Rational:
    return sympy.Rational(x.numerator, x.denominator)


def _check_tau(tau: QTowerElem) -> None:
    if tau.imag_sign() <= 0:
        raise DomainError(f"tau must lie in the upper half plane, got {tau}")


@dataclass(frozen=True)
class D8Lattice:
    """Lattice spanned by (1,1), (1,-1), (tau,tau+1), (tau,-tau-1)."""

    tau: QTowerElem

    def __post_init__(self) -> None:
        _check_tau(self.tau)

    @property
    def basis(self) -> List[Vector]:
        t = self.tau
        one = t.tower.one
        return [(one, one), (one, -one), (t, t + 1), (t, -t - 1)]

    def maps(self) -> Dict[str, Map2]:
        one, zero = self.tau.tower.one, self.tau.tower(0)
        return {
            "J": ((zero, one), (-one, zero)),
            "r": ((one, zero), (zero, -one)),
        }


@dataclass(frozen=True)
class D12Lattice:
    """Lattice spanned by (1,1/sqrt3), (tau,sqrt3*tau), (1,-1/sqrt3), (tau,-sqrt3*tau)."""

    tau: QTowerElem

    def __post_init__(self) -> None:
        _check_tau(self.tau)
        if self.tau.tower.d1 != 3:
            raise DomainError("the D12 lattice needs sqrt(3) as first tower generator")

    @property
    def basis(self) -> List[Vector]:
        t = self.tau
        one = t.tower.one
        r3 = t.tower.sqrt_d1
        return [(one, r3 / 3), (t, r3 * t), (one, -r3 / 3), (t, -r3 * t)]

    def maps(self) -> Dict[str, Map2]:
        tower = self.tau.tower
        one, zero, r3 = tower.one, tower(0), tower.sqrt_d1
        half = Fraction(1, 2)
        return {
            "r": ((one, zero), (zero, -one)),
            "Z": ((one * half, -r3 * half), (r3 * half, one * half)),
        }


def symplectic_pairing(tau: QTowerElem, u: Vector, v: Vector) -> Fraction:
    """
    Exact value of the polarization on two vectors.

    Raises:
        DomainError: If the value is not rational (vectors outside the lattice span).
    """
    w = u[0] * v[0].conj2() + u[1] * v[1].conj2()
    ratio = (w - w.conj2()) / ((tau - tau.conj2()) * 2)
    value = -ratio
    if not value.is_rational():
        raise DomainError(f"pairing is not rational: {value}")
    return value.rational()


def gram_matrix(L) -> sympy.Matrix:
    """
    Gram matrix of the polarization on the lattice basis.

    Args:
        L: A D8Lattice or D12Lattice.

    Returns:
        4x4 sympy Matrix of rationals, skew-symmetric with determinant 1.
    """
    basis = L.basis
    return sympy.Matrix(
        4, 4, lambda i, j: _rational(symplectic_pairing(L.tau, basis[i], basis[j]))
    )


def _apply(m: Map2, v: Vector) -> Vector:
    return (m[0][0] * v[0] + m[0][1] * v[1], m[1][0] * v[0] + m[1][1] * v[1])


def automorphism_matrix(L, which: str) -> sympy.Matrix:
    """
    Integer matrix of a lattice automorphism in the lattice basis.

    Coordinates of each image vector are solved from its pairings with the basis:
    x = p * G^-1 where p_j = <image, v_j>. The reconstruction is then checked
    exactly.

    Args:
        L: A D8Lattice (J, r) or D12Lattice (r, Z).
        which: Name of the map.

    Returns:
        4x4 integer sympy Matrix (row convention).

    Raises:
        DomainError: If ``which`` is not a map of this family.
        LatticeNotPreservedError: If the map does not preserve the lattice.
    """
    maps = L.maps()
    if which not in maps:
        raise DomainError(f"{type(L).__name__} has no automorphism {which!r}; use {sorted(maps)}")
    basis = L.basis
    g_inv = gram_matrix(L).inv()
    rows = []
    for v in basis:
        image = _apply(maps[which], v)
        pairings = sympy.Matrix(
            1, 4, [_rational(symplectic_pairing(L.tau, image, w)) for w in basis]
        )
        coords = pairings * g_inv
        if not all(x.is_integer for x in coords):
            raise LatticeNotPreservedError(
                f"{which} maps {v[0]}, {v[1]} outside the lattice: coordinates {list(coords)}"
            )
        rebuilt = _combine(basis, [int(x) for x in coords])
        if rebuilt != image:
            raise LatticeNotPreservedError(f"{which} image of a basis vector is not reconstructed")
        rows.append(list(coords))
    return sympy.Matrix(rows)


def _combine(basis: List[Vector], coords: List[int]) -> Vector:
    zero = basis[0][0].tower(0)
    first, second = zero, zero
    for x, v in zip(coords, basis):
        first = first + v[0] * x
        second = second + v[1] * x
    return (first, second)


def real_mult_generator(D: int, e: int, k: int, c: int) -> sympy.Matrix:
    """
    Generator S of real multiplication by O_D on the D8 lattice of
    tau = (e + k*sqrt(-D)) / (2c), with b = (k^2 D + e^2) / (2c).

    Raises:
        DomainError: If c <= 0, k <= 0 or b is not integral.
    """
    if c <= 0 or k <= 0:
        raise DomainError(f"need c > 0 and k > 0, got c={c}, k={k}")
    num = k * k * D + e * e
    if num % (2 * c):
        raise DomainError(f"b = ({k}^2*{D} + {e}^2)/(2*{c}) is not an integer")
    b = num // (2 * c)
    entries = [
        [D * k + c, -e - c, 0, 2 * c],
        [c + e, D * k - c, -2 * c, 0],
        [0, -e - b, D * k + c, c + e],
        [b + e, 0, -e - c, D * k - c],
    ]
    return sympy.Matrix(entries) / (2 * k)


def s_integrality_criterion(D: int, e: int, k: int, c: int) -> bool:
    """k divides c, e, b and D ≡ c/k ≡ e/k ≡ b/k (mod 2)."""
    num = k * k * D + e * e
    if num % (2 * c):
        raise DomainError(f"b = ({k}^2*{D} + {e}^2)/(2*{c}) is not an integer")
    b = num // (2 * c)
    if c % k or e % k or b % k:
        return False
    return D % 2 == (c // k) % 2 == (e // k) % 2 == (b // k) % 2


def is_integral(m: sympy.Matrix) -> bool:
    return all(x.is_integer for x in m)


def prototype_tau(
    p: PinwheelPrototype, tower: Optional[QuadraticTower] = None, which: str = "c"
) -> QTowerElem:
    """
    The point tau_c = (e + sqrt(-D))/(2c) or tau_b = (-e + sqrt(-D))/(2b) of p.

    Raises:
        DomainError: If ``which`` is neither "c" nor "b".
    """
    if which not in ("c", "b"):
        raise DomainError(f"which must be 'c' or 'b', got {which!r}")
    tower = tower or tower_for_discriminant(p.D.value)
    re, den = p.tau_c if which == "c" else p.tau_b
    return imaginary_quadratic(tower, re, p.D.value, den)
