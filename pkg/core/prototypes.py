"""
Pinwheel prototypes and the orbifold points of W_D.

A prototype is an integer triple (e, c, b) with D = -e^2 + 2bc, D ≡ e ≡ c ≡ b
(mod 2), |e| <= c <= b and e <= 0 on the boundary (|e| = c or b = c). It is
proper when it is not g times a prototype of D/g^2 for some g > 1. For D > 8 the
proper prototypes are in bijection with the orbifold points of order two on
W_D, and their number is also given by a weighted class number formula; both
routes are computed here and compared.
"""

import logging
import math
from fractions import Fraction
from functools import lru_cache
from typing import List, Tuple

from core.arith import as_discriminant
from core.classnum import weighted_class_number
from core.errors import ConsistencyError, NotApplicableError
from core.models import Discriminant, OrbifoldSignature, PinwheelPrototype

logger = logging.getLogger(__name__)


def _is_prototype(D: int, e: int, c: int, b: int) -> bool:
    if -e * e + 2 * b * c != D:
        return False
    if not (D % 2 == e % 2 == c % 2 == b % 2):
        return False
    if not abs(e) <= c <= b:
        return False
    if (abs(e) == c or b == c) and e > 0:
        return False
    return True


@lru_cache(maxsize=4096)
def _prototype_triples(D: int) -> Tuple[Tuple[int, int, int], ...]:
    triples = []
    parity = D % 2
    for c in range(1, math.isqrt(D) + 1):
        if c % 2 != parity:
            continue
        for e in range(-c, c + 1):
            if e % 2 != parity:
                continue
            num = D + e * e
            if num % (2 * c):
                continue
            b = num // (2 * c)
            if _is_prototype(D, e, c, b):
                triples.append((e, c, b))
    return tuple(sorted(triples))


def enumerate_prototypes_all(D) -> List[PinwheelPrototype]:
    """
    Enumerate E0(D), sorted by (e, c, b).

    Args:
        D: Discriminant (int or Discriminant).

    Returns:
        All prototypes of D, proper or not.
    """
    disc = as_discriminant(D)
    return [PinwheelPrototype(e, c, b, disc) for e, c, b in _prototype_triples(disc.value)]


def is_proper(p: PinwheelPrototype) -> bool:
    D = p.D.value
    g = 2
    while g * g <= D:
        if D % (g * g) == 0 and p.e % g == 0 and p.c % g == 0 and p.b % g == 0:
            if _is_prototype(D // (g * g), p.e // g, p.c // g, p.b // g):
                return False
        g += 1
    return True


def enumerate_prototypes(D) -> List[PinwheelPrototype]:
    """Enumerate the proper prototypes E(D), sorted by (e, c, b)."""
    return [p for p in enumerate_prototypes_all(D) if is_proper(p)]


def e2_closed_form(D) -> Fraction:
    """
    Weighted class number formula for e2(W_D), by D mod 16.

    Only meaningful for D > 8; at D = 8 it evaluates to 1/2.
    """
    value = as_discriminant(D).value
    r = value % 16
    if r % 2:
        return weighted_class_number(-4 * value) / 2
    if r == 0:
        return (weighted_class_number(-value) + 2 * weighted_class_number(-value // 4)) / 2
    if r == 4:
        return Fraction(0)
    if r == 8:
        return weighted_class_number(-value) / 2
    return (weighted_class_number(-value) + 3 * weighted_class_number(-value // 4)) / 2


def orbifold_signature(D) -> OrbifoldSignature:
    """
    Counts of orbifold points of order 2, 4 and 5 on W_D.

    Raises:
        ConsistencyError: If for D > 8 the prototype count disagrees with the
            class number formula.
    """
    disc = as_discriminant(D)
    if disc.value == 5:
        return OrbifoldSignature(e2=1, e4=0, e5=1)
    if disc.value == 8:
        return OrbifoldSignature(e2=0, e4=1, e5=0)
    count = len(enumerate_prototypes(disc))
    closed = e2_closed_form(disc)
    if closed != count:
        raise ConsistencyError(
            f"e2(W_{disc.value}): {count} prototypes but class number formula gives {closed}"
        )
    return OrbifoldSignature(e2=count)


def require_spin_residue(disc: Discriminant) -> None:
    if disc.value % 8 != 1 or disc.value < 9:
        raise NotApplicableError(f"spin is defined for D ≡ 1 (mod 8), D >= 9; got {disc.value}")


def spin_of_prototype(p: PinwheelPrototype) -> int:
    """Spin of the orbifold point of p: ((c + f)/2) mod 2."""
    require_spin_residue(p.D)
    return ((p.c + p.D.conductor) // 2) % 2


def epsilon0_of_prototype(p: PinwheelPrototype) -> int:
    """
    Spin of the ideal of norm 2c attached to p.

    With n the odd part of 2c this is ((n - 1)/2) mod 2, and
    spin_of_prototype(p) = (f + 1)/2 + epsilon0 (mod 2).
    """
    require_spin_residue(p.D)
    n = 2 * p.c
    while n % 2 == 0:
        n //= 2
    eps = ((n - 1) // 2) % 2
    if ((p.D.conductor + 1) // 2 + eps) % 2 != spin_of_prototype(p):
        raise ConsistencyError(f"ideal spin disagrees with prototype spin for {p.key}")
    return eps


def e2_by_spin(D) -> Tuple[int, int]:
    """
    Count proper prototypes on the spin 0 and spin 1 components.

    Non-square D splits evenly; for D = f^2 every point lies on spin (f+1)/2.

    Raises:
        NotApplicableError: Unless D ≡ 1 (mod 8) and D > 9.
        ConsistencyError: If the split violates the pattern above.
    """
    disc = as_discriminant(D)
    if not disc.is_split:
        raise NotApplicableError(f"W_{disc.value} has a single component")
    counts = [0, 0]
    for p in enumerate_prototypes(disc):
        counts[spin_of_prototype(p)] += 1
    if disc.is_square:
        expected = ((disc.conductor + 1) // 2) % 2
        if counts[1 - expected]:
            raise ConsistencyError(
                f"W_{disc.value}: prototypes found off the spin {expected} component"
            )
    elif counts[0] != counts[1]:
        raise ConsistencyError(f"W_{disc.value}: uneven spin split {tuple(counts)}")
    logger.debug("e2 split for D=%d: %s", disc.value, counts)
    return counts[0], counts[1]
