"""
Exact orbifold Euler characteristics.

For non-square D everything is a rational multiple of chi(X_D), which in turn
comes from Siegel's formula for zeta_{D0}(-1). Square discriminants use the
closed forms in f and F(D) directly, and chi(X_D) is never formed for them.
"""

import logging
import math
from fractions import Fraction
from typing import Tuple

from core.arith import as_discriminant, is_fundamental, kronecker, prime_divisors, sigma1
from core.errors import ConsistencyError, DomainError, NotApplicableError
from core.models import ChiRecord, Discriminant

logger = logging.getLogger(__name__)


def zeta_minus1(D0: int) -> Fraction:
    """
    Siegel's formula: zeta_{D0}(-1) = (1/60) * sum sigma((D0 - e^2)/4).

    The sum runs over signed e with e^2 < D0 and e ≡ D0 (mod 2).

    Args:
        D0: Fundamental discriminant > 1.

    Returns:
        The exact value.

    Raises:
        DomainError: If D0 is not a non-square fundamental discriminant.
    """
    if D0 <= 1 or not is_fundamental(D0) or math.isqrt(D0) ** 2 == D0:
        raise DomainError(f"zeta_minus1 needs a non-square fundamental discriminant, got {D0}")
    total = 0
    e = D0 % 2
    while e * e < D0:
        term = sigma1((D0 - e * e) // 4)
        total += term if e == 0 else 2 * term
        e += 2
    return Fraction(total, 60)


def conductor_factor(D) -> Fraction:
    """F(D): product over primes p | f of (1 - (D0|p) / p^2)."""
    disc = as_discriminant(D)
    F = Fraction(1)
    if disc.conductor == 1:
        return F
    for p in prime_divisors(disc.conductor):
        F *= 1 - Fraction(kronecker(disc.fundamental, p), p * p)
    return F


def _require_non_square(disc: Discriminant, what: str) -> None:
    if disc.is_square:
        raise NotApplicableError(f"{what} is not defined for square D = {disc.value}")


def chi_XD(D) -> Fraction:
    disc = as_discriminant(D)
    _require_non_square(disc, "chi(X_D)")
    f = disc.conductor
    return 2 * f**3 * zeta_minus1(disc.fundamental) * conductor_factor(disc)


def chi_WD(D) -> Fraction:
    """
    chi(W_D): -(9/2) chi(X_D) for non-square D, -f^2 (f-2) F(D) / 16 for D = f^2.
    """
    disc = as_discriminant(D)
    if not disc.is_square:
        return Fraction(-9, 2) * chi_XD(disc)
    f = disc.conductor
    return Fraction(-(f * f) * (f - 2), 16) * conductor_factor(disc)


def chi_WD_components(D) -> Tuple[Fraction, Fraction]:
    """
    (chi(W_D^0), chi(W_D^1)) for D ≡ 1 (mod 8), D > 9.

    Raises:
        NotApplicableError: For any other D.
    """
    disc = as_discriminant(D)
    if not disc.is_split:
        raise NotApplicableError(f"W_{disc.value} is not split into spin components")
    if not disc.is_square:
        half = chi_WD(disc) / 2
        return half, half
    f = disc.conductor
    F = conductor_factor(disc)
    return (
        Fraction(-(f * f) * (f - 1), 32) * F,
        Fraction(-(f * f) * (f - 3), 32) * F,
    )


def chi_PD(D) -> Fraction:
    disc = as_discriminant(D)
    _require_non_square(disc, "chi(P_D)")
    return Fraction(-5, 2) * chi_XD(disc)


def chi_SD(D) -> Fraction:
    """chi(S_D) = -f^2 F(D) / 12 for D = f^2; S_D is empty otherwise."""
    disc = as_discriminant(D)
    if not disc.is_square:
        return Fraction(0)
    return Fraction(-(disc.conductor**2), 12) * conductor_factor(disc)


def chi_record(D) -> ChiRecord:
    """
    Collect every Euler characteristic of D and check the relations between them.

    Raises:
        ConsistencyError: If chi(W) != chi(P) - 2 chi(X) - chi(S) or the spin
            components do not sum to chi(W).
    """
    disc = as_discriminant(D)
    chi_w = chi_WD(disc)
    chi_s = chi_SD(disc)
    chi_x = chi_p = None
    if not disc.is_square:
        chi_x = chi_XD(disc)
        chi_p = chi_PD(disc)
        if chi_w != chi_p - 2 * chi_x - chi_s:
            raise ConsistencyError(f"D={disc.value}: chi(W) != chi(P) - 2 chi(X) - chi(S)")
    components = chi_WD_components(disc) if disc.is_split else None
    if components is not None and sum(components) != chi_w:
        raise ConsistencyError(
            f"D={disc.value}: spin components {components} do not sum to chi(W) = {chi_w}"
        )
    logger.debug("chi record for D=%d: chi(W)=%s", disc.value, chi_w)
    return ChiRecord(
        chi_WD=chi_w, chi_SD=chi_s, chi_XD=chi_x, chi_PD=chi_p, components=components
    )
