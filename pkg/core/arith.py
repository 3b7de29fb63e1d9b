"""
Elementary number theory used by every other module.

Divisor sums, totients and Moebius values come from sympy; this module adds
domain checks, plain ``int`` results and the discriminant bookkeeping
D = f^2 * D0.
"""

import math
from functools import lru_cache
from typing import Iterator, List

import sympy
from sympy.functions.combinatorial.numbers import jacobi_symbol
from sympy.ntheory import factorint

from core.errors import DomainError, InvalidDiscriminantError
from core.models import Discriminant


def _require_positive(n: int, name: str = "n") -> None:
    if n <= 0:
        raise DomainError(f"{name} must be a positive integer, got {n}")


@lru_cache(maxsize=65536)
def _divisors(n: int) -> tuple:
    return tuple(int(d) for d in sympy.divisors(n))


def divisors(n: int) -> List[int]:
    """
    Return the positive divisors of n in ascending order.

    Raises:
        DomainError: If n <= 0.
    """
    _require_positive(n)
    return list(_divisors(n))


def sigma1(n: int) -> int:
    """Sum of the positive divisors of n."""
    _require_positive(n)
    return int(sympy.divisor_sigma(n, 1))


def euler_phi(n: int) -> int:
    _require_positive(n)
    return int(sympy.totient(n))


def moebius(n: int) -> int:
    _require_positive(n)
    return int(sympy.mobius(n))


def gcd(a: int, b: int) -> int:
    return math.gcd(a, b)


def prime_divisors(n: int) -> List[int]:
    _require_positive(n)
    return sorted(int(p) for p in factorint(n))


def is_square(n: int) -> bool:
    return n >= 0 and math.isqrt(n) ** 2 == n


def is_squarefree(n: int) -> bool:
    if n == 0:
        return False
    return all(k == 1 for k in factorint(abs(n)).values())


def squarefree_part(n: int) -> int:
    """
    Return the signed squarefree kernel s of n, so that n = s * m^2.

    Raises:
        DomainError: If n == 0.
    """
    if n == 0:
        raise DomainError("squarefree part of 0 is undefined")
    sign = -1 if n < 0 else 1
    s = 1
    for p, k in factorint(abs(n)).items():
        if k % 2:
            s *= int(p)
    return sign * s


def kronecker(a: int, p: int) -> int:
    """
    Kronecker symbol (a|p) for a prime p.

    For p = 2 the mod-8 rule applies: 0 if a is even, +1 if a ≡ ±1 (mod 8)
    and -1 if a ≡ ±3 (mod 8).

    Raises:
        DomainError: If p is not prime.
    """
    if p < 2 or not sympy.isprime(p):
        raise DomainError(f"kronecker symbol needs a prime modulus, got {p}")
    if p == 2:
        if a % 2 == 0:
            return 0
        return 1 if a % 8 in (1, 7) else -1
    return int(jacobi_symbol(a % p, p))


def is_fundamental(d: int) -> bool:
    """
    Whether d is a fundamental discriminant (d = 1 counts, by convention).

    Accepts 1, squarefree d ≡ 1 (mod 4), and 4m with m ≡ 2, 3 (mod 4) squarefree.
    """
    if d == 1:
        return True
    if d % 4 == 1:
        return is_squarefree(d)
    if d % 4 == 0:
        m = d // 4
        return m % 4 in (2, 3) and is_squarefree(m)
    return False


def is_valid_discriminant(D: int) -> bool:
    return D >= 5 and D % 4 in (0, 1)


@lru_cache(maxsize=65536)
def discriminant_split(D: int) -> Discriminant:
    """
    Split D as f^2 * D0 with D0 fundamental.

    Square discriminants use D0 = 1.

    Args:
        D: Candidate discriminant.

    Returns:
        The populated Discriminant.

    Raises:
        InvalidDiscriminantError: If D < 5 or D ≡ 2, 3 (mod 4).
    """
    if not is_valid_discriminant(D):
        raise InvalidDiscriminantError(D)
    # Largest f first; the fundamental part is unique.
    for f in range(math.isqrt(D), 0, -1):
        if D % (f * f):
            continue
        d0 = D // (f * f)
        if d0 % 4 in (0, 1) and is_fundamental(d0):
            return Discriminant(value=D, conductor=f, fundamental=d0, is_square=d0 == 1)
    raise InvalidDiscriminantError(D)


def as_discriminant(D) -> Discriminant:
    """Accept either an int or an already split Discriminant."""
    if isinstance(D, Discriminant):
        return D
    return discriminant_split(int(D))


def valid_discriminants(start: int, stop: int) -> Iterator[int]:
    """Valid discriminants in the inclusive range [start, stop], ascending."""
    for D in range(max(start, 5), stop + 1):
        if D % 4 in (0, 1):
            yield D
