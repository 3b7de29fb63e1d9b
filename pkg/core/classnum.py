"""
Class numbers of imaginary quadratic orders.

Forms ax^2 + bxy + cy^2 of discriminant C < 0 are enumerated by a, then b with
|b| <= a and b ≡ C (mod 2); c is derived. Reduced primitive forms are counted.
"""

import math
from fractions import Fraction
from functools import lru_cache
from typing import List

from core.errors import DomainError
from core.models import QuadraticForm


def _check_disc(C: int) -> None:
    if C >= 0 or C % 4 not in (0, 1):
        raise DomainError(
            f"class numbers need a negative discriminant C ≡ 0,1 (mod 4), got {C}"
        )


def is_reduced(form: QuadraticForm) -> bool:
    a, b, c = form.a, form.b, form.c
    if not abs(b) <= a <= c:
        return False
    if (abs(b) == a or a == c) and b < 0:
        return False
    return True


def is_primitive(form: QuadraticForm) -> bool:
    return math.gcd(math.gcd(form.a, form.b), form.c) == 1


@lru_cache(maxsize=8192)
def _reduced_forms(C: int) -> tuple:
    forms = []
    a = 1
    while 3 * a * a <= -C:
        for b in range(-a + 1 if (a + C) % 2 else -a, a + 1, 2):
            num = b * b - C
            if num % (4 * a):
                continue
            form = QuadraticForm(a, b, num // (4 * a))
            if is_reduced(form) and is_primitive(form):
                forms.append(form)
        a += 1
    return tuple(forms)


def reduced_forms(C: int) -> List[QuadraticForm]:
    """
    List the reduced primitive forms of discriminant C.

    Args:
        C: Negative discriminant, C ≡ 0, 1 (mod 4).

    Returns:
        Forms sorted by (a, b).

    Raises:
        DomainError: If C >= 0 or C ≡ 2, 3 (mod 4).
    """
    _check_disc(C)
    return list(_reduced_forms(C))


def class_number(C: int) -> int:
    """Number of reduced primitive forms of discriminant C, i.e. h(C)."""
    _check_disc(C)
    return len(_reduced_forms(C))


def weighted_class_number(C: int) -> Fraction:
    """
    h(C) weighted by 2/|O_C^x|: h/3 at C = -3, h/2 at C = -4, h otherwise.
    """
    h = class_number(C)
    if C == -3:
        return Fraction(h, 3)
    if C == -4:
        return Fraction(h, 2)
    return Fraction(h)
