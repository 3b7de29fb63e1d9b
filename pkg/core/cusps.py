"""
Cusps of W_D through the product locus P_D.

P_D is a union of modular curves Y0(m), one for each (e, l, m) with
D = e^2 + 4 l^2 m and gcd(e, l) = 1, where (e, l, m) and (-e, l, m) are glued.
For non-square D every cusp of W_D is a two-cylinder cusp and C(W_D) = C(P_D).
The e = 0 component is glued to itself by the Fricke involution.
"""

import logging
import math
from functools import lru_cache
from typing import List, Tuple

from core.arith import as_discriminant, divisors, euler_phi, moebius
from core.errors import ConsistencyError, DomainError, NotApplicableError
from core.models import Cusp, PDComponent

logger = logging.getLogger(__name__)

INFINITY = (1, 0)


def pd_components(D) -> List[PDComponent]:
    """
    Components of P_D, one per glued pair, sorted by (e, l).

    Args:
        D: Discriminant (int or Discriminant).

    Returns:
        All (e, l, m) with e >= 0, l, m > 0, gcd(e, l) = 1 and D = e^2 + 4 l^2 m.
    """
    value = as_discriminant(D).value
    components = []
    e = value % 2
    while e * e < value:
        rest = value - e * e
        if rest % 4 == 0:
            rest //= 4
            l = 1  # noqa: E741
            while l * l <= rest:
                if rest % (l * l) == 0 and math.gcd(e, l) == 1:
                    components.append(PDComponent(e=e, l=l, m=rest // (l * l)))
                l += 1  # noqa: E741
        e += 2
    return components


def y0_cusp_count(m: int) -> int:
    """Number of cusps of Y0(m): sum over d | m of phi(gcd(d, m/d))."""
    if m < 1:
        raise DomainError(f"level must be positive, got {m}")
    return sum(euler_phi(math.gcd(d, m // d)) for d in divisors(m))


def _normalize(p: int, q: int, N: int) -> Cusp:
    if p == 0 and q == 0:
        raise DomainError("0/0 is not a cusp")
    if q < 0 or (q == 0 and p < 0):
        p, q = -p, -q
    g = math.gcd(p, q)
    p, q = p // g, q // g
    if q == 0:
        p = 1
    return Cusp(p=p, q=q, level=N)


def _s_of(c: Cusp) -> int:
    if c.q == 0:
        return 1
    if c.q == 1:
        return 0
    return pow(c.p % c.q, -1, c.q)


def cusps_equivalent(N: int, c1: Cusp, c2: Cusp) -> bool:
    """
    Gamma0(N)-equivalence of two cusps.

    p1/q1 ~ p2/q2 iff s1*q2 ≡ s2*q1 (mod gcd(q1*q2, N)) with s_j*p_j ≡ 1 (mod q_j).
    """
    a = _normalize(c1.p, c1.q, N)
    b = _normalize(c2.p, c2.q, N)
    modulus = math.gcd(a.q * b.q, N)
    return (_s_of(a) * b.q - _s_of(b) * a.q) % modulus == 0


@lru_cache(maxsize=4096)
def _cusp_classes(N: int) -> Tuple[Cusp, ...]:
    reps = []
    for d in divisors(N):
        if d == N:
            reps.append(Cusp(*INFINITY, level=N))
            continue
        g = math.gcd(d, N // d)
        for x in range(g):
            if math.gcd(x, g) != 1:
                continue
            a = x
            while math.gcd(a, d) != 1:
                a += g
            reps.append(Cusp(p=a, q=d, level=N))
    return tuple(sorted(reps, key=lambda c: (c.q, c.p)))


def cusp_classes(N: int) -> List[Cusp]:
    """
    One representative per Gamma0(N)-class, sorted by (q, p); infinity comes first.

    Raises:
        DomainError: If N < 1.
    """
    if N < 1:
        raise DomainError(f"level must be positive, got {N}")
    return list(_cusp_classes(N))


def cusp_canonicalize(N: int, c: Cusp) -> Cusp:
    """
    The least representative in cusp_classes(N) equivalent to c.

    Raises:
        ConsistencyError: If no representative matches.
    """
    for rep in cusp_classes(N):
        if cusps_equivalent(N, rep, c):
            return rep
    raise ConsistencyError(f"cusp {c} matches no class representative at level {N}")


def fricke_image(m: int, c: Cusp) -> Cusp:
    """w_m(p/q) = -q/(m p), reduced. Swaps 0 and infinity."""
    return _normalize(-c.q, m * c.p, m)


def fricke_orbits(m: int) -> int:
    """
    Number of orbits of the Fricke involution on the cusps of Y0(m).

    Raises:
        ConsistencyError: If w_m does not act as an involution on classes.
    """
    classes = cusp_classes(m)
    fixed = 0
    for c in classes:
        image = cusp_canonicalize(m, fricke_image(m, c))
        if cusp_canonicalize(m, fricke_image(m, image)) != c:
            raise ConsistencyError(f"Fricke w_{m} is not an involution at cusp {c}")
        fixed += image == c
    if (len(classes) + fixed) % 2:
        raise ConsistencyError(f"odd orbit count for w_{m}")
    return (len(classes) + fixed) // 2


def cusp_count_pd(D) -> int:
    """C(P_D): Y0(m) cusps for e > 0, Fricke orbits for the self-glued e = 0 component."""
    total = 0
    for comp in pd_components(D):
        total += fricke_orbits(comp.m) if comp.e == 0 else y0_cusp_count(comp.m)
    return total


def cusp_count_wd(D) -> int:
    """
    C(W_D) for non-square D.

    Raises:
        NotApplicableError: If D is a square.
    """
    disc = as_discriminant(D)
    if disc.is_square:
        raise NotApplicableError(f"cusps of W_{disc.value} are only known from reference data")
    return cusp_count_pd(disc)


def cusp_split(D) -> Tuple[int, int]:
    """
    Cusps per spin component, for non-square D ≡ 1 (mod 8), D > 9.

    Raises:
        NotApplicableError: Outside that range.
        ConsistencyError: If the total is odd.
    """
    disc = as_discriminant(D)
    if disc.is_square or not disc.is_split:
        raise NotApplicableError(f"no even cusp split for D = {disc.value}")
    total = cusp_count_wd(disc)
    if total % 2:
        raise ConsistencyError(f"C(W_{disc.value}) = {total} is odd but must split evenly")
    return total // 2, total // 2


def one_cylinder_count(f: int) -> int:
    """
    Cyclic classes of triples (a, b, c) of positive integers with a + b + c = f
    and gcd(a, b, c) = 1.
    """
    if f < 1:
        raise DomainError(f"f must be positive, got {f}")
    ordered = sum(moebius(d) * math.comb(f // d - 1, 2) for d in divisors(f))
    numerator = ordered + (2 if f == 3 else 0)
    if numerator % 3:
        raise ConsistencyError(f"Burnside count for f={f} is not divisible by 3")
    return numerator // 3


def two_cyl_spin_difference(f: int) -> int:
    """Sum of phi(gcd(b, c)) over b + c = f, 0 < c < b."""
    if f < 1 or f % 2 == 0:
        raise DomainError(f"f must be a positive odd integer, got {f}")
    return sum(euler_phi(math.gcd(f - c, c)) for c in range(1, (f + 1) // 2))


def count_pd_components(D) -> int:
    """
    h0(P_D), checked against h0(P_D) <= D^(3/4) + 150.

    Raises:
        ConsistencyError: If the bound fails.
    """
    value = as_discriminant(D).value
    count = len(pd_components(value))
    if count > value**0.75 + 150:
        raise ConsistencyError(f"h0(P_{value}) = {count} exceeds D^(3/4) + 150")
    logger.debug("P_%d has %d components", value, count)
    return count
