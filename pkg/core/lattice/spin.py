"""
The spin structure on H1 of a D8 surface, modulo 2.

Vectors are 4-tuples (k1, k2, k3, k4) over Z/2 in the basis x1, x_i, x_b, x_bi,
where x_i and x_bi are the images of x1 and x_b under multiplication by i.
"""

import itertools
from dataclasses import dataclass
from typing import Callable, Iterator, Sequence, Tuple

from core.errors import ConsistencyError, DomainError
from core.models import PinwheelPrototype
from core.prototypes import require_spin_residue

Mod2Vector = Tuple[int, int, int, int]


def spin_q(k1: int, k2: int, k3: int, k4: int) -> int:
    """k1^2 + k2^2 + k1*k3 + k2*k4 + k3*k4 (mod 2)."""
    return (k1 * k1 + k2 * k2 + k1 * k3 + k2 * k4 + k3 * k4) % 2


def intersection_pairing(x: Sequence[int], y: Sequence[int]) -> int:
    """Polarization q(x + y) - q(x) - q(y) of spin_q, written out."""
    x1, x2, x3, x4 = x
    y1, y2, y3, y4 = y
    return (x1 * y3 + x3 * y1 + x2 * y4 + x4 * y2 + x3 * y4 + x4 * y3) % 2


def _reduce(v: Sequence[int]) -> Mod2Vector:
    if len(v) != 4:
        raise DomainError(f"expected a vector of length 4, got {tuple(v)}")
    return tuple(int(k) % 2 for k in v)  # type: ignore[return-value]


def j_action_mod2(v: Sequence[int]) -> Mod2Vector:
    """Multiplication by i modulo 2: x1 <-> x_i and x_b <-> x_bi."""
    k1, k2, k3, k4 = _reduce(v)
    return (k2, k1, k4, k3)


def all_vectors() -> Iterator[Mod2Vector]:
    return itertools.product((0, 1), repeat=4)  # type: ignore[return-value]


@dataclass(frozen=True)
class SpinForm:
    """A quadratic refinement of the intersection pairing on (Z/2)^4."""

    form: Callable[..., int] = spin_q

    def __call__(self, v: Sequence[int]) -> int:
        return self.form(*_reduce(v))

    def pairing(self, x: Sequence[int], y: Sequence[int]) -> int:
        return intersection_pairing(_reduce(x), _reduce(y))

    def is_refinement(self) -> bool:
        """Check q(x + y) = q(x) + q(y) + <x, y> over all pairs."""
        for x in all_vectors():
            for y in all_vectors():
                s = tuple((a + b) % 2 for a, b in zip(x, y))
                if self(s) != (self(x) + self(y) + self.pairing(x, y)) % 2:
                    return False
        return True


def arf(q: SpinForm, W: Tuple[Sequence[int], Sequence[int]]) -> int:
    """
    Arf invariant of q restricted to the plane spanned by W = (a, b).

    Args:
        q: The spin form.
        W: Two vectors spanning a plane on which the pairing is nondegenerate.

    Returns:
        q(a) * q(b) (mod 2), which does not depend on the symplectic basis.

    Raises:
        DomainError: If <a, b> = 0, so the plane is degenerate.
    """
    a, b = W
    if q.pairing(a, b) != 1:
        raise DomainError(f"span of {tuple(a)} and {tuple(b)} is not symplectic")
    return (q(a) * q(b)) % 2


def structure_vector(p: PinwheelPrototype) -> Mod2Vector:
    """
    The class v = ((f + c)/2) x1 + ((c + e)/2) x_i + x_bi attached to p.

    Raises:
        ConsistencyError: If 2c is not 2 (mod 4).
    """
    require_spin_residue(p.D)
    x = 2 * p.c
    if x % 4 != 2:
        raise ConsistencyError(f"prototype {p.key}: x = 2c = {x} is not 2 (mod 4)")
    f = p.D.conductor
    return _reduce(((f + p.c) // 2, (p.c + p.e) // 2, 0, 1))


def spin_via_structure(p: PinwheelPrototype) -> int:
    """
    Spin of p computed from the spin form: q(v) for v = structure_vector(p).

    Equals Arf(q) on span(v, Jv), and must agree with spin_of_prototype(p).
    """
    q = SpinForm()
    v = structure_vector(p)
    value = q(v)
    if arf(q, (v, j_action_mod2(v))) != value:
        raise ConsistencyError(f"prototype {p.key}: Arf invariant disagrees with q(v)")
    return value
