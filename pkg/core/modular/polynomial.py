"""
The polynomials f_D(t) whose roots are the values of a at the prototype points.

f_D(t) = prod over (e, c, b) in E(D) of (t - a(tau_c)) (t - a(tau_b)), with
tau_c = (e + sqrt(-D))/(2c) and tau_b = (-e + sqrt(-D))/(2b). The product is
formed numerically and every coefficient is recovered as a rational with a
small power-of-two denominator.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple

import sympy
from sympy.parsing.sympy_parser import (
    convert_xor,
    implicit_multiplication_application,
    parse_expr,
    standard_transformations,
)

from core.arith import as_discriminant
from core.errors import DomainError, NotApplicableError, PrecisionError
from core.modular.bigcomplex import BigComplexCtx, a_of_tau, sigma_involution
from core.prototypes import enumerate_prototypes

logger = logging.getLogger(__name__)

T = sympy.Symbol("t")
MAX_DENOMINATOR = 2**16

_TRANSFORMATIONS = standard_transformations + (implicit_multiplication_application, convert_xor)


@dataclass(frozen=True)
class RationalPoly:
    """A polynomial in t with exact rational coefficients, lowest degree first."""

    coeffs: Tuple[Fraction, ...]

    def __post_init__(self) -> None:
        coeffs = list(self.coeffs)
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def from_sympy(cls, poly: sympy.Poly) -> "RationalPoly":
        coeffs = [sympy.Rational(c) for c in reversed(poly.all_coeffs())]
        return cls(tuple(Fraction(int(c.p), int(c.q)) for c in coeffs))

    @classmethod
    def from_expression(cls, text: str) -> "RationalPoly":
        """
        Parse text such as "(t-14) (t+1)" or "2t^2+73t+170".

        Raises:
            DomainError: If the text is not a polynomial in t over Q.
        """
        try:
            expr = parse_expr(text, local_dict={"t": T}, transformations=_TRANSFORMATIONS)
            poly = sympy.Poly(sympy.expand(expr), T, domain="QQ")
        except (SyntaxError, TypeError, ValueError, sympy.PolynomialError) as e:
            raise DomainError(f"cannot read {text!r} as a polynomial in t") from e
        return cls.from_sympy(poly)

    def to_sympy(self) -> sympy.Poly:
        return sympy.Poly(
            [sympy.Rational(c.numerator, c.denominator) for c in reversed(self.coeffs)],
            T,
            domain="QQ",
        )

    def monic(self) -> "RationalPoly":
        lead = self.coeffs[-1]
        if lead == 0:
            raise DomainError("the zero polynomial has no monic form")
        return RationalPoly(tuple(c / lead for c in self.coeffs))

    def primitive(self) -> "RationalPoly":
        """Integer multiple with content 1 and positive leading coefficient."""
        _, integral = self.to_sympy().clear_denoms(convert=True)
        _, prim = integral.primitive()
        if prim.LC() < 0:
            prim = -prim
        return RationalPoly.from_sympy(prim)

    def radical(self) -> "RationalPoly":
        """Monic squarefree part."""
        return RationalPoly.from_sympy(self.to_sympy().sqf_part()).monic()

    def factors(self) -> List[Tuple["RationalPoly", int]]:
        """Irreducible factors over Q in primitive form, with multiplicities."""
        _, factor_list = self.to_sympy().factor_list()
        found = [(RationalPoly.from_sympy(f).primitive(), k) for f, k in factor_list]
        return sorted(found, key=lambda fk: (fk[0].degree, fk[0].coeffs))

    @staticmethod
    def horner(coeffs: Sequence, x):
        total = 0
        for c in reversed(coeffs):
            total = total * x + c
        return total

    def evaluate(self, x):
        return self.horner(self.coeffs, x)

    def to_text(self) -> str:
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0 and self.degree > 0:
                continue
            var = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            if k == 0:
                body = str(abs(c))
            elif abs(c) == 1:
                body = var
            elif c.denominator == 1:
                body = f"{abs(c)}{var}"
            else:
                body = f"{abs(c)}*{var}"
            sign = "-" if c < 0 else "+"
            terms.append(body if not terms and sign == "+" else f"{sign}{body}")
        return "".join(terms)

    def __str__(self) -> str:
        return self.to_text()


def _product_coefficients(roots: Sequence, ctx: BigComplexCtx) -> list:
    coeffs = [ctx.mp.mpc(1)]
    for r in roots:
        shifted = [ctx.mp.mpc(0)] + coeffs
        for i, c in enumerate(coeffs):
            shifted[i] -= r * c
        coeffs = shifted
    return coeffs


def reconstruct_rational(x, ctx: BigComplexCtx) -> Fraction:
    """
    Nearest rational with denominator at most 2^16, which must be a power of two.

    Raises:
        PrecisionError: If the residual, or the imaginary part, is not below
            2^(-precision_bits/4), or the denominator is not a power of two.
    """
    mp = ctx.mp
    tolerance = mp.ldexp(mp.mpf(1), -(ctx.precision_bits // 4))
    x = mp.mpc(x)
    if abs(x.imag) >= tolerance:
        raise PrecisionError(f"coefficient {x} is not real at {ctx.precision_bits} bits")
    scale = 2 ** (ctx.precision_bits // 2)
    approx = Fraction(int(mp.nint(x.real * scale)), scale).limit_denominator(MAX_DENOMINATOR)
    residual = abs(x.real - mp.mpf(approx.numerator) / approx.denominator)
    if residual >= tolerance:
        raise PrecisionError(
            f"coefficient {mp.nstr(x.real, 20)} has no rational with denominator <= "
            f"{MAX_DENOMINATOR} within 2^-{ctx.precision_bits // 4}"
        )
    if approx.denominator & (approx.denominator - 1):
        raise PrecisionError(
            f"coefficient {approx} has a denominator that is not a power of two "
            f"at {ctx.precision_bits} bits"
        )
    return approx


def prototype_points(D, ctx: BigComplexCtx) -> List[Tuple[object, object]]:
    """
    (a(tau_c), a(tau_b)) for every proper prototype of D.

    Raises:
        PrecisionError: If a(tau_b) is not sigma(a(tau_c)) at working precision.
    """
    disc = as_discriminant(D)
    mp = ctx.mp
    tolerance = mp.ldexp(mp.mpf(1), -(ctx.precision_bits // 4))
    points = []
    for p in enumerate_prototypes(disc):
        a_c = a_of_tau(ctx.tau(p.tau_c[0], disc.value, p.tau_c[1]), ctx)
        a_b = a_of_tau(ctx.tau(p.tau_b[0], disc.value, p.tau_b[1]), ctx)
        if abs(sigma_involution(a_c) - a_b) >= tolerance * max(1, abs(a_b)):
            raise PrecisionError(
                f"sigma(a(tau_c)) != a(tau_b) for prototype {p.key} of D={disc.value}"
            )
        points.append((a_c, a_b))
    return points


def fD_polynomial(D, ctx: BigComplexCtx) -> RationalPoly:
    """
    The defining product f_D, monic of degree 2 #E(D).

    Args:
        D: Discriminant with at least one proper prototype.
        ctx: Working precision.

    Returns:
        The defining product with exact coefficients.

    Raises:
        NotApplicableError: If E(D) is empty.
        PrecisionError: If rational reconstruction fails at this precision.
    """
    disc = as_discriminant(D)
    points = prototype_points(disc, ctx)
    if not points:
        raise NotApplicableError(f"E({disc.value}) is empty, so f_{disc.value} is undefined")
    roots = [a for pair in points for a in pair]
    coeffs = [reconstruct_rational(c, ctx) for c in _product_coefficients(roots, ctx)]
    poly = RationalPoly(tuple(coeffs))
    exact = [ctx.mp.mpf(c.numerator) / c.denominator for c in poly.coeffs]
    for r in roots:
        value = RationalPoly.horner(exact, r)
        scale = max(1, abs(r)) ** poly.degree
        if abs(value) >= ctx.mp.ldexp(scale, -(ctx.precision_bits // 4)):
            raise PrecisionError(f"reconstructed f_{disc.value} does not vanish at {r}")
    return poly


def fd_with_retry(D, settings) -> RationalPoly:
    """
    fD_polynomial at settings.precision_bits, doubling on PrecisionError.

    Raises:
        PrecisionError: If settings.max_precision_bits is reached without success.
    """
    bits = settings.precision_bits
    while True:
        try:
            return fD_polynomial(D, BigComplexCtx(bits))
        except PrecisionError as e:
            if bits * 2 > settings.max_precision_bits:
                raise PrecisionError(
                    f"f_{int(D)} still fails at {bits} bits (limit {settings.max_precision_bits})"
                ) from e
            logger.warning("f_%d: %s; retrying at %d bits", int(D), e, bits * 2)
            bits *= 2
