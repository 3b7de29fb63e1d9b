"""
Theta constants and the modular functions lambda, j and a at configurable precision.

All series are in q2 = exp(i*pi*tau) and stop once the next term falls below
2^(-precision_bits - 16).
"""

from typing import Callable, Iterator

from mpmath import MPContext

from core.errors import DomainError

# a(tau) = -2 - 256q - 6144q^2 - ... with q = exp(2*pi*i*tau)
A_Q_EXPANSION = (-2, -256, -6144, -76800, -671744, -4640256)


class BigComplexCtx:
    """
    An mpmath context pinned to a working precision.

    Args:
        precision_bits: Working precision, at least 64 bits.
    """

    def __init__(self, precision_bits: int = 256):
        if precision_bits < 64:
            raise DomainError(f"precision must be at least 64 bits, got {precision_bits}")
        self.precision_bits = precision_bits
        self.mp = MPContext()
        self.mp.prec = precision_bits

    @property
    def threshold(self):
        return self.mp.ldexp(self.mp.mpf(1), -self.precision_bits - 16)

    def with_precision(self, precision_bits: int) -> "BigComplexCtx":
        return BigComplexCtx(precision_bits)

    def tau(self, re, D: int, den: int):
        """(re + sqrt(-D)) / den as an mpc."""
        mp = self.mp
        return mp.mpc(mp.mpf(re), mp.sqrt(mp.mpf(D))) / den

    def __repr__(self) -> str:
        return f"BigComplexCtx(precision_bits={self.precision_bits})"


def _check_tau(tau, ctx: BigComplexCtx):
    tau = ctx.mp.mpc(tau)
    if tau.imag <= 0:
        raise DomainError(f"tau must have positive imaginary part, got {tau}")
    return tau


def _sum_series(terms: Iterator, ctx: BigComplexCtx):
    total = ctx.mp.mpc(0)
    eps = ctx.threshold
    for n, term in enumerate(terms):
        total += term
        if abs(term) < eps:
            return total
        if n > 100000:
            raise DomainError("theta series did not converge; tau is too close to the real axis")
    return total


def _exponent_terms(q2, exponent: Callable[[int], int], start: int, sign: int = 1) -> Iterator:
    n = start
    while True:
        yield (sign**n) * q2 ** exponent(n)
        n += 1


def _nome(tau, ctx: BigComplexCtx):
    mp = ctx.mp
    return mp.exp(mp.mpc(0, 1) * mp.pi * tau)


def theta2(tau, ctx: BigComplexCtx):
    """theta2 = 2 exp(i pi tau / 4) * sum_{n >= 0} q2^(n(n+1))."""
    tau = _check_tau(tau, ctx)
    mp = ctx.mp
    q2 = _nome(tau, ctx)
    series = _sum_series(_exponent_terms(q2, lambda n: n * (n + 1), 0), ctx)
    return 2 * mp.exp(mp.mpc(0, 1) * mp.pi * tau / 4) * series


def theta3(tau, ctx: BigComplexCtx):
    """theta3 = 1 + 2 * sum_{n >= 1} q2^(n^2)."""
    tau = _check_tau(tau, ctx)
    q2 = _nome(tau, ctx)
    return 1 + 2 * _sum_series(_exponent_terms(q2, lambda n: n * n, 1), ctx)


def theta4(tau, ctx: BigComplexCtx):
    """theta4 = 1 + 2 * sum_{n >= 1} (-1)^n q2^(n^2)."""
    tau = _check_tau(tau, ctx)
    q2 = _nome(tau, ctx)
    return 1 + 2 * _sum_series(_exponent_terms(q2, lambda n: n * n, 1, sign=-1), ctx)


def _lambda_pair(tau, ctx: BigComplexCtx):
    t3 = theta3(tau, ctx) ** 4
    lam = theta2(tau, ctx) ** 4 / t3
    one_minus = theta4(tau, ctx) ** 4 / t3
    return lam, one_minus


def lambda_std(tau, ctx: BigComplexCtx):
    """The classical lambda = theta2^4 / theta3^4, sending infinity, 0, 1 to 0, 1, infinity."""
    return _lambda_pair(tau, ctx)[0]


def a_of_tau(tau, ctx: BigComplexCtx):
    """
    a(tau) = -2 + lambda^2 / (lambda - 1) for the classical lambda.

    1 - lambda is taken as theta4^4 / theta3^4 so it keeps full relative
    precision near the cusp 0.

    Raises:
        DomainError: If lambda = 1 at working precision.
    """
    lam, one_minus = _lambda_pair(tau, ctx)
    if one_minus == 0:
        raise DomainError(f"lambda(tau) = 1 at tau = {tau}")
    return -2 - lam * lam / one_minus


def j_of_tau(tau, ctx: BigComplexCtx):
    """j = 256 (1 - lambda + lambda^2)^3 / (lambda^2 (1 - lambda)^2)."""
    lam, one_minus = _lambda_pair(tau, ctx)
    if lam == 0 or one_minus == 0:
        raise DomainError(f"j has a pole at tau = {tau}")
    return 256 * (1 - lam + lam * lam) ** 3 / (lam * lam * one_minus * one_minus)


def j_from_a(a):
    """j as a function of a: 256 (a + 1)^3 / (a + 2)."""
    if a == -2:
        raise DomainError("j(a) has a pole at a = -2")
    return 256 * (a + 1) ** 3 / (a + 2)


def j_cubic_residual(a, j):
    """a^3 + 3a^2 + (3 - j/256) a + 1 - j/128, which vanishes on the curve."""
    return a**3 + 3 * a**2 + (3 - j / 256) * a + 1 - j / 128


def sigma_involution(a):
    """
    The involution a -> (-2a + 12) / (a + 2) exchanging a(tau_c) and a(tau_b).

    Raises:
        DomainError: At a = -2.
    """
    if a == -2:
        raise DomainError("sigma is undefined at a = -2")
    return (-2 * a + 12) / (a + 2)


def a_series(q, terms: int = len(A_Q_EXPANSION)):
    """Truncated q-expansion of a."""
    return sum(c * q**k for k, c in enumerate(A_Q_EXPANSION[:terms]))
