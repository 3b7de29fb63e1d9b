"""Tests for the lattice oracles and the spin form"""
from fractions import Fraction

import pytest
import sympy

from core.arith import as_discriminant
from core.errors import DomainError
from core.lattice import (
    D8Lattice,
    D12Lattice,
    QuadraticTower,
    SpinForm,
    arf,
    automorphism_matrix,
    gram_matrix,
    intersection_pairing,
    is_integral,
    j_action_mod2,
    prototype_tau,
    real_mult_generator,
    s_integrality_criterion,
    spin_q,
    spin_via_structure,
    structure_vector,
    tower_for_discriminant,
)
from core.lattice.qtower import imaginary_quadratic
from core.prototypes import enumerate_prototypes, spin_of_prototype

STANDARD_FORM = sympy.Matrix([[0, 0, 1, 0], [0, 0, 0, 1], [-1, 0, 0, 0], [0, -1, 0, 0]])


@pytest.fixture
def tau_i():
    """tau = i in Q(sqrt3, sqrt-1)"""
    return imaginary_quadratic(tower_for_discriminant(4), 0, 4, 2)


@pytest.fixture
def tau_17():
    """tau_c of the prototype (-1, 3, 3) of D = 17"""
    p = next(p for p in enumerate_prototypes(17) if p.key == (-1, 3, 3))
    return prototype_tau(p)


class TestQuadraticTower:
    """Test exact biquadratic arithmetic"""

    def test_inverse(self):
        """Test x * x^-1 = 1"""
        tower = QuadraticTower(3, -17)
        x = tower(1, 2, Fraction(1, 3), -1)
        assert x * x.inverse() == tower.one

    def test_conjugations(self):
        """Test that conj2 is complex conjugation of sqrt(d2)"""
        tower = QuadraticTower(3, -1)
        x = tower(1, 1, 1, 1)
        assert x.conj2() == tower(1, 1, -1, -1)
        assert x.conj1() == tower(1, -1, 1, -1)

    def test_sqrt_squares(self):
        """Test sqrt(d1)^2 = d1 and sqrt(d2)^2 = d2"""
        tower = QuadraticTower(3, -7)
        assert tower.sqrt_d1 * tower.sqrt_d1 == tower(3)
        assert tower.sqrt_d2 * tower.sqrt_d2 == tower(-7)

    def test_not_a_field(self):
        """Test that a degenerate tower is rejected"""
        with pytest.raises(DomainError):
            QuadraticTower(3, 3)

    def test_tau_in_upper_half_plane(self, tau_17):
        """Test the sign of the imaginary part"""
        assert tau_17.imag_sign() == 1
        assert (-tau_17).imag_sign() == -1


class TestD8Lattice:
    """Test the D8 lattice oracle"""

    def test_gram_is_standard(self, tau_i, tau_17):
        """Test the polarization is the standard symplectic form"""
        assert gram_matrix(D8Lattice(tau_i)) == STANDARD_FORM
        assert gram_matrix(D8Lattice(tau_17)) == STANDARD_FORM

    def test_j_is_integral_and_symplectic(self, tau_17):
        """Test that multiplication by i preserves the lattice and the form"""
        L = D8Lattice(tau_17)
        J = automorphism_matrix(L, "J")
        G = gram_matrix(L)
        assert is_integral(J)
        assert J * G * J.T == G
        assert J * J == -sympy.eye(4)

    def test_r_is_an_involution(self, tau_i):
        """Test the reflection (a, b) -> (a, -b)"""
        L = D8Lattice(tau_i)
        r = automorphism_matrix(L, "r")
        assert r * r == sympy.eye(4)
        assert r * gram_matrix(L) * r.T == gram_matrix(L)

    def test_unknown_map(self, tau_i):
        """Test that a map of the other family is rejected"""
        with pytest.raises(DomainError):
            automorphism_matrix(D8Lattice(tau_i), "Z")

    def test_lower_half_plane_rejected(self, tau_i):
        """Test that Im(tau) <= 0 is a domain error"""
        with pytest.raises(DomainError):
            D8Lattice(-tau_i)


class TestD12Lattice:
    """Test the D12 lattice oracle"""

    def test_z_has_order_six(self, tau_17):
        """Test the rotation by 60 degrees"""
        L = D12Lattice(tau_17)
        Z = automorphism_matrix(L, "Z")
        assert is_integral(Z)
        assert Z**3 == -sympy.eye(4)
        assert Z * gram_matrix(L) * Z.T == gram_matrix(L)

    def test_r_preserves(self, tau_i):
        """Test the reflection on the D12 lattice"""
        L = D12Lattice(tau_i)
        r = automorphism_matrix(L, "r")
        assert r * r == sympy.eye(4)

    def test_needs_sqrt3(self):
        """Test that a tower without sqrt(3) is rejected"""
        tower = QuadraticTower(2, -1)
        with pytest.raises(DomainError):
            D12Lattice(tower(0, 0, 1))


class TestRealMultiplication:
    """Test the real multiplication generator"""

    def test_matches_criterion(self):
        """Test that S is integral exactly when the divisibility criterion holds"""
        checked = 0
        for D in (5, 8, 12, 13, 17, 20, 21, 24):
            for k in (1, 2, 3):
                for c in range(1, 13):
                    for e in range(-c, c + 1):
                        if (k * k * D + e * e) % (2 * c):
                            continue
                        S = real_mult_generator(D, e, k, c)
                        assert is_integral(S) == s_integrality_criterion(D, e, k, c)
                        checked += 1
        assert checked > 50

    def test_prototype_gives_integral_generator(self):
        """Test k = 1 at a prototype"""
        assert is_integral(real_mult_generator(17, -1, 1, 3))

    def test_non_integral_b(self):
        """Test that a non-integral b is a domain error"""
        with pytest.raises(DomainError):
            real_mult_generator(17, 0, 1, 3)

    def test_bad_parameters(self):
        """Test c <= 0 and k <= 0"""
        with pytest.raises(DomainError):
            real_mult_generator(17, -1, 0, 3)
        with pytest.raises(DomainError):
            real_mult_generator(17, -1, 1, 0)


class TestSpinForm:
    """Test the mod 2 spin form"""

    @pytest.mark.parametrize(
        "v,expected", [((0, 0, 0, 0), 0), ((1, 0, 0, 0), 1), ((0, 0, 1, 0), 0), ((0, 1, 0, 0), 1)]
    )
    def test_values(self, v, expected):
        """Test q on basis vectors"""
        assert spin_q(*v) == expected

    def test_is_refinement(self):
        """Test q(x + y) = q(x) + q(y) + <x, y>"""
        assert SpinForm().is_refinement()

    def test_pairing_is_symmetric(self):
        """Test the polarized form"""
        assert intersection_pairing((1, 0, 0, 0), (0, 0, 1, 0)) == 1
        assert intersection_pairing((0, 0, 1, 0), (1, 0, 0, 0)) == 1
        assert intersection_pairing((1, 0, 0, 0), (0, 1, 0, 0)) == 0

    def test_arf_basis_independent(self):
        """Test the Arf invariant on two bases of one plane"""
        q = SpinForm()
        a, b = (1, 0, 0, 0), (0, 0, 1, 0)
        a_plus_b = (1, 0, 1, 0)
        assert arf(q, (a, b)) == 0
        assert arf(q, (a, a_plus_b)) == 0

    def test_arf_degenerate(self):
        """Test that an isotropic plane is rejected"""
        with pytest.raises(DomainError):
            arf(SpinForm(), ((1, 0, 0, 0), (0, 1, 0, 0)))

    def test_j_action(self):
        """Test multiplication by i modulo 2"""
        assert j_action_mod2((1, 0, 0, 1)) == (0, 1, 1, 0)
        assert j_action_mod2((3, 2, 5, 4)) == (0, 1, 0, 1)


class TestSpinViaStructure:
    """Test the spin computed from the spin form"""

    @pytest.mark.parametrize(
        "key,vector,spin",
        [((-1, 1, 9), (1, 0, 0, 1), 1), ((-1, 3, 3), (0, 1, 0, 1), 0)],
    )
    def test_structure_vectors_of_17(self, key, vector, spin):
        """Test v and q(v) for the prototypes of D = 17"""
        p = next(p for p in enumerate_prototypes(17) if p.key == key)
        assert structure_vector(p) == vector
        assert spin_via_structure(p) == spin

    def test_agrees_with_arithmetic_spin(self):
        """Test both spin routes for every prototype with D ≡ 1 mod 8 below 400"""
        for D in range(17, 400, 8):
            for p in enumerate_prototypes(as_discriminant(D)):
                assert spin_via_structure(p) == spin_of_prototype(p), p.key


def prototype_taus(count):
    """The first ``count`` points tau_c and tau_b of proper prototypes, by ascending D"""
    taus = []
    D = 5
    while len(taus) < count:
        if D % 4 in (0, 1):
            for p in enumerate_prototypes(as_discriminant(D)):
                taus.append(prototype_tau(p, which="c"))
                taus.append(prototype_tau(p, which="b"))
        D += 1
    return taus[:count]


class TestRealMultiplicationAtPrototypes:
    """Test S as an element of the real quadratic order acting on the lattice"""

    @pytest.mark.parametrize("D", [12, 17, 44, 76])
    def test_minimal_polynomial(self, D):
        """Test S^2 - D S + D(D-1)/4 = 0"""
        for p in enumerate_prototypes(D):
            S = real_mult_generator(D, p.e, 1, p.c)
            assert S * S - D * S + sympy.Rational(D * (D - 1), 4) * sympy.eye(4) == sympy.zeros(4)

    @pytest.mark.parametrize("D", [12, 17, 44, 76])
    def test_commutes_with_j(self, D):
        """Test J S = S J on the lattice of tau_c"""
        for p in enumerate_prototypes(D):
            S = real_mult_generator(D, p.e, 1, p.c)
            J = automorphism_matrix(D8Lattice(prototype_tau(p)), "J")
            assert J * S == S * J, p.key

    @pytest.mark.parametrize("D", [12, 17, 44, 76])
    def test_self_adjoint(self, D):
        """Test S G = G S^T for the polarization G"""
        for p in enumerate_prototypes(D):
            S = real_mult_generator(D, p.e, 1, p.c)
            G = gram_matrix(D8Lattice(prototype_tau(p)))
            assert S * G == G * S.T, p.key

    @pytest.mark.slow
    def test_integrality_sweep(self):
        """Test the divisibility criterion for |e| <= 40, k <= 4, c <= 40 and D <= 2000"""
        for D in range(5, 2001):
            if D % 4 not in (0, 1):
                continue
            for k in range(1, 5):
                for c in range(1, 41):
                    for e in range(-40, 41):
                        if (k * k * D + e * e) % (2 * c):
                            continue
                        S = real_mult_generator(D, e, k, c)
                        assert is_integral(S) == s_integrality_criterion(D, e, k, c), (D, e, k, c)


class TestLatticeSamples:
    """Check the lattice oracles on many prototype points"""

    @pytest.mark.slow
    def test_gram_and_automorphisms(self):
        """Test the form on 200 points tau and its preservation by J and Z"""
        for tau in prototype_taus(200):
            d8 = D8Lattice(tau)
            G = gram_matrix(d8)
            assert G == STANDARD_FORM, tau
            J = automorphism_matrix(d8, "J")
            assert J * G * J.T == G, tau

            d12 = D12Lattice(tau)
            H = gram_matrix(d12)
            Z = automorphism_matrix(d12, "Z")
            assert Z * H * Z.T == H, tau

    @pytest.mark.slow
    def test_spin_routes_agree_up_to_2000(self):
        """Test the Arf invariant matches (c + f)/2 mod 2 for D ≡ 1 mod 8 below 2000"""
        for D in range(17, 2000, 8):
            for p in enumerate_prototypes(as_discriminant(D)):
                assert spin_via_structure(p) == spin_of_prototype(p), (D, p.key)
