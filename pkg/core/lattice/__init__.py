from core.lattice.lattices import (
    D8Lattice,
    D12Lattice,
    automorphism_matrix,
    gram_matrix,
    is_integral,
    prototype_tau,
    real_mult_generator,
    s_integrality_criterion,
    symplectic_pairing,
)
from core.lattice.qtower import QTowerElem, QuadraticTower, tower_for_discriminant
from core.lattice.spin import (
    SpinForm,
    arf,
    intersection_pairing,
    j_action_mod2,
    spin_q,
    spin_via_structure,
    structure_vector,
)

__all__ = [
    "D8Lattice",
    "D12Lattice",
    "QTowerElem",
    "QuadraticTower",
    "SpinForm",
    "arf",
    "automorphism_matrix",
    "gram_matrix",
    "intersection_pairing",
    "is_integral",
    "j_action_mod2",
    "prototype_tau",
    "real_mult_generator",
    "s_integrality_criterion",
    "spin_q",
    "spin_via_structure",
    "structure_vector",
    "symplectic_pairing",
    "tower_for_discriminant",
]
