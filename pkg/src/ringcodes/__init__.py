"""Exact-arithmetic toolkit for linear codes over Z_m[v1..vk], vi^2 = vi."""

from .ring import (
    DEFAULT_GUARD,
    GuardExceeded,
    RingSpec,
    RkElement,
    units,
)
from .automorphisms import (
    AutomorphismSpec,
    InducedCoordinateMap,
    apply_phi,
    apply_theta,
    hermitian_conjugation,
    induced_map,
    order_of_perm,
)
from .gray import (
    PhiSpec,
    layout_permutation,
    phi,
    phi_chain,
    phi_vec,
    psi,
    psi_inv,
    psi_rows,
    psi_vec,
    psi_vec_inv,
)
from .codes import (
    LinearCode,
    compose,
    decompose,
    euclidean_dual,
    hamming_distance,
    hamming_weight,
    hermitian_dual,
    hermitian_selfdual_construct,
    is_hermitian_self_dual,
    is_self_dual,
    lee_distance,
    lee_weight,
    lee_weight_element,
)
from .cyclotomic import CyclotomicInt
from .weights import (
    CharacterTable,
    CompleteWE,
    HammingWE,
    SymmetrizedWE,
    character_sum_check,
    character_table,
    chi,
    chi_rk,
    cwe,
    hamming_we,
    macwilliams_hamming,
    s_matrix,
    swe,
    unit_classes,
    verify_cwe_macwilliams,
    verify_swe_macwilliams,
)
from .cyclic import (
    ShiftSpec,
    SkewConstructionError,
    SkewShiftSpec,
    algorithm1_construct,
    is_cyclic,
    is_quasi_cyclic,
    is_quasi_skew_cyclic,
    phi_image_code,
    phi_image_quasicyclic_check,
    psi_image_check,
    sigma_d,
    skew_shift,
    skew_shift_once,
)

__all__ = [
    "DEFAULT_GUARD",
    "GuardExceeded",
    "RingSpec",
    "RkElement",
    "units",
    "AutomorphismSpec",
    "InducedCoordinateMap",
    "apply_phi",
    "apply_theta",
    "hermitian_conjugation",
    "induced_map",
    "order_of_perm",
    "PhiSpec",
    "layout_permutation",
    "phi",
    "phi_chain",
    "phi_vec",
    "psi",
    "psi_inv",
    "psi_rows",
    "psi_vec",
    "psi_vec_inv",
    "LinearCode",
    "compose",
    "decompose",
    "euclidean_dual",
    "hamming_distance",
    "hamming_weight",
    "hermitian_dual",
    "hermitian_selfdual_construct",
    "is_hermitian_self_dual",
    "is_self_dual",
    "lee_distance",
    "lee_weight",
    "lee_weight_element",
    "CyclotomicInt",
    "CharacterTable",
    "CompleteWE",
    "HammingWE",
    "SymmetrizedWE",
    "character_sum_check",
    "character_table",
    "chi",
    "chi_rk",
    "cwe",
    "hamming_we",
    "macwilliams_hamming",
    "s_matrix",
    "swe",
    "unit_classes",
    "verify_cwe_macwilliams",
    "verify_swe_macwilliams",
    "ShiftSpec",
    "SkewConstructionError",
    "SkewShiftSpec",
    "algorithm1_construct",
    "is_cyclic",
    "is_quasi_cyclic",
    "is_quasi_skew_cyclic",
    "phi_image_code",
    "phi_image_quasicyclic_check",
    "psi_image_check",
    "sigma_d",
    "skew_shift",
    "skew_shift_once",
]
