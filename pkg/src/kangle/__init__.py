"""Constructions and certificates for equiangular and k-angle tight frames."""

from kangle.linalg import (
    EigenDecomposition,
    conj_transpose,
    frobenius_distance,
    hermitian_eig,
    matmul,
)
from kangle.frame import Frame
from kangle.etf import (
    etf_fast_path,
    etf_via_eig,
    gram_from_signature,
    signature_from_seed,
    verify_signature_identity,
)
from kangle.hadamard import (
    MubFamily,
    dft_hadamard,
    mub_family_odd_prime,
    muh_frame,
    reflection_basis,
    sylvester_hadamard,
    union_frame,
)
from kangle.binomial import (
    binomial_frame,
    enumerate_subsets,
    frame_potential,
    incidence_matrix,
    predicted_inner_product,
)
from kangle.analysis import (
    all_ones_eigenvector,
    angle_spectrum,
    certify,
    check_association_scheme,
    check_tight,
    coherence,
    decompose_gram,
    is_regular,
    max_equiangular_lines,
    seidel_from_gram,
    welch_bound,
)

__version__ = "0.1.0"

__all__ = [
    "EigenDecomposition",
    "Frame",
    "MubFamily",
    "all_ones_eigenvector",
    "angle_spectrum",
    "binomial_frame",
    "certify",
    "check_association_scheme",
    "check_tight",
    "coherence",
    "conj_transpose",
    "decompose_gram",
    "dft_hadamard",
    "enumerate_subsets",
    "etf_fast_path",
    "etf_via_eig",
    "frame_potential",
    "frobenius_distance",
    "gram_from_signature",
    "hermitian_eig",
    "incidence_matrix",
    "is_regular",
    "matmul",
    "max_equiangular_lines",
    "mub_family_odd_prime",
    "muh_frame",
    "predicted_inner_product",
    "reflection_basis",
    "seidel_from_gram",
    "signature_from_seed",
    "sylvester_hadamard",
    "union_frame",
    "verify_signature_identity",
    "welch_bound",
]
