"""Exact Adams-operation matrices on primitive K-theory generators.

For each compact group in the supported families -- U(n), SU(n), Sp(n),
Spin(2n+1), Spin(2n) and G2 -- the operation psi^l acts on the stated
integral generators of the primitive part of K^*(G) by an integer matrix.
This package assembles those matrices exactly (arbitrary-precision
integers and rationals throughout), provides the rational eigenvector
basis for the unitary case, and ships independent brute-force oracles
against which every closed form is cross-checked.
"""

from .counts import alpha, beta, mu_closed, mu_enumerate
from .eigen import (
    Eigenvector,
    SpectrumReport,
    char_poly,
    eigenbasis_determinant,
    eigenvector,
    expected_char_poly,
    family_exponents,
    sinh_pow_coeff_poly,
    spectrum_check,
    verify_eigen_relation,
)
from .exactmath import TruncSeries, UniPoly, bernoulli_even, binomial, t_over_sinh_pow
from .ktheory import (
    FAMILIES,
    AdamsMatrix,
    BasisElement,
    ConsistencyError,
    GroupSpec,
    ReductionTable,
    adams_matrix,
    basis,
    defining_dimension,
    g2_adams_matrix,
    pullback_adams_matrix,
    reduction_table,
    special_unitary_adams_matrix,
    spin_even_adams_matrix,
    spin_odd_adams_matrix,
    symplectic_adams_matrix,
    unitary_adams_matrix,
)
from .symoracle import (
    SymPoly,
    adams_symbolic_coefficients,
    bounded_composition_poly,
    complete_by_recursion,
    conversion_matrices,
    subset_power_expansion,
    symmetric_basis,
    verify_product_identity,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # counts
    "mu_enumerate",
    "mu_closed",
    "alpha",
    "beta",
    # exact arithmetic helpers
    "binomial",
    "bernoulli_even",
    "t_over_sinh_pow",
    "UniPoly",
    "TruncSeries",
    # groups and matrices
    "FAMILIES",
    "GroupSpec",
    "BasisElement",
    "AdamsMatrix",
    "ReductionTable",
    "ConsistencyError",
    "basis",
    "defining_dimension",
    "adams_matrix",
    "unitary_adams_matrix",
    "special_unitary_adams_matrix",
    "symplectic_adams_matrix",
    "spin_odd_adams_matrix",
    "spin_even_adams_matrix",
    "g2_adams_matrix",
    "reduction_table",
    "pullback_adams_matrix",
    # eigen data
    "Eigenvector",
    "eigenvector",
    "sinh_pow_coeff_poly",
    "verify_eigen_relation",
    "eigenbasis_determinant",
    "char_poly",
    "family_exponents",
    "expected_char_poly",
    "SpectrumReport",
    "spectrum_check",
    # symbolic oracle
    "SymPoly",
    "symmetric_basis",
    "complete_by_recursion",
    "subset_power_expansion",
    "adams_symbolic_coefficients",
    "conversion_matrices",
    "bounded_composition_poly",
    "verify_product_identity",
]
