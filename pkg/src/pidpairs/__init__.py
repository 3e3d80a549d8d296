"""Exact canonical forms and equivalence invariants for pairs of
finitely generated submodules of R^n over a principal ideal domain.

Scalars live in one of two built-in PIDs (arbitrary-precision integers
or univariate polynomials over Q) or in their fraction fields; matrices
and submodules are generic over the ring object.  The headline
operations are canonical_pair, which pushes a pair of full-column-rank
matrices with pure stacked span into a canonical diagonal shape with
explicit unimodular witnesses, and equivalent, which decides whether
two pairs differ by an automorphism of the ambient module.
"""

from .errors import (
    HypothesisError,
    NoSolutionError,
    ParseError,
    SingularMatrixError,
)
from .matrices import ExactMatrix, block_diagonal, hstack, vstack
from .normal_forms import (
    McMillanForm,
    SmithDecomposition,
    complete_to_unimodular,
    determinant,
    hnf,
    hnf_pivots,
    inverse_unimodular,
    is_unimodular,
    kernel_basis,
    left_coprime_factorization,
    rank,
    smith_mcmillan,
    snf,
    solve_exact,
    solve_in_field,
)
from .pairs import (
    PairCanonicalForm,
    PairHypotheses,
    PairInvariants,
    canonical_pair,
    canonical_pair_matrices,
    check_pair_hypotheses,
    equivalent,
    pair_invariants,
    random_unimodular,
)
from .rings import (
    INTEGERS,
    RATIONAL_POLYNOMIALS,
    FractionElement,
    FractionField,
    Integers,
    RationalPolynomials,
    ring_for_tag,
)
from .submodules import QuotientInvariants, Submodule, decompose_pure_sum
from .textio import format_matrix, parse_matrix, read_matrix_file, write_matrix_file

__all__ = [
    "ExactMatrix",
    "FractionElement",
    "FractionField",
    "HypothesisError",
    "INTEGERS",
    "Integers",
    "McMillanForm",
    "NoSolutionError",
    "PairCanonicalForm",
    "PairHypotheses",
    "PairInvariants",
    "ParseError",
    "QuotientInvariants",
    "RATIONAL_POLYNOMIALS",
    "RationalPolynomials",
    "SingularMatrixError",
    "SmithDecomposition",
    "Submodule",
    "block_diagonal",
    "canonical_pair",
    "canonical_pair_matrices",
    "check_pair_hypotheses",
    "complete_to_unimodular",
    "decompose_pure_sum",
    "determinant",
    "equivalent",
    "format_matrix",
    "hnf",
    "hnf_pivots",
    "hstack",
    "inverse_unimodular",
    "is_unimodular",
    "kernel_basis",
    "left_coprime_factorization",
    "pair_invariants",
    "parse_matrix",
    "rank",
    "random_unimodular",
    "read_matrix_file",
    "ring_for_tag",
    "smith_mcmillan",
    "snf",
    "solve_exact",
    "solve_in_field",
    "vstack",
    "write_matrix_file",
]
