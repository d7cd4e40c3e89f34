"""Exact decision procedures and certified reversers for adjoint reality
in the classical complex Lie algebras, over the Gaussian rationals."""

from .certificates import ReverserCertificate, VerificationReport, verify_certificate
from .gaussian import GaussRat
from .jordan import JordanPair, jordan_chevalley
from .liecore import (
    CanonicalSemisimple,
    LieContext,
    algebra_member,
    build_canonical,
    centralizer_algebra,
    group_member,
    jn_matrix,
    reverser_linear_space,
)
from .matrix import (
    ExactMatrix,
    PolyMatrix,
    char_poly,
    invariant_factors,
    is_nilpotent,
    is_semisimple,
    minimal_polynomial,
    similar_to_negative,
    solve_linear,
)
from .oracle import (
    rcf_invariant_factors,
    rcf_similar,
    search_reverser,
    sp1_involution_obstruction,
)
from .polynomial import ExactPoly, linear_roots, poly_gcd
from .semisimple import (
    RealityVerdict,
    decide_semisimple,
    witness_general_semisimple,
    witness_semisimple,
)
from .symplectic import (
    Sl2Triple,
    SymplecticChainData,
    build_sigma,
    build_tau,
    chain_decomposition,
    restrict_semisimple,
    reverse_full,
    sl2_triple,
)

__version__ = "0.1.0"

__all__ = [
    "CanonicalSemisimple",
    "ExactMatrix",
    "ExactPoly",
    "GaussRat",
    "JordanPair",
    "LieContext",
    "PolyMatrix",
    "RealityVerdict",
    "ReverserCertificate",
    "Sl2Triple",
    "SymplecticChainData",
    "VerificationReport",
    "algebra_member",
    "build_canonical",
    "build_sigma",
    "build_tau",
    "centralizer_algebra",
    "chain_decomposition",
    "char_poly",
    "decide_semisimple",
    "group_member",
    "invariant_factors",
    "is_nilpotent",
    "is_semisimple",
    "jn_matrix",
    "jordan_chevalley",
    "linear_roots",
    "minimal_polynomial",
    "poly_gcd",
    "rcf_invariant_factors",
    "rcf_similar",
    "restrict_semisimple",
    "reverse_full",
    "reverser_linear_space",
    "search_reverser",
    "similar_to_negative",
    "sl2_triple",
    "solve_linear",
    "sp1_involution_obstruction",
    "verify_certificate",
    "witness_general_semisimple",
    "witness_semisimple",
]
