"""Thin additive bases: construction, decomposition, verification.

The core construction builds a basis of order h whose counting function
grows like x**(1/h), together with a constructive decomposition of any
nonnegative integer into exactly h basis elements.  Two reference
constructions (base-g digit classes and coprime multiples) and a
brute-force sumset verifier round it out.
"""

__version__ = "0.1.0"

from .arith import BezoutCert, bezout_multi, binom, ext_gcd, nth_root_floor, pairwise_coprime, radical
from .bases import BasisHandle, ExplicitBasis, FrobeniusBasis, GAdicBasis, ShatrovskiiBasis
from .decompose import Decomposition, Term, basis_decompose, diophantine_decompose, find_t
from .errors import DomainError, InvalidParamsError, ResourceLimitError
from .frobenius import (
    FrobeniusParams,
    frobenius_count,
    frobenius_decompose,
    frobenius_enumerate_up_to,
    frobenius_member,
    threshold,
)
from .gadic import GAdicParams, gadic_member, rs_count, rs_decompose, rs_enumerate_up_to
from .shatrovskii import (
    SchemeRow,
    ShatParams,
    choose_P,
    count,
    ell,
    enumerate_up_to,
    k0,
    member,
    scheme_row,
    v_bound,
)
from .verify import (
    CoverageReport,
    ThinnessBoundReport,
    ThinnessProfile,
    counting_lower_bound_check,
    coverage_check,
    doubling_schedule,
    thinness_bound_check,
    thinness_profile,
)

__all__ = [
    "__version__",
    "BezoutCert", "ext_gcd", "bezout_multi", "radical", "pairwise_coprime", "binom",
    "nth_root_floor",
    "InvalidParamsError", "DomainError", "ResourceLimitError",
    "ShatParams", "SchemeRow", "k0", "choose_P", "scheme_row", "ell", "v_bound",
    "member", "enumerate_up_to", "count",
    "Term", "Decomposition", "diophantine_decompose", "find_t", "basis_decompose",
    "GAdicParams", "gadic_member", "rs_decompose", "rs_enumerate_up_to", "rs_count",
    "FrobeniusParams", "threshold", "frobenius_decompose", "frobenius_member",
    "frobenius_enumerate_up_to", "frobenius_count",
    "BasisHandle", "ShatrovskiiBasis", "GAdicBasis", "FrobeniusBasis", "ExplicitBasis",
    "CoverageReport", "coverage_check", "counting_lower_bound_check",
    "ThinnessBoundReport", "thinness_bound_check", "ThinnessProfile", "thinness_profile",
    "doubling_schedule",
]
