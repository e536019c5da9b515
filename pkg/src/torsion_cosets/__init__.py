"""Bounds and exact enumeration of maximal torsion cosets on subvarieties
of algebraic tori."""

__version__ = "0.1.0"

from .arith import (
    LaurentPoly,
    UniPoly,
    cyclotomic_factor_orders,
    cyclotomic_poly,
    eval_is_zero_at_torsion,
    resultant,
    substitute_powers,
)
from .bounds import (
    Bound,
    BoundsReport,
    bounds_report,
    compare_bounds,
    coset_bound_ab,
    coset_bound_abc,
    coset_bound_abc_toric,
    exponent_bound,
    n_of_d,
    primes_product,
    schmidt_bound_log,
    uniform_exponent,
    w_degrees,
)
from .cosets import (
    Subtorus,
    TorsionCoset,
    TorsionPoint,
    coset_contains,
    make_coset,
    maximal_filter,
    point_in_subtorus,
    saturate_and_canonicalize,
)
from .enumerator import (
    EnumConfig,
    EnumResult,
    admissible_orders,
    brute_force_points,
    detect_positive_cosets,
    enumerate_maximal_cosets,
    sieve_ab,
    verify_against_sieve,
)
from .newton import PolytopeSummary, SupportSet, polytope_summary, support
from .parse import PolyExpr, parse_poly
from .sigma import (
    CaseTag,
    SigmaPQ,
    classify_case,
    crt_split,
    kernel_pq_check,
    sigma_pq_exponent,
)

__all__ = [
    "__version__",
    "admissible_orders",
    "Bound",
    "bounds_report",
    "BoundsReport",
    "brute_force_points",
    "CaseTag",
    "classify_case",
    "compare_bounds",
    "coset_bound_ab",
    "coset_bound_abc",
    "coset_bound_abc_toric",
    "coset_contains",
    "crt_split",
    "cyclotomic_factor_orders",
    "cyclotomic_poly",
    "detect_positive_cosets",
    "EnumConfig",
    "enumerate_maximal_cosets",
    "EnumResult",
    "eval_is_zero_at_torsion",
    "exponent_bound",
    "kernel_pq_check",
    "LaurentPoly",
    "make_coset",
    "maximal_filter",
    "n_of_d",
    "parse_poly",
    "point_in_subtorus",
    "PolyExpr",
    "polytope_summary",
    "PolytopeSummary",
    "primes_product",
    "resultant",
    "saturate_and_canonicalize",
    "schmidt_bound_log",
    "sieve_ab",
    "sigma_pq_exponent",
    "SigmaPQ",
    "substitute_powers",
    "Subtorus",
    "support",
    "SupportSet",
    "TorsionCoset",
    "TorsionPoint",
    "uniform_exponent",
    "UniPoly",
    "verify_against_sieve",
    "w_degrees",
]
