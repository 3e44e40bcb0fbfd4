r"""Exact invariants of plane curve singularities from branch parametrizations.

The package computes, in exact rational/integer arithmetic, the multivariable
Hilbert function of a reduced plane curve germ given by Puiseux-style branch
parametrizations, together with the invariants built on top of it: the value
semigroup, delta invariant, Milnor number, conductor, Poincare series,
normalized motivic Poincare series, Alexander polynomial, Orlik-Solomon type
homology of rank-function complexes, and the associated graded lattice
homology with its U-action structure.

Every quantity is validated through at least two independent computation
routes; disagreements raise ``ConsistencyError`` rather than returning data.
"""

from .errors import (
    BoxTooSmall,
    ConsistencyError,
    CurveSchemaError,
    CurvelatError,
    InsufficientTruncation,
    InvalidParametrization,
    NonStabilizing,
    PolySyntaxError,
    PolynomialityViolation,
    PrimitivityError,
    SupportViolation,
    UnclassifiablePattern,
)
from .exactalg import (
    SNFResult,
    TruncSeries,
    parse_poly,
    rank_rational,
    smith_normal_form,
)
from .curve import (
    BranchParametrization,
    Curve,
    branch_delta,
    h_oracle,
    intersection_multiplicity,
)
from .hilbert import (
    CurveInvariants,
    HilbertTable,
    build_table,
    char_poly,
    invariants,
    large_n_step_check,
    local_matroid,
    semigroup,
    symmetry_check,
)
from .series import (
    BoxSeries,
    alexander,
    canonical_str,
    hilbert_from_poincare,
    hilbert_series,
    hv_polynomial,
    motivic_normalized,
    motivic_series,
    pi_value,
    poincare_from_hilbert,
    torres_restriction_check,
)
from .oslattice import (
    GradedGroup,
    Matroid,
    OSComplex,
    arrangement_poincare,
    d0_structure_checks,
    du_homology,
    homology_from_boundaries,
    os_homology,
    projective_poincare,
)
from .latthom import (
    R1Structure,
    R2Case,
    euler_check,
    grv_homology,
    grv_homology_direct,
    grv_homology_formula,
    r1_structure,
    r2_classify,
    sk_homology,
)
from .cli import load_curve, main

__version__ = "0.1.0"

__all__ = [
    "BoxTooSmall",
    "ConsistencyError",
    "CurveSchemaError",
    "CurvelatError",
    "InsufficientTruncation",
    "InvalidParametrization",
    "NonStabilizing",
    "PolySyntaxError",
    "PolynomialityViolation",
    "PrimitivityError",
    "SupportViolation",
    "UnclassifiablePattern",
    "SNFResult",
    "TruncSeries",
    "parse_poly",
    "rank_rational",
    "smith_normal_form",
    "BranchParametrization",
    "Curve",
    "branch_delta",
    "h_oracle",
    "intersection_multiplicity",
    "CurveInvariants",
    "HilbertTable",
    "build_table",
    "char_poly",
    "invariants",
    "large_n_step_check",
    "local_matroid",
    "semigroup",
    "symmetry_check",
    "BoxSeries",
    "alexander",
    "canonical_str",
    "hilbert_from_poincare",
    "hilbert_series",
    "hv_polynomial",
    "motivic_normalized",
    "motivic_series",
    "pi_value",
    "poincare_from_hilbert",
    "torres_restriction_check",
    "GradedGroup",
    "Matroid",
    "OSComplex",
    "arrangement_poincare",
    "d0_structure_checks",
    "du_homology",
    "homology_from_boundaries",
    "os_homology",
    "projective_poincare",
    "R1Structure",
    "R2Case",
    "euler_check",
    "grv_homology",
    "grv_homology_direct",
    "grv_homology_formula",
    "r1_structure",
    "r2_classify",
    "sk_homology",
    "load_curve",
    "main",
    "__version__",
]
