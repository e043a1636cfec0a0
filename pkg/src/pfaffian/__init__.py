"""Exact Pfaffian calculus over words, with identity verification.

The Pfaffian here is a signed function on words of distinct letters,
computed three independent ways (matching sums, cofactor recursion,
congruence elimination) over exact rationals or a generic polynomial
ring.  On top of that sit the classical identities among Pfaffians of
intersecting words and their determinant counterparts, closed-form
families, and a seeded random / symbolic verification harness with a
command line front end.
"""

from .algebra import (
    MultiPoly,
    RATIONAL,
    SYMBOLIC,
    Ring,
    Scalar,
    eval_poly,
    format_scalar,
    parse_scalar,
    poly_normalize,
    scalar_div,
)
from .words import (
    Matching,
    enumerate_matchings,
    matching_count,
    reverse_complement,
    sign,
    word_diff,
)
from .core import (
    ExtensionForm,
    GenericForm,
    MatrixForm,
    PfCache,
    SkewForm,
    check_skew,
    det,
    form_matrix,
    pf_elimination,
    pf_matchings,
    pf_recursive,
)
from .identities import (
    averaged_expansion_residual,
    brill_residual,
    build_cancelling_extension,
    cancelling_residual,
    cayley_bordered_residual,
    cayley_square_residual,
    complementary_residual,
    expansion_residual,
    minor_product_residual,
    solve_skew_cramer,
    tanner_residual,
    wenzel_residual,
)
from .detbridge import (
    BipartiteForm,
    ZeroPivotError,
    bezout_residual,
    brioschi_pf,
    condensation_layers,
    desnanot_five_residual,
    desnanot_residual,
    det_via_pf,
    dodgson_condense,
    fontaine_residual,
    jacobi_adjugate_residual,
    minor_word,
    sylvester_residual,
)
from .closedforms import (
    FamilyParams,
    PointConfig,
    blaschke_form,
    family_form,
    n4_criterion_residual,
    power_form,
    product_pf,
    torelli_pf,
)
from .matrixio import format_matrix, parse_matrix, read_matrix
from .verify import (
    VerificationReport,
    get_identity,
    registry_names,
    run_numeric,
    run_symbolic,
)

__version__ = "0.1.0"

__all__ = [
    "MultiPoly", "RATIONAL", "SYMBOLIC", "Ring", "Scalar",
    "eval_poly", "format_scalar", "parse_scalar", "poly_normalize", "scalar_div",
    "Matching", "enumerate_matchings", "matching_count",
    "reverse_complement", "sign", "word_diff",
    "ExtensionForm", "GenericForm", "MatrixForm", "PfCache", "SkewForm",
    "check_skew", "det", "form_matrix",
    "pf_elimination", "pf_matchings", "pf_recursive",
    "averaged_expansion_residual", "brill_residual",
    "build_cancelling_extension", "cancelling_residual",
    "cayley_bordered_residual", "cayley_square_residual",
    "complementary_residual", "expansion_residual", "minor_product_residual",
    "solve_skew_cramer", "tanner_residual", "wenzel_residual",
    "BipartiteForm", "ZeroPivotError", "bezout_residual", "brioschi_pf",
    "condensation_layers", "desnanot_five_residual", "desnanot_residual",
    "det_via_pf", "dodgson_condense", "fontaine_residual",
    "jacobi_adjugate_residual", "minor_word", "sylvester_residual",
    "FamilyParams", "PointConfig", "blaschke_form", "family_form",
    "n4_criterion_residual", "power_form", "product_pf", "torelli_pf",
    "format_matrix", "parse_matrix", "read_matrix",
    "VerificationReport", "get_identity", "registry_names",
    "run_numeric", "run_symbolic",
]
