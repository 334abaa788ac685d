"""Exact certification of left-orderable Dehn filling intervals for
two-bridge knots, via Alexander polynomial root analysis and twisted
sl2 group cohomology, all in exact rational arithmetic."""

from .certify import (
    Certificate,
    CertifyResult,
    RootAnalysis,
    RootBranchReport,
    Verdict,
    admissible_modulus,
    analyze_roots,
    certify,
    check_rigidity,
    meridian_trace_check,
)
from .cohomology import (
    BranchCohomology,
    CocycleValues,
    CohomologyDims,
    FamilyCocycleForms,
    cohomology_dims,
    eval_cocycle,
    family_cocycle_forms,
    normalized_representative,
    relator_system,
    vanishing_identity,
)
from .polynomials import (
    LaurentPoly,
    Poly,
    RootAtEndpoint,
    isolate_real_roots,
    poly_gcd,
    refine_isolating_interval,
    squarefree_decomposition,
    squarefree_part,
    sturm_count,
)
from .quotient import (
    AlgebraicElement,
    MatrixOverField,
    ModulusBranch,
    NullspaceResult,
    SplitRequired,
    branch_invert,
    nullspace_dim,
)
from .reps import (
    AlexanderMismatch,
    Mat2,
    Mat3,
    RepAssignment,
    adjoint,
    alexander_via_fox,
    alexander_via_rep,
    burde_de_rham_assignment,
    eval_word_matrix,
    f_upper_entry,
    meridian_rep_laurent,
    normalize_alexander,
)
from .twobridge import (
    ContinuedFraction,
    KnotPresentation,
    TwoBridgeFraction,
    build_presentation,
    cf_to_fraction,
    family_fraction,
    family_v,
    family_word,
    riley_exponents,
)
from .words import Word, WordParseError

__version__ = "0.1.0"
