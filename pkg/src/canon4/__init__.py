"""Exact invariant theory for (2,3)-complete-intersection space curves.

The package computes, over exact arithmetic, the objects a genus-4
canonical curve drags along: its singularity inventory, the cubic
threefold attached to it, numerical-criterion stability on both sides,
Chow forms, the root-lattice bookkeeping of the period-space boundary,
and the divisor-class arithmetic of the moduli interpretation.
"""

from .domains import QQ, PrimeField, QuadExtField
from .multipoly import MultiPoly
from .scheme import TwoThreeScheme, SchemeError, CURVE_VARS
from .singclass import (
    SingType,
    PointRecord,
    SchemeAnalysis,
    classify_affine_singularity,
    classify_point,
    classify_scheme,
    plane_component_test,
    parse_sing_type,
)
from .correspond import (
    CUBIC_VARS,
    CubicThreefold,
    CorrespondenceError,
    chordal_detect,
    classify_cubic_point,
    correspondence_check,
    cubic_to_curve,
    curve_to_cubic,
    marked_point_type,
)
from .stability import (
    OnePS,
    StabilityVerdict,
    TorusCertificate,
    allcock_verdict,
    degeneration_target,
    destabilize_search,
    git_verdict,
    linearization_balance,
    mumford_rhs,
    schubert_bound,
    torus_weight_min,
    zero_weight_oneps,
)
from .chow import (
    ChowCertificate,
    ChowForm,
    chow_destabilize,
    chow_form,
    chow_weight_min,
    plane_curve_chow_form,
)
from .lattices import (
    Lattice,
    Isometry,
    NonexistenceCertificate,
    borcherds_orders,
    cusp_invariants,
    discriminant_group,
    fpf_order3,
    heegner_types,
    make_lattice,
    orthogonal_complement,
    root_system,
    roots,
    short_vectors,
)
from .divisors import (
    PEClass,
    convert,
    hassett_keel_alpha,
    pe_constants,
    pencil_singular_count,
    test_curve_constraints,
)
from .corpus import CorpusEntry, Report, entries, entry_row_names, get_entry, run_corpus

__version__ = "0.1.0"
