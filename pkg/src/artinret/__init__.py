"""Retractions of Artin groups onto their parabolic subgroups.

Classification of retract-compatible and parabolic-retract-compatible
Coxeter matrices, constructive synthesis of ordinary retractions, a
Garside-normal-form word-problem engine for dihedral Artin groups, normal
forms and Bass-Serre tree actions for free products of two cyclic groups,
and the executable catalogue of dihedral homomorphism families.
"""

from .classifier import (
    CompatibilityReport,
    RetractCompatibility,
    TripleRule,
    TripleVerdict,
    check_triple,
    gen_parabolic_retractable,
    gen_retract_compatible,
    is_parabolic_retract_compatible,
    is_retract_compatible,
    triples_criterion,
)
from .coxeter import (
    INFINITY,
    CoxeterFormatError,
    CoxeterMatrix,
    OddComponentPartition,
    matrix,
    odd_components,
    parse_coxeter,
    serialize_coxeter,
    submatrix,
)
from .dihedral import (
    CenterQuotientImage,
    DihedralPresentation,
    ExponentPair,
    GarsideNormalForm,
    Member,
    NonMember,
    center_gen,
    centralizer_membership,
    coxeter_quotient_eval,
    delta,
    is_central,
    normal_form,
    presentation,
    to_center_quotient,
    u_elem,
    words_equal,
)
from .freeprod import (
    Elliptic,
    FreeProductSignature,
    FreeProductWord,
    Hyperbolic,
    Vertex,
    classify_action,
    cyclic_reduce,
    fp_normalize,
    fp_word,
    translation_length,
    tree_distance,
    tree_distance_oracle,
)
from .homs import (
    HomCandidate,
    HomFamily,
    HomMatch,
    classify_image,
    enumerate_cases,
    instantiate,
    verify_hom,
)
from .retractions import (
    ConjugatedRetraction,
    GeneratorMap,
    RetractionStep,
    RetractionTrace,
    StepRule,
    SynthesisInternalError,
    VerificationResult,
    conjugate_retraction,
    synth_phi,
    synth_psi,
    synth_retraction,
    verify_retraction,
)
from .words import (
    Word,
    WordFormatError,
    abelianize,
    concat,
    conjugate,
    format_word,
    free_reduce,
    gen,
    invert,
    parse_word,
    pi_word,
    word,
)

__version__ = "0.1.0"
