"""Exact combinatorics of blown-up planes and their Cox rings.

Everything is computed over the rationals with fractions.Fraction; there is
no floating point anywhere in the library.
"""
from .errors import (
    CheckFailureError,
    ClassificationError,
    ConfigError,
    ContractionError,
    DegeneracyError,
    DelPezzoError,
    DimensionMismatchError,
    EvaluationError,
    GenerationFailureError,
    ModelMismatchError,
    NotARootError,
    NotInOrbitError,
    OrbitOverflowError,
    SamplingError,
)
from .lattice import (
    MAX_R,
    MIN_R,
    PicClass,
    canonical_class,
    canonical_key,
    contract_last,
    degree,
    embed_blowdown,
    intersect,
    is_nef,
    line_class,
    minus_k,
    point_class,
    reflect,
    simple_roots,
    zero,
)
from .enumeration import (
    FAMILY_TAGS,
    N_EXCEPTIONAL,
    CurveFamily,
    Ruling,
    classify_family,
    exceptional_curves,
    exceptional_curves_diophantine,
    family_census,
    pairs_with_intersection,
    roots,
    ruling_classes,
    rulings,
    verify_anticanonical_decompositions,
)
from .weyl import OrbitResult, apply_word, orbit, weight_vector, word_to
from .exactalg import PlanePoly, QMatrix, Rat, det, monomial_basis, nullspace, rank, rref
from .plane_geometry import (
    PointConfig,
    Section,
    Violation,
    h0_dim,
    interpolate,
    random_config,
    section_of,
    validate_general_position,
)
from .cox import (
    Generator,
    GeneratorSet,
    QuadraticRelation,
    all_ruling_relations,
    anticanonical_pair_rank,
    blowdown_relation_check,
    build_generators,
    decompose_effective,
    generator_classes,
    jacobian_codim_check,
    pluecker_model_r4,
    random_torsor_point,
    relation_json,
    relation_value,
    ruling_relations,
    sample_torsor_point,
    verify_degree_one_generation,
)

__version__ = "1.0.0"
