"""Exact computations with quasi-hereditary algebras and their exact Borel subalgebras."""
from .algebra import (
    AlgebraError,
    FinDimAlgebra,
    Quiver,
    SubalgebraEmbedding,
    build_path_algebra,
    embedding_from_generators,
    projective_endomorphism_algebra,
)
from .ainfty import (
    AInftyAlgebra,
    AInftyError,
    AInftyMorphism,
    CapTooSmall,
    ExtModel,
    InducedAInftyMap,
    check_morphism,
    check_stasheff,
    complete_triangle,
    compose,
    homotopy_transfer,
    invert,
    minimal_model_of_ext,
    truncate,
)
from .borel import (
    BorelSynthesis,
    SynthesisError,
    check_diagram_commutes,
    conjugate_subalgebras,
    reconstruct,
    synthesize_borel_pair,
    verify_conjugation,
)
from .linalg import Field
from .modules import (
    Representation,
    ext_dimensions,
    induce,
    is_induction_exact,
    minimal_projective_resolution,
    module_isomorphic,
    projective,
    simple_modules,
)
from .qh import (
    BorelReport,
    SimpleOrder,
    check_quasi_hereditary,
    delta_filtration,
    standard_modules,
    verify_exact_borel,
)
from .skew import (
    Cocycle,
    GroupAction,
    ScopeError,
    action_char_polys,
    check_invariant_order,
    classify_compatible_twists,
    cocycle_from_generator,
    cyclic_action,
    equivariance_check,
    invariant_borel_obstruction,
    skew_group_algebra,
    twist_action,
)
from .twisted import TwistedModule, h0_hom, realize, twmod_apply

__version__ = "0.1.0"
