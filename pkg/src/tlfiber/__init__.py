"""Classification of fiber functors on Temperley-Lieb categories.

An invertible bilinear form E evaluates planar diagrams as tensor
contractions (fiber), is classified up to transposed similarity by the
Jordan data of theta(E) = E^{-1} ^t E (classify), by the eigenvalue list
of the positive polar factor in the compact case (unitary), and presents
a quadratic Hopf algebra with matrix coproduct and forced antipode
(hopf). diagrams holds the planar calculus, matrices the exact and
approximate linear algebra, cli the command line.
"""

from .classify import (
    admissible,
    canonical_form,
    dimension_from_mu,
    enumerate_classes,
    equivalent_forms,
    theta,
)
from .diagrams import (
    Letter,
    PlanarDiagram,
    TLWord,
    cap,
    compose,
    cup,
    diagram_to_word,
    enumerate_basis,
    generator_h,
    identity,
    tensor,
    verify_relations,
    word_to_diagram,
)
from .errors import (
    BadDimension,
    FieldMismatch,
    InadmissibleMultiplicity,
    IndexOutOfRange,
    InputError,
    InvalidList,
    InvalidParameter,
    InvalidWord,
    IrrationalSpectrum,
    MathError,
    MatrixTooLarge,
    NoConvergence,
    NotInvertible,
    ParityObstruction,
    ShapeMismatch,
    SingularMatrix,
    TLFiberError,
)
from .fiber import (
    BilinearForm,
    TensorMap,
    dimension_of,
    evaluate,
    stabilizes,
    transport,
)
from .hopf import (
    HopfPresentation,
    NCQuadratic,
    RelationSpan,
    StarStructure,
    antipode_matrix,
    conjugation_matrix,
    coproduct_terms,
    counit_value,
    present,
    relation_span,
    star_structure,
    substitute,
)
from .matrices import (
    DEFAULT_TOL,
    DESK_LIMIT,
    Matrix,
    Tolerance,
    block_diag,
    char_poly,
    determinant,
    hermitian_eigh,
    invert,
    jordan_multiplicities,
    kron,
    polar_decompose,
    rank,
    spectrum,
)
from .multiplicity import MultiplicityFunction
from .scalars import Field, QQi
from .unitary import (
    SpectralInvariant,
    canonical_phi,
    conjugation_operator,
    gamma_membership,
    spectral_invariant,
    unitarily_equivalent,
)

__version__ = "0.1.0"

__all__ = [
    "BadDimension",
    "BilinearForm",
    "DEFAULT_TOL",
    "DESK_LIMIT",
    "Field",
    "FieldMismatch",
    "HopfPresentation",
    "InadmissibleMultiplicity",
    "IndexOutOfRange",
    "InputError",
    "InvalidList",
    "InvalidParameter",
    "InvalidWord",
    "IrrationalSpectrum",
    "Letter",
    "MathError",
    "Matrix",
    "MatrixTooLarge",
    "MultiplicityFunction",
    "NCQuadratic",
    "NoConvergence",
    "NotInvertible",
    "ParityObstruction",
    "PlanarDiagram",
    "QQi",
    "RelationSpan",
    "ShapeMismatch",
    "SingularMatrix",
    "SpectralInvariant",
    "StarStructure",
    "TLFiberError",
    "TLWord",
    "TensorMap",
    "Tolerance",
    "admissible",
    "antipode_matrix",
    "block_diag",
    "canonical_form",
    "canonical_phi",
    "cap",
    "char_poly",
    "compose",
    "conjugation_matrix",
    "conjugation_operator",
    "coproduct_terms",
    "counit_value",
    "cup",
    "determinant",
    "diagram_to_word",
    "dimension_from_mu",
    "dimension_of",
    "enumerate_basis",
    "enumerate_classes",
    "equivalent_forms",
    "evaluate",
    "gamma_membership",
    "generator_h",
    "hermitian_eigh",
    "identity",
    "invert",
    "jordan_multiplicities",
    "kron",
    "polar_decompose",
    "present",
    "rank",
    "relation_span",
    "spectral_invariant",
    "spectrum",
    "stabilizes",
    "star_structure",
    "substitute",
    "tensor",
    "theta",
    "transport",
    "unitarily_equivalent",
    "verify_relations",
    "word_to_diagram",
]
