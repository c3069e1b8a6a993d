"""Exact tools for rational quaternion algebras.

Arithmetic in the algebra (a, b / Q), classification by ramified places,
integer points and rational parametrizations of the associated conic, and
a two-parameter surface presentation that specializes to those conics.
Everything runs over exact rationals; no floats anywhere.
"""

__version__ = "0.1.0"

from .classify import (
    Place,
    RamificationSet,
    TernaryForm,
    are_isomorphic,
    candidate_places,
    classification_record,
    factorize,
    form_from_algebra,
    hilbert_symbol,
    is_division,
    isotropy_oracle,
    padic_solvability_oracle,
    ramified_places,
    square_class,
)
from .conic import (
    Conic,
    ConicPoint,
    RationalParametrization,
    conic_from_form,
    conic_point_to_form_zero,
    coordinate_ring_normal_form,
    find_point,
    form_zero_to_conic_point,
    parametrize_from_point,
    symbolic_parametrization_check,
)
from .errors import (
    AlgebraMismatchError,
    DomainError,
    Error,
    FactorizationBudgetError,
    NotInvertibleError,
    ParseError,
    PointSearchError,
    PrecisionBudgetError,
    UnknownVariableError,
    UnverifiedIrreducibilityWarning,
    ZeroNormError,
)
from .expr import poly_parse, unipoly_parse
from .poly import (
    MultiPoly,
    UniPoly,
    content_primitive,
    format_rational,
    parse_rational,
    poly_print,
    primitive_part,
    substitute_rational,
)
from .quaternion import Quaternion, QuaternionAlgebra, quaternion_parse
from .selftest import all_passed, report_lines, run_selftest
from .surface import (
    SurfacePresentation,
    build_parametric_form,
    build_surface,
    emit_record,
    emit_surface,
    minimal_poly_of_rational,
    solved_expressions,
    specialize_check,
    tower_consistency_check,
)
from .tower import Tower, TowerElement, tower_reduce

__all__ = [
    "__version__",
    "AlgebraMismatchError",
    "Conic",
    "ConicPoint",
    "DomainError",
    "Error",
    "FactorizationBudgetError",
    "MultiPoly",
    "NotInvertibleError",
    "ParseError",
    "Place",
    "PointSearchError",
    "PrecisionBudgetError",
    "Quaternion",
    "QuaternionAlgebra",
    "RamificationSet",
    "RationalParametrization",
    "SurfacePresentation",
    "TernaryForm",
    "Tower",
    "TowerElement",
    "UniPoly",
    "UnknownVariableError",
    "UnverifiedIrreducibilityWarning",
    "ZeroNormError",
    "all_passed",
    "are_isomorphic",
    "build_parametric_form",
    "build_surface",
    "candidate_places",
    "classification_record",
    "conic_from_form",
    "conic_point_to_form_zero",
    "content_primitive",
    "coordinate_ring_normal_form",
    "emit_record",
    "emit_surface",
    "factorize",
    "find_point",
    "form_from_algebra",
    "format_rational",
    "form_zero_to_conic_point",
    "hilbert_symbol",
    "is_division",
    "isotropy_oracle",
    "minimal_poly_of_rational",
    "padic_solvability_oracle",
    "parametrize_from_point",
    "parse_rational",
    "poly_parse",
    "poly_print",
    "primitive_part",
    "quaternion_parse",
    "ramified_places",
    "report_lines",
    "run_selftest",
    "solved_expressions",
    "specialize_check",
    "square_class",
    "substitute_rational",
    "symbolic_parametrization_check",
    "tower_consistency_check",
    "tower_reduce",
    "unipoly_parse",
]
