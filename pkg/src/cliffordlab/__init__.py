"""Exact-arithmetic workbench for the Clifford algebras Cl(p,q).

Rational-coefficient multivectors and their (anti-)involutions, the vee
group of signed basis blades with its idempotent-stabilizer machinery,
spinor representations over K = f Cl f, the transposition scalar product,
and the classification of its automorphism groups for p+q <= 9.
"""

from .core import (
    MAX_DIMENSION,
    Multivector,
    Signature,
    SignatureMismatchError,
    blade_indices,
    blade_name,
    blade_product,
    blade_square_sign,
    clifford_mul,
    commutation_sign,
    conjugation,
    dual_pairing,
    grade_involution,
    inner,
    left_mul_matrix,
    mask_from_indices,
    metric_involution,
    metric_involution_vector,
    reversion,
    sort_invlex,
    transposition,
    wedge,
)
from .structure import (
    AlgebraClass,
    AlgebraData,
    IdempotentFactorization,
    classify_algebra,
    clidata,
    primitive_idempotent,
    radon_hurwitz,
)
from .groups import (
    GroupElement,
    Subgroup,
    Theorem1Report,
    centralizer,
    field_group,
    idempotent_group,
    stabilizer,
    transversal,
    vee_group,
    verify_theorem1,
)
from .spinor import (
    BetaForm,
    NotInIdealError,
    SemisimpleStructures,
    SpinorBasis,
    SpinorMatrix,
    beta_products,
    conjugate_transpose,
    decompose_in_basis,
    diagonal_scale,
    is_field_element,
    semisimple_structures,
    spinor_basis,
    spinor_matrix,
    spinor_project,
    transposition_product,
    transposition_product_semisimple,
)
from .classify import (
    ClassificationRow,
    GroupLabel,
    cayley_transform,
    classify_group,
    generate_table,
    multivector_inverse,
    witness_group_property,
)
from .expressions import (
    ParseError,
    eval_expression,
    evaluate,
    format_expression,
    parse_expression,
)
from .verify import Report, run_suite, signatures_up_to

__version__ = "0.1.0"

__all__ = [
    "MAX_DIMENSION",
    "Multivector",
    "Signature",
    "SignatureMismatchError",
    "blade_indices",
    "blade_name",
    "blade_product",
    "blade_square_sign",
    "clifford_mul",
    "commutation_sign",
    "conjugation",
    "dual_pairing",
    "grade_involution",
    "inner",
    "left_mul_matrix",
    "mask_from_indices",
    "metric_involution",
    "metric_involution_vector",
    "reversion",
    "sort_invlex",
    "transposition",
    "wedge",
    "AlgebraClass",
    "AlgebraData",
    "IdempotentFactorization",
    "classify_algebra",
    "clidata",
    "primitive_idempotent",
    "radon_hurwitz",
    "GroupElement",
    "Subgroup",
    "Theorem1Report",
    "centralizer",
    "field_group",
    "idempotent_group",
    "stabilizer",
    "transversal",
    "vee_group",
    "verify_theorem1",
    "BetaForm",
    "NotInIdealError",
    "SemisimpleStructures",
    "SpinorBasis",
    "SpinorMatrix",
    "beta_products",
    "conjugate_transpose",
    "decompose_in_basis",
    "diagonal_scale",
    "is_field_element",
    "semisimple_structures",
    "spinor_basis",
    "spinor_matrix",
    "spinor_project",
    "transposition_product",
    "transposition_product_semisimple",
    "ClassificationRow",
    "GroupLabel",
    "cayley_transform",
    "classify_group",
    "generate_table",
    "multivector_inverse",
    "witness_group_property",
    "ParseError",
    "eval_expression",
    "evaluate",
    "format_expression",
    "parse_expression",
    "Report",
    "run_suite",
    "signatures_up_to",
]
