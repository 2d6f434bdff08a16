"""Exact-arithmetic shuffle and quasi-shuffle Hopf algebras on compositions.

The package provides the two Hopf algebra structures on integer
compositions, the character-induced morphisms between them with their graded
matrices and inverses, truncated multiple zeta series evaluation, a small
expression language, and executable verification suites for every identity
the library asserts.
"""

from .compositions import (
    Composition,
    UNIT,
    WeightMismatchError,
    WordDecodeError,
    coarsenings,
    compositions_up_to,
    decode_word,
    encode_word,
    enumerate_basis,
    is_admissible,
    order_cmp,
    order_key,
    tensor_le,
)
from .elements import (
    Element,
    TensorElement,
    as_element,
    componentwise_product,
    component_weights,
    graded_component,
    tensor_project,
)
from .shuffle_algebra import (
    UnitTermError,
    antipode as shuffle_antipode,
    coproduct as shuffle_coproduct,
    counit as shuffle_counit,
    iterated_coproduct,
    lifted_raise_part,
    lifted_raise_prefix,
    raise_part,
    raise_prefix,
    reduced_coproduct,
    rota_baxter,
    shuffle,
    shuffle_words,
)
from .quasi_shuffle import (
    antipode as quasi_antipode,
    canonical_character,
    coproduct as deconcat_coproduct,
    counit as quasi_counit,
    stuffle,
)
from .morphisms import (
    Character,
    CharacterCheck,
    CoverageError,
    GradedMatrix,
    InvalidCharacterError,
    SingularCharacterError,
    factorial_character,
    induced_morphism,
    induced_morphism_fast,
    morphism_matrix,
    preimage,
    projected_character,
    read_character_file,
    validate_character,
)
from .numeric import (
    DEFAULT_CONFIG,
    DivergentTermError,
    TruncationConfig,
    double_shuffle_residual,
    eval_element,
    zeta_truncated,
)
from .expressions import (
    ExpressionSyntaxError,
    evaluate_expression,
    parse_expression,
)
from .verify import CheckResult, SUITE_NAMES, run_all, run_suite

__version__ = "0.1.0"

__all__ = [
    "Composition",
    "UNIT",
    "WeightMismatchError",
    "WordDecodeError",
    "coarsenings",
    "compositions_up_to",
    "decode_word",
    "encode_word",
    "enumerate_basis",
    "is_admissible",
    "order_cmp",
    "order_key",
    "tensor_le",
    "Element",
    "TensorElement",
    "as_element",
    "componentwise_product",
    "component_weights",
    "graded_component",
    "tensor_project",
    "UnitTermError",
    "shuffle_antipode",
    "shuffle_coproduct",
    "shuffle_counit",
    "iterated_coproduct",
    "lifted_raise_part",
    "lifted_raise_prefix",
    "raise_part",
    "raise_prefix",
    "reduced_coproduct",
    "rota_baxter",
    "shuffle",
    "shuffle_words",
    "quasi_antipode",
    "canonical_character",
    "deconcat_coproduct",
    "quasi_counit",
    "stuffle",
    "Character",
    "CharacterCheck",
    "CoverageError",
    "GradedMatrix",
    "InvalidCharacterError",
    "SingularCharacterError",
    "factorial_character",
    "induced_morphism",
    "induced_morphism_fast",
    "morphism_matrix",
    "preimage",
    "projected_character",
    "read_character_file",
    "validate_character",
    "DEFAULT_CONFIG",
    "DivergentTermError",
    "TruncationConfig",
    "double_shuffle_residual",
    "eval_element",
    "zeta_truncated",
    "ExpressionSyntaxError",
    "evaluate_expression",
    "parse_expression",
    "CheckResult",
    "SUITE_NAMES",
    "run_all",
    "run_suite",
    "__version__",
]
