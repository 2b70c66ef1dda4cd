"""Exact quaternion algebra, its 4x4 real matrix representations, and
exhaustive checks of the Hamiltonian unit systems they contain."""

from quatrep.errors import DomainError, ParseError, PreconditionError
from quatrep.quaternion import (
    ONE,
    ZERO,
    H,
    J,
    K,
    Quaternion,
    conjugate,
    inverse,
    norm_sq,
    quat_add,
    quat_mul,
)
from quatrep.mat4 import (
    Mat4,
    determinant,
    is_orthogonal,
    is_signed_permutation,
    is_skew_symmetric,
    mat_mul,
    transpose,
)
from quatrep.reps import (
    Side,
    apply_operator,
    commutator,
    devectorize,
    left_rep,
    right_rep,
    vectorize,
)
from quatrep.enumeration import (
    EnumerationReport,
    GeneratorLabel,
    HamiltonTriple,
    all_signed_permutations,
    enumerate_skew_plus_one_first_row,
    enumerate_triplets,
    group_into_hamilton_systems,
    identify,
)
from quatrep.autos import (
    RotatedUnits,
    conjugate_by,
    conjugation_matrix,
    rotated_units,
    transform_system,
)

__version__ = "0.1.0"

__all__ = [
    "DomainError",
    "ParseError",
    "PreconditionError",
    "ONE",
    "ZERO",
    "H",
    "J",
    "K",
    "Quaternion",
    "conjugate",
    "inverse",
    "norm_sq",
    "quat_add",
    "quat_mul",
    "Mat4",
    "determinant",
    "is_orthogonal",
    "is_signed_permutation",
    "is_skew_symmetric",
    "mat_mul",
    "transpose",
    "Side",
    "apply_operator",
    "commutator",
    "devectorize",
    "left_rep",
    "right_rep",
    "vectorize",
    "EnumerationReport",
    "GeneratorLabel",
    "HamiltonTriple",
    "all_signed_permutations",
    "enumerate_skew_plus_one_first_row",
    "enumerate_triplets",
    "group_into_hamilton_systems",
    "identify",
    "RotatedUnits",
    "conjugate_by",
    "conjugation_matrix",
    "rotated_units",
    "transform_system",
]
