"""Inner automorphisms ``q -> u q u^-1`` and their orthogonal 4x4 matrices.

The map depends on ``u`` only up to a nonzero scale, so ``u`` need not be a
unit quaternion; dividing by ``norm_sq(u)`` keeps every result rational.
"""

from __future__ import annotations

from dataclasses import dataclass

from quatrep.enumeration import HamiltonTriple
from quatrep.errors import DomainError
from quatrep.mat4 import Mat4, mat_mul, transpose
from quatrep.quaternion import H, J, K, Quaternion, conjugate, inverse, norm_sq, quat_mul
from quatrep.reps import left_rep, right_rep

MINUS_ONE = Quaternion(-1)


def _require_nonzero(u: Quaternion) -> None:
    if u.is_zero():
        raise DomainError("rotation quaternion u must be nonzero")


def conjugate_by(u: Quaternion, q: Quaternion) -> Quaternion:
    _require_nonzero(u)
    return quat_mul(quat_mul(u, q), inverse(u))


def conjugation_matrix(u: Quaternion) -> Mat4:
    """Matrix ``U`` with ``U vec(q) = vec(u q u^-1)``; orthogonal, fixes e0."""
    _require_nonzero(u)
    return mat_mul(left_rep(u), right_rep(conjugate(u))) * (1 / norm_sq(u))


def transform_system(u: Quaternion, system: HamiltonTriple) -> HamiltonTriple:
    """Apply ``M -> U M U^T`` to each member; the result is re-validated."""
    rot = conjugation_matrix(u)
    rot_t = transpose(rot)
    moved = [mat_mul(mat_mul(rot, m), rot_t) for m in system.matrices]
    return HamiltonTriple.labelled(*moved)


@dataclass(frozen=True)
class RotatedUnits:
    h_u: Quaternion
    j_u: Quaternion
    k_u: Quaternion
    u: Quaternion

    def relations_hold(self) -> bool:
        h, j, k = self.h_u, self.j_u, self.k_u
        return (
            quat_mul(h, h) == MINUS_ONE
            and quat_mul(j, j) == MINUS_ONE
            and quat_mul(k, k) == MINUS_ONE
            and quat_mul(quat_mul(h, j), k) == MINUS_ONE
        )


def rotated_units(u: Quaternion) -> RotatedUnits:
    _require_nonzero(u)
    return RotatedUnits(conjugate_by(u, H), conjugate_by(u, J), conjugate_by(u, K), u)
