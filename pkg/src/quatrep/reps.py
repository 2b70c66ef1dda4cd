"""Left and right multiplication operators as 4x4 real matrices.

``left_rep(q)`` is the matrix of ``psi -> q psi`` and ``right_rep(p)`` the
matrix of ``psi -> psi p``, both acting on the component vector
``(psi0, psi1, psi2, psi3)``. These two maps are the single source of truth
for every matrix the package compares against.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from quatrep.mat4 import Mat4, mat_mul
from quatrep.quaternion import Quaternion, quat_mul


class Side(enum.Enum):
    LEFT = "left"
    RIGHT = "right"

    @property
    def letter(self) -> str:
        return "L" if self is Side.LEFT else "R"


@dataclass(frozen=True)
class QuatVector:
    v0: Fraction
    v1: Fraction
    v2: Fraction
    v3: Fraction

    def __iter__(self):
        return iter((self.v0, self.v1, self.v2, self.v3))


def left_rep(q: Quaternion) -> Mat4:
    q0, q1, q2, q3 = q.components
    return Mat4((
        (q0, -q1, -q2, -q3),
        (q1, q0, -q3, q2),
        (q2, q3, q0, -q1),
        (q3, -q2, q1, q0),
    ))


def right_rep(p: Quaternion) -> Mat4:
    p0, p1, p2, p3 = p.components
    return Mat4((
        (p0, -p1, -p2, -p3),
        (p1, p0, p3, -p2),
        (p2, -p3, p0, p1),
        (p3, p2, -p1, p0),
    ))


def rep(side: Side, q: Quaternion) -> Mat4:
    return left_rep(q) if side is Side.LEFT else right_rep(q)


def vectorize(psi: Quaternion) -> QuatVector:
    return QuatVector(*psi.components)


def devectorize(v: QuatVector) -> Quaternion:
    return Quaternion(v.v0, v.v1, v.v2, v.v3)


def act(m: Mat4, psi: Quaternion) -> Quaternion:
    """Apply a matrix to a quaternion through its component vector."""
    return devectorize(QuatVector(*m.apply(tuple(vectorize(psi)))))


def apply_operator(side: Side, op_arg: Quaternion, psi: Quaternion) -> Quaternion:
    """``L_q psi = q psi`` for LEFT, ``R_p psi = psi p`` for RIGHT."""
    if side is Side.LEFT:
        return quat_mul(op_arg, psi)
    return quat_mul(psi, op_arg)


def commutator(q: Quaternion, p: Quaternion) -> Mat4:
    lq, rp = left_rep(q), right_rep(p)
    return mat_mul(lq, rp) - mat_mul(rp, lq)
