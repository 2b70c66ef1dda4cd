from fractions import Fraction
from itertools import product

from hypothesis import given

from conftest import quaternions
from oracles import left_matrix_int, qmul, right_matrix_int
from quatrep import ONE, H, J, K, Quaternion, Side, apply_operator, commutator, devectorize, left_rep, right_rep, vectorize
from quatrep.mat4 import IDENTITY, NEG_IDENTITY, ZERO, Mat4, mat_mul, transpose
from quatrep.quaternion import BASIS, norm_sq, quat_add, quat_mul
from quatrep.reps import QuatVector, act


def test_left_rep_examples():
    assert left_rep(H) == Mat4.from_rows([[0, -1, 0, 0], [1, 0, 0, 0], [0, 0, 0, -1], [0, 0, 1, 0]])
    assert left_rep(ONE) == IDENTITY
    assert left_rep(J) == Mat4.from_rows([[0, 0, -1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, -1, 0, 0]])


def test_right_rep_examples():
    assert right_rep(H) == Mat4.from_rows([[0, -1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, -1, 0]])
    assert right_rep(ONE) == IDENTITY
    assert right_rep(K) == Mat4.from_rows([[0, 0, 0, -1], [0, 0, 1, 0], [0, -1, 0, 0], [1, 0, 0, 0]])


def test_unit_matrices_match_operator_oracle():
    for q, name in zip((H, J, K), "hjk"):
        assert [list(map(int, r)) for r in left_rep(q).rows] == left_matrix_int(name).tolist()
        assert [list(map(int, r)) for r in right_rep(q).rows] == right_matrix_int(name).tolist()


def test_vectorize_examples():
    assert tuple(vectorize(ONE)) == (1, 0, 0, 0)
    assert tuple(vectorize(Quaternion(0, 1, 2))) == (0, 1, 2, 0)
    assert devectorize(QuatVector(1, 2, 3, 4)) == Quaternion(1, 2, 3, 4)


@given(quaternions)
def test_vectorize_round_trip(q):
    assert devectorize(vectorize(q)) == q


def test_apply_operator_examples():
    assert apply_operator(Side.LEFT, H, J) == K
    assert apply_operator(Side.RIGHT, H, J) == -K
    p = Quaternion(3, Fraction(-1, 2), 0, 7)
    assert apply_operator(Side.RIGHT, p, ONE) == p


@given(quaternions, quaternions, quaternions)
def test_operator_action_matches_matrices(q, p, psi):
    assert act(left_rep(q), psi) == apply_operator(Side.LEFT, q, psi)
    assert act(right_rep(p), psi) == apply_operator(Side.RIGHT, p, psi)
    assert act(left_rep(q), psi).components == qmul(q.components, psi.components)


def test_commutator_examples():
    assert commutator(H, H) == ZERO
    assert commutator(ONE, Quaternion(2, 3, -1, 5)) == ZERO
    assert commutator(Quaternion(1, 2, 3, 4), Quaternion(5, -1, 1, -1)) == ZERO


def test_left_and_right_do_not_commute_among_themselves():
    # the commutator vanishing is specific to mixed sides
    assert mat_mul(left_rep(H), left_rep(J)) != mat_mul(left_rep(J), left_rep(H))


@given(quaternions, quaternions)
def test_commutator_vanishes(q, p):
    assert commutator(q, p) == ZERO


def test_homomorphism_on_basis():
    for a, b in product(BASIS, repeat=2):
        assert left_rep(quat_mul(a, b)) == mat_mul(left_rep(a), left_rep(b))
        assert right_rep(quat_mul(a, b)) == mat_mul(right_rep(b), right_rep(a))


@given(quaternions, quaternions)
def test_homomorphism(q, r):
    assert left_rep(quat_mul(q, r)) == mat_mul(left_rep(q), left_rep(r))


@given(quaternions, quaternions)
def test_antihomomorphism(p, r):
    assert right_rep(quat_mul(p, r)) == mat_mul(right_rep(r), right_rep(p))


def test_operator_hamilton_relations():
    for m in (left_rep(H), left_rep(J), left_rep(K), right_rep(H), right_rep(J), right_rep(K)):
        assert mat_mul(m, m) == NEG_IDENTITY
    assert mat_mul(mat_mul(left_rep(H), left_rep(J)), left_rep(K)) == NEG_IDENTITY
    assert mat_mul(mat_mul(right_rep(K), right_rep(J)), right_rep(H)) == NEG_IDENTITY
    # the unreversed right product is +I
    assert mat_mul(mat_mul(right_rep(H), right_rep(J)), right_rep(K)) == IDENTITY


@given(quaternions)
def test_scaled_orthogonality(q):
    assert mat_mul(transpose(left_rep(q)), left_rep(q)) == IDENTITY * norm_sq(q)
    assert mat_mul(transpose(right_rep(q)), right_rep(q)) == IDENTITY * norm_sq(q)


@given(quaternions, quaternions)
def test_linearity(q, r):
    assert left_rep(quat_add(q, r)) == left_rep(q) + left_rep(r)
    assert right_rep(quat_add(q, r)) == right_rep(q) + right_rep(r)
