from itertools import product

import pytest

from oracles import brute_force_skew_first_row_plus_one, brute_force_triplets
from quatrep import H, J, K, PreconditionError, Side, left_rep, right_rep
from quatrep.enumeration import (
    SIGNED_GENERATORS,
    GeneratorLabel,
    HamiltonTriple,
    all_signed_permutations,
    canonical_ordering,
    enumerate_skew_plus_one_first_row,
    enumerate_systems,
    enumerate_triplets,
    group_into_hamilton_systems,
    identify,
    is_hamiltonian,
)
from quatrep.mat4 import IDENTITY, NEG_IDENTITY, Mat4, is_signed_permutation, mat_mul


def _ints(m: Mat4) -> tuple[int, ...]:
    return tuple(int(x) for x in m.entries())


@pytest.fixture(scope="module")
def skew():
    return enumerate_skew_plus_one_first_row()


@pytest.fixture(scope="module")
def triplets():
    return enumerate_triplets()


def test_all_signed_permutations():
    perms = all_signed_permutations()
    assert len(perms) == 384
    assert IDENTITY in perms
    assert len(set(perms)) == 384
    assert all(is_signed_permutation(m) for m in perms)


def test_skew_survivors(skew):
    assert skew.candidates_examined == 384
    assert skew.count == 6
    assert all(mat_mul(m, m) == NEG_IDENTITY for m in skew.survivors)
    expected = {-left_rep(u) for u in (H, J, K)} | {-right_rep(u) for u in (H, J, K)}
    assert set(skew.survivors) == expected
    assert [str(lab) for lab in skew.classification] == ["-L_h", "-L_j", "-L_k", "-R_h", "-R_j", "-R_k"]


def test_skew_survivors_match_brute_force(skew):
    oracle = {tuple(int(x) for x in m.flat) for m in brute_force_skew_first_row_plus_one()}
    assert {_ints(m) for m in skew.survivors} == oracle


def test_two_systems(skew):
    systems = group_into_hamilton_systems(skew.survivors)
    assert len(systems) == 2
    assert [s.side() for s in systems] == [Side.LEFT, Side.RIGHT]
    assert all(lab.sign == -1 for s in systems for lab in s.labels)
    members = [m for s in systems for m in s.matrices]
    assert sorted(map(_ints, members)) == sorted(map(_ints, skew.survivors))


def test_systems_in_the_stated_orders():
    lj, lh, lk = -left_rep(J), -left_rep(H), -left_rep(K)
    assert is_hamiltonian(lj, lh, lk)
    assert not is_hamiltonian(lh, lj, lk)
    rh, rj, rk = -right_rep(H), -right_rep(J), -right_rep(K)
    assert is_hamiltonian(rh, rj, rk)


def test_canonical_ordering_is_minimal_valid_rotation():
    mats = [-left_rep(J), -left_rep(H), -left_rep(K)]
    ordered = canonical_ordering(mats)
    valid = [tuple(mats[i:] + mats[:i]) for i in range(3)]
    assert ordered == min(valid, key=lambda t: tuple(m.entries() for m in t))
    assert canonical_ordering([left_rep(H), right_rep(H), left_rep(J)]) is None


def test_group_into_systems_rejects_bad_pool():
    with pytest.raises(PreconditionError):
        group_into_hamilton_systems([IDENTITY, left_rep(H), left_rep(J)])


def test_group_into_systems_on_other_pools():
    assert group_into_hamilton_systems([]) == []
    units = [left_rep(H), left_rep(J), left_rep(K)]
    (system,) = group_into_hamilton_systems(units)
    assert system.side() is Side.LEFT
    # a pool that cannot be partitioned into Hamiltonian triples
    assert group_into_hamilton_systems([left_rep(H), right_rep(H), left_rep(J)]) == []


def test_enumerate_systems_report():
    report = enumerate_systems()
    assert report.count == 2 and report.matches_expected
    assert report.candidates_examined == 20


def test_identify_examples():
    assert identify(left_rep(H)) == GeneratorLabel(Side.LEFT, "h", 1)
    assert identify(-right_rep(K)) == GeneratorLabel(Side.RIGHT, "k", -1)
    assert identify(IDENTITY) is None


def test_labels_are_twelve_distinct():
    assert len(set(SIGNED_GENERATORS)) == 12
    assert len({lab.matrix() for lab in SIGNED_GENERATORS}) == 12
    for lab in SIGNED_GENERATORS:
        assert identify(lab.matrix()) == lab
        assert GeneratorLabel.parse(str(lab)) == lab


def test_triplet_count(triplets):
    assert triplets.candidates_examined == 1728
    assert triplets.count == 48
    sides = [s.side() for s in triplets.survivors]
    assert sides.count(Side.LEFT) == 24 and sides.count(Side.RIGHT) == 24


def test_triplets_match_brute_force(triplets):
    assert {tuple(_ints(m) for m in s.matrices) for s in triplets.survivors} == brute_force_triplets()


def test_triplet_structure(triplets):
    for s in triplets.survivors:
        assert mat_mul(s.first, s.second) == s.third
        assert mat_mul(s.first, s.second) == -mat_mul(s.second, s.first)
        assert len({s.first, s.second, s.third}) == 3


def test_twelve_by_four_by_one(triplets):
    # each first element admits 4 second elements and then one third
    firsts = {}
    for s in triplets.survivors:
        firsts.setdefault(s.labels[0], []).append(s.labels[1])
    assert len(firsts) == 12
    assert all(len(v) == 4 for v in firsts.values())
    assert len({s.labels[:2] for s in triplets.survivors}) == 48


def test_sign_flip_closure(triplets):
    keys = {s.labels for s in triplets.survivors}
    for s in triplets.survivors:
        for keep in range(3):
            flipped = tuple(
                lab if i == keep else GeneratorLabel(lab.side, lab.unit, -lab.sign)
                for i, lab in enumerate(s.labels)
            )
            assert flipped in keys


def test_mixed_side_pairs_commute():
    for a, b in product(SIGNED_GENERATORS, repeat=2):
        if a.side is not b.side:
            ab = mat_mul(a.matrix(), b.matrix())
            assert ab == mat_mul(b.matrix(), a.matrix())
            assert mat_mul(ab, ab) == IDENTITY


def test_hamilton_triple_validates():
    with pytest.raises(PreconditionError):
        HamiltonTriple(left_rep(H), left_rep(J), left_rep(H))
    t = HamiltonTriple.labelled(left_rep(H), left_rep(J), left_rep(K))
    assert [str(x) for x in t.labels] == ["+L_h", "+L_j", "+L_k"]


def test_enumeration_is_deterministic():
    a = [s.labels for s in enumerate_triplets().survivors]
    b = [s.labels for s in enumerate_triplets().survivors]
    assert a == b
    assert a == sorted(a)
