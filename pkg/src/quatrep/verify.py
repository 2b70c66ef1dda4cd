"""Seeded property suites over the library's algebraic laws.

Every suite runs its exhaustive basis checks regardless of ``samples``, then
``samples`` randomized rational cases from ``random.Random(seed)``. A failing
check reports the first counterexample it met.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Callable, Iterable

from quatrep import autos
from quatrep.enumeration import (
    enumerate_skew_plus_one_first_row,
    enumerate_systems,
    enumerate_triplets,
)
from quatrep.mat4 import IDENTITY, NEG_IDENTITY, ZERO, Mat4, determinant, is_orthogonal, mat_mul, transpose
from quatrep.quaternion import BASIS, ONE, H, J, K, Quaternion, norm_sq, quat_add, quat_mul
from quatrep.reps import Side, act, left_rep, right_rep

RepFn = Callable[[Quaternion], Mat4]

SUITES = ("reps", "commutator", "hamilton", "autos")


@dataclass(frozen=True)
class VerificationVerdict:
    check_name: str
    passed: bool
    detail: str

    def __post_init__(self) -> None:
        if not self.passed and not self.detail:
            raise ValueError("a failed verdict needs a counterexample detail")

    def to_json(self) -> dict:
        return {"check": self.check_name, "passed": self.passed, "detail": self.detail}


def random_rational(rng: random.Random, span: int = 12, max_den: int = 8) -> Fraction:
    return Fraction(rng.randint(-span, span), rng.randint(1, max_den))


def random_quaternion(rng: random.Random) -> Quaternion:
    return Quaternion(*(random_rational(rng) for _ in range(4)))


def random_nonzero_quaternion(rng: random.Random) -> Quaternion:
    while True:
        q = random_quaternion(rng)
        if not q.is_zero():
            return q


def _check(name: str, cases: Iterable, predicate: Callable[..., bool], ok_detail: str) -> VerificationVerdict:
    for case in cases:
        if not predicate(*case):
            shown = ", ".join(f"({c.to_text()})" if isinstance(c, Quaternion) else str(c) for c in case)
            return VerificationVerdict(name, False, f"counterexample: {shown}")
    return VerificationVerdict(name, True, ok_detail)


def _fact(name: str, ok: bool, detail: str) -> VerificationVerdict:
    return VerificationVerdict(name, ok, detail if ok else f"failed: {detail}")


# ---------------------------------------------------------------- reps

def suite_reps(rng: random.Random, samples: int, left: RepFn = left_rep, right: RepFn = right_rep) -> list[VerificationVerdict]:
    pairs = [(random_quaternion(rng), random_quaternion(rng)) for _ in range(samples)]
    triples = [(random_quaternion(rng), random_quaternion(rng), random_quaternion(rng)) for _ in range(samples)]
    basis_pairs = list(product(BASIS, repeat=2))
    lh, lj, lk = left(H), left(J), left(K)
    rh, rj, rk = right(H), right(J), right(K)
    verdicts = [
        _fact(
            "reps.operator_relations",
            all(mat_mul(m, m) == NEG_IDENTITY for m in (lh, lj, lk, rh, rj, rk))
            and mat_mul(mat_mul(lh, lj), lk) == NEG_IDENTITY
            and mat_mul(mat_mul(rk, rj), rh) == NEG_IDENTITY,
            "L_h^2 = L_j^2 = L_k^2 = R_h^2 = R_j^2 = R_k^2 = L_h L_j L_k = R_k R_j R_h = -I",
        ),
        _check(
            "reps.identity",
            [(ONE,)],
            lambda one: left(one) == IDENTITY and right(one) == IDENTITY,
            "L_1 = R_1 = I",
        ),
    ]
    for label, cases in (("basis", basis_pairs), ("random", pairs)):
        verdicts.append(_check(
            f"reps.homomorphism.{label}", cases,
            lambda q, r: left(quat_mul(q, r)) == mat_mul(left(q), left(r)),
            f"{len(cases)} pairs: L(qq') = L(q)L(q')",
        ))
        verdicts.append(_check(
            f"reps.antihomomorphism.{label}", cases,
            lambda p, r: right(quat_mul(p, r)) == mat_mul(right(r), right(p)),
            f"{len(cases)} pairs: R(pp') = R(p')R(p)",
        ))
    verdicts.append(_check(
        "reps.operator_action", triples,
        lambda q, p, psi: act(left(q), psi) == quat_mul(q, psi) and act(right(p), psi) == quat_mul(psi, p),
        f"{samples} triples: L_q psi = q psi, R_p psi = psi p",
    ))
    verdicts.append(_check(
        "reps.linearity", pairs,
        lambda q, r: left(quat_add(q, r)) == left(q) + left(r) and right(quat_add(q, r)) == right(q) + right(r),
        f"{samples} pairs",
    ))
    verdicts.append(_check(
        "reps.scaled_orthogonality", [(q,) for q, _ in pairs],
        lambda q: mat_mul(transpose(left(q)), left(q)) == IDENTITY * norm_sq(q)
        and mat_mul(transpose(right(q)), right(q)) == IDENTITY * norm_sq(q),
        f"{samples} samples: M^T M = |q|^2 I",
    ))
    return verdicts


# ---------------------------------------------------------------- commutator

def suite_commutator(rng: random.Random, samples: int, left: RepFn = left_rep, right: RepFn = right_rep) -> list[VerificationVerdict]:
    def vanishes(q: Quaternion, p: Quaternion) -> bool:
        lq, rp = left(q), right(p)
        return mat_mul(lq, rp) - mat_mul(rp, lq) == ZERO

    pairs = [(random_quaternion(rng), random_quaternion(rng)) for _ in range(samples)]
    return [
        _check("commutator.basis", product(BASIS, repeat=2), vanishes, "16 basis pairs: [L_q, R_p] = 0"),
        _check("commutator.random", pairs, vanishes, f"{samples} pairs: [L_q, R_p] = 0"),
    ]


# ---------------------------------------------------------------- hamilton

# Independent integer re-derivation: generator matrices come from a unit
# multiplication table, not from reps, and products use plain int lists.
_UNIT_TABLE = {
    # (a, b) -> (sign, index) for e_a e_b, indices 0..3 = 1, h, j, k
    (0, 0): (1, 0), (0, 1): (1, 1), (0, 2): (1, 2), (0, 3): (1, 3),
    (1, 0): (1, 1), (1, 1): (-1, 0), (1, 2): (1, 3), (1, 3): (-1, 2),
    (2, 0): (1, 2), (2, 1): (-1, 3), (2, 2): (-1, 0), (2, 3): (1, 1),
    (3, 0): (1, 3), (3, 1): (1, 2), (3, 2): (-1, 1), (3, 3): (-1, 0),
}


def _int_generator(side: Side, unit_index: int, sign: int) -> tuple[tuple[int, ...], ...]:
    cols = []
    for b in range(4):
        s, idx = _UNIT_TABLE[(unit_index, b)] if side is Side.LEFT else _UNIT_TABLE[(b, unit_index)]
        col = [0] * 4
        col[idx] = sign * s
        cols.append(col)
    return tuple(tuple(cols[c][r] for c in range(4)) for r in range(4))


def _int_mul(a, b):
    return tuple(tuple(sum(a[i][t] * b[t][j] for t in range(4)) for j in range(4)) for i in range(4))


_INT_NEG_I = tuple(tuple(-int(i == j) for j in range(4)) for i in range(4))


def _as_int(m) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(int(x) for x in row) for row in m.rows)


def independent_triplet_survivors() -> set:
    gens = [
        _int_generator(side, u, s)
        for side in (Side.LEFT, Side.RIGHT) for u in (1, 2, 3) for s in (1, -1)
    ]
    found = set()
    for a, b, c in product(gens, repeat=3):
        if all(_int_mul(x, x) == _INT_NEG_I for x in (a, b, c)) and _int_mul(_int_mul(a, b), c) == _INT_NEG_I:
            found.add((a, b, c))
    return found


def suite_hamilton(rng: random.Random, samples: int) -> list[VerificationVerdict]:
    skew = enumerate_skew_plus_one_first_row()
    negated_units = {-rep for side_rep in (left_rep, right_rep) for rep in map(side_rep, (H, J, K))}
    systems = enumerate_systems()
    trip = enumerate_triplets()
    sides = [s.side() for s in trip.survivors]
    survivor_set = {tuple(_as_int(m) for m in s.matrices) for s in trip.survivors}
    sign_flip_ok = all(
        tuple(_as_int(m) if k == skip else tuple(tuple(-x for x in r) for r in _as_int(m)) for k, m in enumerate(s.matrices))
        in survivor_set
        for s in trip.survivors for skip in range(3)
    )
    return [
        _fact("hamilton.skew_count", skew.count == 6 and skew.candidates_examined == 384,
              f"{skew.count} of {skew.candidates_examined} signed permutations survive (expected 6 of 384)"),
        _fact("hamilton.skew_are_negated_units", set(skew.survivors) == negated_units,
              "survivors are exactly -L_h, -L_j, -L_k, -R_h, -R_j, -R_k"),
        _fact("hamilton.systems", systems.count == 2
              and sorted(str(s.side()) for s in systems.survivors) == sorted([str(Side.LEFT), str(Side.RIGHT)])
              and all(lab.sign == -1 for s in systems.survivors for lab in s.labels),
              f"{systems.count} systems: one of negated left units, one of negated right units"),
        _fact("hamilton.triplet_count", trip.count == 48 and trip.candidates_examined == 1728,
              f"{trip.count} of {trip.candidates_examined} ordered triples survive (expected 48 of 1728)"),
        _fact("hamilton.triplet_sides", sides.count(Side.LEFT) == 24 and sides.count(Side.RIGHT) == 24,
              f"{sides.count(Side.LEFT)} left / {sides.count(Side.RIGHT)} right"),
        _fact("hamilton.third_is_product", all(mat_mul(s.first, s.second) == s.third for s in trip.survivors),
              "C = AB for every survivor"),
        _fact("hamilton.anticommute",
              all(mat_mul(s.first, s.second) == -mat_mul(s.second, s.first) for s in trip.survivors),
              "AB = -BA for every survivor"),
        _fact("hamilton.sign_flip_closure", sign_flip_ok, "flipping two signs maps survivors to survivors"),
        _fact("hamilton.oracle_equivalence", survivor_set == independent_triplet_survivors(),
              "independent integer predicate yields the same 48 survivors"),
    ]


# ---------------------------------------------------------------- autos

_BASIS_ROTORS = (ONE, H, J, K, Quaternion(1, 1), Quaternion(1, 0, 1), Quaternion(1, 0, 0, 1), Quaternion(1, 1, 1, 1))


def suite_autos(rng: random.Random, samples: int) -> list[VerificationVerdict]:
    us = list(_BASIS_ROTORS) + [random_nonzero_quaternion(rng) for _ in range(samples)]
    pairs = [(random_quaternion(rng), random_quaternion(rng)) for _ in range(samples)]
    systems = enumerate_systems().survivors
    e0 = (1, 0, 0, 0)

    def block_structure(u: Quaternion) -> bool:
        m = autos.conjugation_matrix(u)
        return (
            is_orthogonal(m)
            and tuple(m.apply(e0)) == e0
            and m.rows[0] == e0
            and determinant(m) == 1
        )

    def matrix_matches_map(u: Quaternion, q: Quaternion) -> bool:
        return act(autos.conjugation_matrix(u), q) == autos.conjugate_by(u, q)

    def keeps_systems(u: Quaternion) -> bool:
        try:
            for s in systems:
                autos.transform_system(u, s)
        except ValueError:
            return False
        return True

    def auto_law(u: Quaternion, p: Quaternion, q: Quaternion) -> bool:
        return autos.conjugate_by(u, quat_mul(p, q)) == quat_mul(autos.conjugate_by(u, p), autos.conjugate_by(u, q))

    def composition(u: Quaternion, v: Quaternion) -> bool:
        return autos.conjugation_matrix(quat_mul(u, v)) == mat_mul(autos.conjugation_matrix(u), autos.conjugation_matrix(v))

    def scale_invariance(u: Quaternion, lam: Fraction) -> bool:
        return autos.conjugation_matrix(u.scale(lam)) == autos.conjugation_matrix(u)

    n = len(us)
    triples = [(us[i], p, q) for i, (p, q) in zip(range(len(_BASIS_ROTORS), n), pairs)]
    vpairs = [(us[i], us[(i + 1) % n]) for i in range(n)]
    lambdas = [(u, random_rational(rng, max_den=5) or Fraction(3, 2)) for u in us]
    return [
        _check("autos.orthogonal_fixed_e0_det1", [(u,) for u in us], block_structure,
               f"{n} rotors: U orthogonal, U e0 = e0, det U = 1"),
        _check("autos.matrix_matches_map", [(u, q) for u in us for q in BASIS[1:]] + [(u, p) for u, (p, _) in zip(us, pairs)],
               matrix_matches_map,
               f"{n} rotors: U vec(q) = vec(u q u^-1) on h, j, k and a random q"),
        _check("autos.rotated_units", [(u,) for u in us], lambda u: autos.rotated_units(u).relations_hold(),
               f"{n} rotors: h_u^2 = j_u^2 = k_u^2 = h_u j_u k_u = -1"),
        _check("autos.transform_system", [(u,) for u in us], keeps_systems,
               f"{n} rotors x {len(systems)} systems stay Hamiltonian under U M U^T"),
        _check("autos.automorphism_law", triples, auto_law, f"{len(triples)} triples"),
        _check("autos.composition", vpairs, composition, f"{len(vpairs)} pairs: U(uv) = U(u)U(v)"),
        _check("autos.scale_invariance", lambdas, scale_invariance, f"{len(lambdas)} rotors"),
    ]


def run_suite(
    suite: str,
    seed: int = 0,
    samples: int = 100,
    left: RepFn = left_rep,
    right: RepFn = right_rep,
) -> list[VerificationVerdict]:
    """Run one named suite (or ``"all"``) deterministically from ``seed``."""
    if samples < 1:
        raise ValueError("samples must be >= 1")
    names = SUITES if suite == "all" else (suite,)
    unknown = [n for n in names if n not in SUITES]
    if unknown:
        raise ValueError(f"unknown suite {unknown[0]!r}; choose from all, {', '.join(SUITES)}")
    verdicts: list[VerificationVerdict] = []
    for name in names:
        rng = random.Random(f"{seed}:{name}")
        if name == "reps":
            verdicts += suite_reps(rng, samples, left, right)
        elif name == "commutator":
            verdicts += suite_commutator(rng, samples, left, right)
        elif name == "hamilton":
            verdicts += suite_hamilton(rng, samples)
        else:
            verdicts += suite_autos(rng, samples)
    return verdicts
