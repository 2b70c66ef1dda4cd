"""Exhaustive searches over signed permutation matrices and signed generators.

The search spaces are tiny (384 signed permutations, 12**3 ordered generator
triples), so every candidate is materialized and checked; nothing is pruned.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations, product
from math import comb
from typing import Any, Optional, Sequence

from quatrep.errors import PreconditionError
from quatrep.mat4 import (
    NEG_IDENTITY,
    Mat4,
    is_signed_permutation,
    is_skew_symmetric,
    mat_mul,
    signed_permutation_matrix,
)
from quatrep.quaternion import H, J, K
from quatrep.reps import Side, rep

UNITS = {"h": H, "j": J, "k": K}

EXPECTED_SKEW = 6
EXPECTED_SYSTEMS = 2
EXPECTED_TRIPLETS = 48


@dataclass(frozen=True, order=True)
class GeneratorLabel:
    """A signed operator such as ``-R_k``."""

    side: Side = field(compare=False)
    unit: str = field(compare=False)
    sign: int = field(compare=False)
    _order: int = field(init=False, repr=False, compare=True)

    def __post_init__(self) -> None:
        if self.unit not in UNITS or self.sign not in (1, -1):
            raise ValueError(f"bad generator label {self.sign} {self.side} {self.unit}")
        sides = (Side.LEFT, Side.RIGHT)
        order = sides.index(self.side) * 6 + "hjk".index(self.unit) * 2 + (self.sign == -1)
        object.__setattr__(self, "_order", order)

    def matrix(self) -> Mat4:
        m = rep(self.side, UNITS[self.unit])
        return m if self.sign == 1 else -m

    def __str__(self) -> str:
        return f"{'+' if self.sign == 1 else '-'}{self.side.letter}_{self.unit}"

    @classmethod
    def parse(cls, text: str) -> GeneratorLabel:
        text = text.strip()
        sign = -1 if text.startswith("-") else 1
        body = text.lstrip("+-")
        side = {"L": Side.LEFT, "R": Side.RIGHT}[body[0]]
        return cls(side, body[-1], sign)


SIGNED_GENERATORS: tuple[GeneratorLabel, ...] = tuple(
    GeneratorLabel(side, unit, sign)
    for side in (Side.LEFT, Side.RIGHT)
    for unit in "hjk"
    for sign in (1, -1)
)


@lru_cache(maxsize=1)
def _generator_lookup() -> dict[Mat4, GeneratorLabel]:
    return {label.matrix(): label for label in SIGNED_GENERATORS}


def identify(m: Mat4) -> Optional[GeneratorLabel]:
    """Return the signed generator whose matrix equals ``m``, or ``None``."""
    return _generator_lookup().get(m)


def matrix_key(m: Mat4) -> tuple[Fraction, ...]:
    return m.entries()


def is_hamiltonian(a: Mat4, b: Mat4, c: Mat4) -> bool:
    """``a^2 = b^2 = c^2 = abc = -I``."""
    return (
        mat_mul(a, a) == NEG_IDENTITY
        and mat_mul(b, b) == NEG_IDENTITY
        and mat_mul(c, c) == NEG_IDENTITY
        and mat_mul(mat_mul(a, b), c) == NEG_IDENTITY
    )


@dataclass(frozen=True)
class HamiltonTriple:
    """An ordered triple of matrices obeying the quaternion unit relations.

    Construction validates the relations and raises
    :class:`PreconditionError` when they fail.
    """

    first: Mat4
    second: Mat4
    third: Mat4
    labels: Optional[tuple[GeneratorLabel, GeneratorLabel, GeneratorLabel]] = None

    def __post_init__(self) -> None:
        if not is_hamiltonian(self.first, self.second, self.third):
            raise PreconditionError("matrices do not satisfy H^2 = J^2 = K^2 = HJK = -I")

    @classmethod
    def labelled(cls, a: Mat4, b: Mat4, c: Mat4) -> HamiltonTriple:
        labels = (identify(a), identify(b), identify(c))
        return cls(a, b, c, labels if all(labels) else None)

    @property
    def matrices(self) -> tuple[Mat4, Mat4, Mat4]:
        return (self.first, self.second, self.third)

    def key(self) -> tuple:
        return tuple(matrix_key(m) for m in self.matrices)

    def side(self) -> Optional[Side]:
        """The common side of all three labels, if there is one."""
        if self.labels is None:
            return None
        sides = {lab.side for lab in self.labels}
        return sides.pop() if len(sides) == 1 else None

    def to_json(self) -> dict[str, Any]:
        return {
            "labels": [str(lab) for lab in self.labels] if self.labels else None,
            "matrices": [m.to_json() for m in self.matrices],
        }


@dataclass
class EnumerationReport:
    target: str
    candidates_examined: int
    survivors: list
    classification: list
    expected_count: Optional[int] = None

    @property
    def count(self) -> int:
        return len(self.survivors)

    @property
    def matches_expected(self) -> bool:
        return self.expected_count is None or self.count == self.expected_count


def all_signed_permutations() -> list[Mat4]:
    """All 4! * 2**4 = 384 signed permutation matrices, in a fixed order."""
    return [
        signed_permutation_matrix(perm, signs)
        for perm in permutations(range(4))
        for signs in product((1, -1), repeat=4)
    ]


def _first_row_pivot(m: Mat4) -> Fraction:
    return next(x for x in m.rows[0] if x != 0)


def _label_sort_key(m: Mat4) -> tuple:
    label = identify(m)
    return (label._order if label else len(SIGNED_GENERATORS), matrix_key(m))


def enumerate_skew_plus_one_first_row() -> EnumerationReport:
    candidates = all_signed_permutations()
    survivors = [
        m for m in candidates
        if is_skew_symmetric(m) and is_signed_permutation(m) and _first_row_pivot(m) == 1
    ]
    survivors.sort(key=_label_sort_key)
    return EnumerationReport(
        target="skew",
        candidates_examined=len(candidates),
        survivors=survivors,
        classification=[identify(m) for m in survivors],
        expected_count=EXPECTED_SKEW,
    )


def canonical_ordering(mats: Sequence[Mat4]) -> Optional[tuple[Mat4, Mat4, Mat4]]:
    """Lexicographically smallest ordering satisfying the Hamilton relations."""
    valid = [p for p in permutations(mats) if is_hamiltonian(*p)]
    if not valid:
        return None
    return min(valid, key=lambda p: tuple(matrix_key(m) for m in p))


def _system_sort_key(system: HamiltonTriple) -> tuple:
    side = system.side()
    return ({Side.LEFT: 0, Side.RIGHT: 1}.get(side, 2), system.key())


def group_into_hamilton_systems(pool: Sequence[Mat4]) -> list[HamiltonTriple]:
    """Split ``pool`` into Hamiltonian triples.

    Returns every triple that occurs in some partition of the whole pool into
    Hamiltonian triples, each in canonical order; left-action systems first.
    """
    for m in pool:
        if mat_mul(m, m) != NEG_IDENTITY:
            raise PreconditionError("every pool element must square to -I")
    pool = list(pool)
    triples: dict[frozenset[int], tuple[Mat4, Mat4, Mat4]] = {}
    for idx in combinations(range(len(pool)), 3):
        ordered = canonical_ordering([pool[i] for i in idx])
        if ordered is not None:
            triples[frozenset(idx)] = ordered

    used_in_cover: set[frozenset[int]] = set()

    def cover(remaining: frozenset[int], chosen: list[frozenset[int]]) -> None:
        if not remaining:
            used_in_cover.update(chosen)
            return
        pivot = min(remaining)
        for t in triples:
            if pivot in t and t <= remaining:
                cover(remaining - t, chosen + [t])

    if len(pool) % 3 == 0:
        cover(frozenset(range(len(pool))), [])
    systems = [HamiltonTriple.labelled(*triples[t]) for t in used_in_cover]
    systems.sort(key=_system_sort_key)
    return systems


def enumerate_systems() -> EnumerationReport:
    pool = enumerate_skew_plus_one_first_row().survivors
    systems = group_into_hamilton_systems(pool)
    return EnumerationReport(
        target="systems",
        candidates_examined=comb(len(pool), 3),
        survivors=systems,
        classification=[s.labels for s in systems],
        expected_count=EXPECTED_SYSTEMS,
    )


def enumerate_triplets() -> EnumerationReport:
    """Brute force over all ordered triples of the 12 signed generators."""
    gens = [(label, label.matrix()) for label in SIGNED_GENERATORS]
    squares_ok = {label: mat_mul(m, m) == NEG_IDENTITY for label, m in gens}
    survivors = []
    examined = 0
    for (la, a), (lb, b) in product(gens, repeat=2):
        ab = mat_mul(a, b)
        for lc, c in gens:
            examined += 1
            if not (squares_ok[la] and squares_ok[lb] and squares_ok[lc]):
                continue
            if mat_mul(ab, c) == NEG_IDENTITY:
                survivors.append(HamiltonTriple(a, b, c, (la, lb, lc)))
    return EnumerationReport(
        target="triplets",
        candidates_examined=examined,
        survivors=survivors,
        classification=[s.labels for s in survivors],
        expected_count=EXPECTED_TRIPLETS,
    )


ENUMERATIONS = {
    "skew": enumerate_skew_plus_one_first_row,
    "systems": enumerate_systems,
    "triplets": enumerate_triplets,
}
