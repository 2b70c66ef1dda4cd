"""Fixed-size 4x4 matrices over the rationals.

Rows are indexed 0-3 in the component order ``(q0, q1, q2, q3)``, so row 0 is
the row that produces the real part when a matrix acts on a vectorized
quaternion.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from quatrep.errors import ParseError
from quatrep.quaternion import RationalLike, as_rational, format_rational, parse_rational

N = 4
Row = tuple[Fraction, Fraction, Fraction, Fraction]


@dataclass(frozen=True)
class Mat4:
    rows: tuple[Row, Row, Row, Row]

    def __post_init__(self) -> None:
        rows = tuple(tuple(as_rational(x) for x in row) for row in self.rows)
        if len(rows) != N or any(len(r) != N for r in rows):
            raise ValueError("Mat4 needs exactly 4 rows of 4 entries")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[RationalLike]]) -> Mat4:
        return cls(tuple(tuple(r) for r in rows))

    @classmethod
    def identity(cls) -> Mat4:
        return IDENTITY

    @classmethod
    def zero(cls) -> Mat4:
        return ZERO

    def __getitem__(self, idx: tuple[int, int]) -> Fraction:
        i, j = idx
        return self.rows[i][j]

    def __iter__(self) -> Iterator[Row]:
        return iter(self.rows)

    def entries(self) -> tuple[Fraction, ...]:
        """All 16 entries in row-major order."""
        return tuple(x for row in self.rows for x in row)

    def column(self, j: int) -> tuple[Fraction, ...]:
        return tuple(row[j] for row in self.rows)

    def __matmul__(self, other: Mat4) -> Mat4:
        return mat_mul(self, other)

    def __add__(self, other: Mat4) -> Mat4:
        return Mat4(tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)))

    def __sub__(self, other: Mat4) -> Mat4:
        return Mat4(tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)))

    def __neg__(self) -> Mat4:
        return Mat4(tuple(tuple(-a for a in r) for r in self.rows))

    def __mul__(self, factor: RationalLike) -> Mat4:
        f = as_rational(factor)
        return Mat4(tuple(tuple(f * a for a in r) for r in self.rows))

    __rmul__ = __mul__

    @property
    def T(self) -> Mat4:
        return transpose(self)

    def apply(self, vector: Sequence[RationalLike]) -> tuple[Fraction, ...]:
        """Matrix-vector product with a length-4 column vector."""
        v = [as_rational(x) for x in vector]
        return tuple(sum((a * b for a, b in zip(row, v)), Fraction(0)) for row in self.rows)

    def is_integral(self) -> bool:
        return all(x.denominator == 1 for x in self.entries())

    def to_json(self) -> list[list[str]]:
        return [[format_rational(x) for x in row] for row in self.rows]

    @classmethod
    def from_json(cls, data: Sequence[Sequence[RationalLike]]) -> Mat4:
        if len(data) != N or any(len(r) != N for r in data):
            raise ParseError("matrix JSON must be 4 arrays of 4 entries", str(data), 0)
        return cls.from_rows(
            [parse_rational(x) if isinstance(x, str) else x for x in row] for row in data
        )

    def to_text(self) -> str:
        """Aligned grid; bare integers when every entry is integral."""
        cells = [[format_rational(x) for x in row] for row in self.rows]
        width = max(len(c) for row in cells for c in row)
        return "\n".join(" ".join(c.rjust(width) for c in row) for row in cells)

    def __str__(self) -> str:
        return self.to_text()


def mat_mul(lhs: Mat4, rhs: Mat4) -> Mat4:
    cols = [rhs.column(j) for j in range(N)]
    return Mat4(
        tuple(
            tuple(sum((a * b for a, b in zip(row, col)), Fraction(0)) for col in cols)
            for row in lhs.rows
        )
    )


def transpose(m: Mat4) -> Mat4:
    return Mat4(tuple(m.column(j) for j in range(N)))


def is_skew_symmetric(m: Mat4) -> bool:
    return all(m.rows[i][j] == -m.rows[j][i] for i in range(N) for j in range(i, N))


def is_signed_permutation(m: Mat4) -> bool:
    for line in (*m.rows, *(m.column(j) for j in range(N))):
        nonzero = [x for x in line if x != 0]
        if len(nonzero) != 1 or abs(nonzero[0]) != 1:
            return False
    return True


def is_orthogonal(m: Mat4) -> bool:
    return mat_mul(transpose(m), m) == IDENTITY


def _minor(rows: Sequence[Sequence[Fraction]], col: int) -> list[list[Fraction]]:
    return [list(r[:col]) + list(r[col + 1:]) for r in rows[1:]]


def _cofactor_det(rows: Sequence[Sequence[Fraction]]) -> Fraction:
    if len(rows) == 1:
        return rows[0][0]
    total = Fraction(0)
    for col, a in enumerate(rows[0]):
        if a:
            sign = -1 if col % 2 else 1
            total += sign * a * _cofactor_det(_minor(rows, col))
    return total


def determinant(m: Mat4) -> Fraction:
    """Determinant by cofactor expansion along the first row."""
    return _cofactor_det(m.rows)


def signed_permutation_matrix(perm: Sequence[int], signs: Sequence[int]) -> Mat4:
    """Row ``i`` has ``signs[i]`` in column ``perm[i]`` and zeros elsewhere."""
    rows = []
    for i in range(N):
        row = [0] * N
        row[perm[i]] = signs[i]
        rows.append(row)
    return Mat4.from_rows(rows)


def diagonal(values: Sequence[RationalLike]) -> Mat4:
    return Mat4.from_rows([[values[i] if i == j else 0 for j in range(N)] for i in range(N)])


IDENTITY = Mat4(tuple(tuple(Fraction(int(i == j)) for j in range(N)) for i in range(N)))
ZERO = Mat4(tuple(tuple(Fraction(0) for _ in range(N)) for _ in range(N)))
NEG_IDENTITY = Mat4(tuple(tuple(Fraction(-int(i == j)) for j in range(N)) for i in range(N)))
