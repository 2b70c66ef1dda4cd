"""Exact quaternion arithmetic over the rationals.

Components are stored in basis order ``(1, h, j, k)`` as
:class:`fractions.Fraction`, so every product, inverse and conjugation is
exact and comparisons need no tolerance.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence, Union

from quatrep.errors import DomainError, ParseError

RationalLike = Union[int, Fraction, str]

_RATIONAL_RE = re.compile(r"[+-]?\d+(?:/\d+)?")


def parse_rational(text: str, *, offset: int = 0, source: str | None = None) -> Fraction:
    """Parse an integer or ``num/den`` string. Floats are rejected."""
    source = text if source is None else source
    stripped = text.strip()
    lead = len(text) - len(text.lstrip())
    if not stripped:
        raise ParseError("empty rational", source, offset + lead)
    m = _RATIONAL_RE.fullmatch(stripped)
    if m is None:
        bad = _RATIONAL_RE.match(stripped)
        pos = offset + lead + (bad.end() if bad else 0)
        raise ParseError(f"invalid rational {stripped!r}", source, pos)
    if "/" in stripped and int(stripped.split("/")[1]) == 0:
        raise ParseError("zero denominator", source, offset + lead + stripped.index("/") + 1)
    return Fraction(stripped)


def as_rational(value: RationalLike) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a rational scalar")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


def format_rational(value: Fraction) -> str:
    return str(value)


@dataclass(frozen=True)
class Quaternion:
    """``q0 + q1 h + q2 j + q3 k`` with exact rational coefficients."""

    q0: Fraction = Fraction(0)
    q1: Fraction = Fraction(0)
    q2: Fraction = Fraction(0)
    q3: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        for name in ("q0", "q1", "q2", "q3"):
            object.__setattr__(self, name, as_rational(getattr(self, name)))

    @classmethod
    def from_components(cls, components: Iterable[RationalLike]) -> Quaternion:
        comps = list(components)
        if len(comps) != 4:
            raise ValueError(f"a quaternion needs 4 components, got {len(comps)}")
        return cls(*comps)

    @classmethod
    def real(cls, value: RationalLike) -> Quaternion:
        return cls(value)

    @property
    def components(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.q0, self.q1, self.q2, self.q3)

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.components)

    def is_zero(self) -> bool:
        return not any(self.components)

    def is_real(self) -> bool:
        return not (self.q1 or self.q2 or self.q3)

    def __add__(self, other: Quaternion) -> Quaternion:
        return quat_add(self, other)

    def __sub__(self, other: Quaternion) -> Quaternion:
        return quat_add(self, -other)

    def __neg__(self) -> Quaternion:
        return Quaternion(-self.q0, -self.q1, -self.q2, -self.q3)

    def __mul__(self, other: Quaternion | RationalLike) -> Quaternion:
        if isinstance(other, Quaternion):
            return quat_mul(self, other)
        return self.scale(other)

    def __rmul__(self, other: RationalLike) -> Quaternion:
        return self.scale(other)

    def scale(self, factor: RationalLike) -> Quaternion:
        f = as_rational(factor)
        return Quaternion(f * self.q0, f * self.q1, f * self.q2, f * self.q3)

    def conjugate(self) -> Quaternion:
        return conjugate(self)

    def norm_sq(self) -> Fraction:
        return norm_sq(self)

    def inverse(self) -> Quaternion:
        return inverse(self)

    # text / JSON forms

    @classmethod
    def parse(cls, text: str) -> Quaternion:
        """Parse ``"q0,q1,q2,q3"`` or the text form ``"a+b h+c j+d k"``."""
        if "," in text:
            return _parse_csv_form(text)
        return _parse_text_form(text)

    def to_text(self) -> str:
        parts = [format_rational(self.q0)]
        for coeff, unit in zip((self.q1, self.q2, self.q3), "hjk"):
            sign = "-" if coeff < 0 else "+"
            parts.append(f"{sign}{format_rational(abs(coeff))} {unit}")
        return "".join(parts)

    def to_json(self) -> list[str]:
        return [format_rational(c) for c in self.components]

    @classmethod
    def from_json(cls, data: Sequence[RationalLike]) -> Quaternion:
        return cls.from_components(data)

    def __str__(self) -> str:
        return self.to_text()


def _parse_csv_form(text: str) -> Quaternion:
    pieces = text.split(",")
    if len(pieces) != 4:
        pos = len(text) if len(pieces) < 4 else sum(len(p) + 1 for p in pieces[:4]) - 1
        raise ParseError(f"expected 4 comma-separated components, got {len(pieces)}", text, pos)
    comps = []
    offset = 0
    for piece in pieces:
        comps.append(parse_rational(piece, offset=offset, source=text))
        offset += len(piece) + 1
    return Quaternion(*comps)


_TERM_RE = re.compile(
    r"\s*(?P<sign>[+-])?\s*(?P<coeff>\d+(?:/\d+)?)?\s*(?P<unit>[hjk1])?\s*"
)
_UNIT_INDEX = {None: 0, "1": 0, "h": 1, "j": 2, "k": 3}


def _parse_text_form(text: str) -> Quaternion:
    if not text.strip():
        raise ParseError("empty quaternion", text, 0)
    acc = [Fraction(0)] * 4
    pos = 0
    first = True
    while pos < len(text):
        m = _TERM_RE.match(text, pos)
        if m is None or m.end() == pos:
            raise ParseError("unexpected character", text, pos)
        sign, coeff, unit = m.group("sign"), m.group("coeff"), m.group("unit")
        if coeff is None and unit is None:
            raise ParseError("expected a coefficient or unit", text, m.end())
        if sign is None and not first:
            raise ParseError("missing '+' or '-' between terms", text, m.start("coeff") if coeff else m.start("unit"))
        if coeff is not None and "/" in coeff and int(coeff.split("/")[1]) == 0:
            raise ParseError("zero denominator", text, m.start("coeff"))
        value = Fraction(coeff) if coeff is not None else Fraction(1)
        if sign == "-":
            value = -value
        acc[_UNIT_INDEX[unit]] += value
        pos = m.end()
        first = False
    return Quaternion(*acc)


def quat_mul(lhs: Quaternion, rhs: Quaternion) -> Quaternion:
    """Hamilton product under h^2 = j^2 = k^2 = hjk = -1."""
    a0, a1, a2, a3 = lhs.q0, lhs.q1, lhs.q2, lhs.q3
    b0, b1, b2, b3 = rhs.q0, rhs.q1, rhs.q2, rhs.q3
    return Quaternion(
        a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
        a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
        a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
        a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
    )


def quat_add(lhs: Quaternion, rhs: Quaternion) -> Quaternion:
    return Quaternion(lhs.q0 + rhs.q0, lhs.q1 + rhs.q1, lhs.q2 + rhs.q2, lhs.q3 + rhs.q3)


def conjugate(q: Quaternion) -> Quaternion:
    return Quaternion(q.q0, -q.q1, -q.q2, -q.q3)


def norm_sq(q: Quaternion) -> Fraction:
    return q.q0 * q.q0 + q.q1 * q.q1 + q.q2 * q.q2 + q.q3 * q.q3


def inverse(q: Quaternion) -> Quaternion:
    n = norm_sq(q)
    if n == 0:
        raise DomainError("non-invertible: the zero quaternion has no inverse")
    return conjugate(q).scale(1 / n)


ZERO = Quaternion()
ONE = Quaternion(1)
H = Quaternion(0, 1)
J = Quaternion(0, 0, 1)
K = Quaternion(0, 0, 0, 1)
BASIS = (ONE, H, J, K)
