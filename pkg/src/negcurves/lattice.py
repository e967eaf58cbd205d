"""Integer arithmetic in the Picard lattice of a plane blow-up.

The lattice for a blow-up of the plane at s points is Z^{1+s} with the
diagonal intersection form diag(1, -1, ..., -1).  A class is written
(d; k_1, ..., k_s): degree d times the line pullback minus k_i times the
i-th exceptional class.  Multiplicities may be negative (images under
quadratic transformations need them).
"""

from __future__ import annotations

from dataclasses import dataclass

MINUS_ONE = "minus_one"
MINUS_TWO = "minus_two"
OTHER_NEGATIVE = "other_negative"
NON_NEGATIVE = "non_negative"


class DimensionError(ValueError):
    """Two classes live over different numbers of blown-up points."""


@dataclass(frozen=True)
class LatticeContext:
    """Blow-up of the plane at ``s`` points."""

    s: int

    def __post_init__(self) -> None:
        if self.s < 1:
            raise ValueError(f"need at least one blown-up point, got s={self.s}")


@dataclass(frozen=True)
class DivisorClass:
    degree: int
    mults: tuple[int, ...]

    @property
    def s(self) -> int:
        return len(self.mults)

    def __str__(self) -> str:
        return format_class(self)


def make_class(degree: int, mults) -> DivisorClass:
    return DivisorClass(int(degree), tuple(int(k) for k in mults))


def line_class(ctx: LatticeContext, points=()) -> DivisorClass:
    """Class of a line through the given 1-based point indices."""
    mults = [0] * ctx.s
    for i in points:
        mults[i - 1] = 1
    return DivisorClass(1, tuple(mults))


def exceptional_class(ctx: LatticeContext, i: int) -> DivisorClass:
    """The i-th exceptional class (1-based), i.e. (0; ..., -1 at i, ...)."""
    if not 1 <= i <= ctx.s:
        raise DimensionError(f"index {i} out of range for s={ctx.s}")
    mults = [0] * ctx.s
    mults[i - 1] = -1
    return DivisorClass(0, tuple(mults))


def canonical(ctx: LatticeContext) -> DivisorClass:
    """The canonical class (-3; -1, ..., -1)."""
    return DivisorClass(-3, (-1,) * ctx.s)


def intersection_number(a: DivisorClass, b: DivisorClass) -> int:
    """Intersection pairing d_a*d_b - sum k_i^(a) * k_i^(b)."""
    if a.s != b.s:
        raise DimensionError(f"classes over s={a.s} and s={b.s} points")
    return a.degree * b.degree - sum(x * y for x, y in zip(a.mults, b.mults))


def self_intersection(c: DivisorClass) -> int:
    return intersection_number(c, c)


def k_intersection(c: DivisorClass) -> int:
    """c . K for K = (-3; -1, ..., -1), without building K."""
    return -3 * c.degree + sum(c.mults)


def arithmetic_genus(c: DivisorClass) -> int:
    """1 + (c^2 + c.K)/2; the sum in parentheses is even for integer classes."""
    total = self_intersection(c) + k_intersection(c)
    assert total % 2 == 0
    return 1 + total // 2


def classify_negative_type(c: DivisorClass) -> str:
    """Sort a class into minus_one / minus_two / other_negative / non_negative."""
    sq = self_intersection(c)
    if sq >= 0:
        return NON_NEGATIVE
    ck = k_intersection(c)
    if sq == -1 and ck == -1:
        return MINUS_ONE
    if sq == -2 and ck == 0:
        return MINUS_TWO
    return OTHER_NEGATIVE


def format_class(c: DivisorClass) -> str:
    """Textual form "d;k1,k2,...,ks"."""
    return f"{c.degree};{','.join(str(k) for k in c.mults)}"


def parse_class(text: str) -> DivisorClass:
    """Inverse of :func:`format_class`."""
    head, _, tail = text.partition(";")
    if not tail:
        raise ValueError(f"malformed divisor class {text!r}")
    return DivisorClass(int(head), tuple(int(k) for k in tail.split(",")))
