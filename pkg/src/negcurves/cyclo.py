"""Exact arithmetic in cyclotomic fields and 3x3 collinearity determinants.

Elements of the m-th cyclotomic field are stored as rational coefficient
vectors of length phi(m), reduced modulo the m-th cyclotomic polynomial.
Reduction modulo the cyclotomic polynomial (rather than x^m - 1) keeps the
representation canonical, so zero tests are exact: a point-collinearity
certificate is a determinant that is identically the zero vector.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache


class OrderMismatchError(ValueError):
    """Operands belong to cyclotomic fields of different orders."""


# ---------------------------------------------------------------------------
# integer/rational polynomial helpers (dense, ascending degree)


def _poly_trim(coeffs):
    n = len(coeffs)
    while n > 0 and coeffs[n - 1] == 0:
        n -= 1
    return coeffs[:n]


def _poly_mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    return _poly_trim(out)


def _poly_sub(a, b):
    n = max(len(a), len(b))
    out = [Fraction(0)] * n
    for i, ai in enumerate(a):
        out[i] += ai
    for i, bi in enumerate(b):
        out[i] -= bi
    return _poly_trim(out)


def _poly_divmod(num, den):
    """Quotient and remainder in Q[x]; den must be nonzero."""
    num = list(num)
    dden = len(den) - 1
    lead = den[-1]
    quot = [Fraction(0)] * max(len(num) - dden, 0)
    for shift in range(len(num) - dden - 1, -1, -1):
        c = Fraction(num[shift + dden], 1) / lead
        if c == 0:
            continue
        quot[shift] = c
        for j, dj in enumerate(den):
            num[shift + j] -= c * dj
    return _poly_trim(quot), _poly_trim(num)


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Integer coefficients of the m-th cyclotomic polynomial, ascending.

    Computed as the exact quotient of x^m - 1 by the cyclotomic polynomials
    of all proper divisors of m; exactness of every division is asserted.
    """
    if m < 1:
        raise ValueError(f"order must be positive, got {m}")
    poly: list = [Fraction(-1)] + [Fraction(0)] * (m - 1) + [Fraction(1)]
    for d in range(1, m):
        if m % d == 0:
            poly, rem = _poly_divmod(poly, cyclotomic_polynomial(d))
            assert not rem, f"inexact cyclotomic division at m={m}, d={d}"
    out = []
    for c in poly:
        assert c.denominator == 1
        out.append(int(c))
    return tuple(out)


def totient(m: int) -> int:
    """Degree of the m-th cyclotomic polynomial."""
    return len(cyclotomic_polynomial(m)) - 1


def _reduce(coeffs, m: int) -> tuple[Fraction, ...]:
    """Canonical residue modulo the m-th cyclotomic polynomial, padded to phi(m)."""
    phi = totient(m)
    _, rem = _poly_divmod([Fraction(c) for c in coeffs], cyclotomic_polynomial(m))
    return tuple(rem) + (Fraction(0),) * (phi - len(rem))


# ---------------------------------------------------------------------------
# field elements


@dataclass(frozen=True)
class CycloNum:
    """Element of the m-th cyclotomic field in canonical reduced form."""

    order: int
    coeffs: tuple[Fraction, ...]

    def _match(self, other) -> "CycloNum":
        if isinstance(other, CycloNum):
            if other.order != self.order:
                raise OrderMismatchError(
                    f"orders {self.order} and {other.order} do not match"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return from_rational(other, self.order)
        return NotImplemented

    def __add__(self, other):
        o = self._match(other)
        if o is NotImplemented:
            return o
        return CycloNum(self.order, tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CycloNum(self.order, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        o = self._match(other)
        if o is NotImplemented:
            return o
        return CycloNum(self.order, tuple(a - b for a, b in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        o = self._match(other)
        if o is NotImplemented:
            return o
        prod = _poly_mul(list(self.coeffs), list(o.coeffs))
        return CycloNum(self.order, _reduce(prod, self.order))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._match(other)
        if o is NotImplemented:
            return o
        return self * cyc_inv(o)

    def __rtruediv__(self, other):
        return cyc_inv(self) * other

    def __pow__(self, n: int):
        if n < 0:
            return cyc_inv(self) ** (-n)
        out = from_rational(1, self.order)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __str__(self) -> str:
        return format_cyclo(self)


def from_rational(q, m: int) -> CycloNum:
    """Embed a rational number into the m-th cyclotomic field."""
    return CycloNum(m, _reduce([Fraction(q)], m))


def zeta(m: int) -> CycloNum:
    """A fixed primitive m-th root of unity (the residue of x)."""
    return CycloNum(m, _reduce([0, 1], m))


def make_cyclo(coeffs, m: int) -> CycloNum:
    """Element with the given polynomial coefficients, canonically reduced."""
    return CycloNum(m, _reduce(coeffs, m))


def cyc_mul(a: CycloNum, b: CycloNum) -> CycloNum:
    """Product, reduced to canonical form."""
    return a * b


def cyc_inv(a: CycloNum) -> CycloNum:
    """Multiplicative inverse via the extended Euclidean algorithm in Q[x]."""
    if a.is_zero():
        raise ZeroDivisionError("inverse of zero cyclotomic number")
    # Invariant: r_i = u_i * a (mod Phi_m).  Phi_m is irreducible, so the gcd
    # with any nonzero residue is a nonzero constant.
    r0 = [Fraction(c) for c in cyclotomic_polynomial(a.order)]
    r1 = _poly_trim(list(a.coeffs))
    u0, u1 = [], [Fraction(1)]
    while r1:
        quot, rem = _poly_divmod(r0, r1)
        r0, r1 = r1, rem
        u0, u1 = u1, _poly_sub(u0, _poly_mul(quot, u1))
    assert len(r0) == 1, "nonzero element must be coprime to the cyclotomic polynomial"
    return CycloNum(a.order, _reduce([c / r0[0] for c in u0], a.order))


# ---------------------------------------------------------------------------
# projective points and collinearity


@dataclass(frozen=True)
class ProjPoint:
    """Point of the projective plane with homogeneous cyclotomic coordinates."""

    coords: tuple[CycloNum, CycloNum, CycloNum]

    def __post_init__(self) -> None:
        orders = {c.order for c in self.coords}
        if len(orders) != 1:
            raise OrderMismatchError(f"mixed coordinate orders {sorted(orders)}")
        if all(c.is_zero() for c in self.coords):
            raise ValueError("projective point needs a nonzero coordinate")

    @property
    def order(self) -> int:
        return self.coords[0].order


def proj_point(x, y, z, m: int | None = None) -> ProjPoint:
    """Build a point, embedding plain rationals at order ``m`` if needed."""
    coords = []
    for c in (x, y, z):
        if isinstance(c, CycloNum):
            coords.append(c)
        else:
            if m is None:
                raise ValueError("order m required for rational coordinates")
            coords.append(from_rational(c, m))
    return ProjPoint(tuple(coords))


def det3(p: ProjPoint, q: ProjPoint, r: ProjPoint) -> CycloNum:
    """Exact determinant of the 3x3 coordinate matrix; zero iff collinear."""
    if not (p.order == q.order == r.order):
        raise OrderMismatchError("points of different cyclotomic orders")
    (a, b, c), (d, e, f), (g, h, i) = p.coords, q.coords, r.coords
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def collinear(p: ProjPoint, q: ProjPoint, r: ProjPoint) -> bool:
    return det3(p, q, r).is_zero()


# ---------------------------------------------------------------------------
# textual form "c0+c1*z+...+c{t-1}*z^{t-1}" with rational coefficients "p/q"


def format_cyclo(a: CycloNum) -> str:
    parts = []
    for j, c in enumerate(a.coeffs):
        frac = f"{c.numerator}/{c.denominator}"
        if j == 0:
            parts.append(frac)
        elif j == 1:
            parts.append(f"{frac}*z")
        else:
            parts.append(f"{frac}*z^{j}")
    return "+".join(parts)


def parse_cyclo(text: str, m: int) -> CycloNum:
    """Inverse of :func:`format_cyclo` for order ``m``."""
    coeffs = [Fraction(0)] * totient(m)
    for term in text.split("+"):
        frac, _, power = term.partition("*")
        if not power:
            j = 0
        elif power == "z":
            j = 1
        else:
            j = int(power.removeprefix("z^"))
        coeffs[j] = Fraction(frac)
    return CycloNum(m, _reduce(coeffs, m))
