"""Exact univariate polynomial arithmetic over the rationals.

A polynomial is a dense vector of Fraction coefficients in ascending
powers: ``coeffs[i]`` multiplies x**i.  Nonzero polynomials keep their
trailing coefficient nonzero (canonical form); the zero polynomial is
the empty vector with degree -inf, so normalization never needs a
special case downstream.

No floating point enters anywhere: coefficients are arbitrary-precision
Fractions, evaluation and interpolation are exact, and the falling-basis
conversion uses forward differences at 0 (the j-th coordinate equals the
j-th forward difference of p at 0 divided by j!), which needs no
precomputed tables.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

RationalLike = int | Fraction

_NEG_INF = float("-inf")


class Poly:
    """Immutable dense polynomial with exact rational coefficients."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[RationalLike] = ()) -> None:
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self._coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def zero(cls) -> Poly:
        return cls()

    @classmethod
    def one(cls) -> Poly:
        return cls([1])

    @classmethod
    def variable(cls) -> Poly:
        """The monomial x."""
        return cls([0, 1])

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def degree(self) -> int | float:
        """Degree of the polynomial; -inf for the zero polynomial."""
        return len(self._coeffs) - 1 if self._coeffs else _NEG_INF

    def coefficient(self, i: int) -> Fraction:
        """Coefficient of x**i (zero beyond the stored degree)."""
        return self._coeffs[i] if 0 <= i < len(self._coeffs) else Fraction(0)

    @property
    def leading_coefficient(self) -> Fraction:
        if not self._coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self._coeffs[-1]

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Poly):
            return self._coeffs == other._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __add__(self, other: Poly) -> Poly:
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    def __neg__(self) -> Poly:
        return Poly(-c for c in self._coeffs)

    def __sub__(self, other: Poly) -> Poly:
        if not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: Poly | RationalLike) -> Poly:
        if isinstance(other, Poly):
            if self.is_zero or other.is_zero:
                return Poly()
            out = [Fraction(0)] * (len(self._coeffs) + len(other._coeffs) - 1)
            for i, a in enumerate(self._coeffs):
                for j, b in enumerate(other._coeffs):
                    out[i + j] += a * b
            return Poly(out)
        if isinstance(other, (int, Fraction)):
            return Poly(c * other for c in self._coeffs)
        return NotImplemented

    def __rmul__(self, other: RationalLike) -> Poly:
        return self.__mul__(other)

    def __divmod__(self, divisor: Poly) -> tuple[Poly, Poly]:
        """Exact long division: self = quotient * divisor + remainder."""
        if not isinstance(divisor, Poly):
            return NotImplemented
        if divisor.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self._coeffs)
        dlen = len(divisor._coeffs)
        lead = divisor._coeffs[-1]
        if len(rem) < dlen:
            return Poly(), self
        quot = [Fraction(0)] * (len(rem) - dlen + 1)
        for i in range(len(rem) - dlen, -1, -1):
            c = rem[i + dlen - 1] / lead
            if c:
                quot[i] = c
                for j, d in enumerate(divisor._coeffs):
                    rem[i + j] -= c * d
        return Poly(quot), Poly(rem)

    def __floordiv__(self, divisor: Poly) -> Poly:
        return divmod(self, divisor)[0]

    def __mod__(self, divisor: Poly) -> Poly:
        return divmod(self, divisor)[1]

    def __call__(self, x: RationalLike) -> Fraction:
        """Evaluate at x by Horner's rule; exact Fraction result."""
        acc = Fraction(0)
        for c in reversed(self._coeffs):
            acc = acc * x + c
        return acc

    def __repr__(self) -> str:
        return f"Poly({[str(c) for c in self._coeffs]})"

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for i in range(len(self._coeffs) - 1, -1, -1):
            c = self._coeffs[i]
            if c == 0:
                continue
            mag = abs(c)
            term = "x" if i == 1 else f"x^{i}" if i > 1 else ""
            if not term:
                body = str(mag)
            elif mag == 1:
                body = term
            else:
                body = f"{mag}*{term}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text


def _compose_shift(p: Poly, delta: int) -> Poly:
    # p(x + delta) by Horner over the shifted variable; binomial-exact
    shifted = Poly([delta, 1])
    acc = Poly()
    for c in reversed(p.coeffs):
        acc = acc * shifted + Poly([c])
    return acc


def shift_back(p: Poly) -> Poly:
    """Return q with q(x) = p(x - 1)."""
    return _compose_shift(p, -1)


def shift_forward(p: Poly) -> Poly:
    """Return q with q(x) = p(x + 1); inverse of shift_back."""
    return _compose_shift(p, 1)


def falling_factorial(j: int) -> Poly:
    """The falling factorial (x)_j = x(x-1)...(x-j+1); (x)_0 = 1."""
    if j < 0:
        raise ValueError(f"falling factorial needs j >= 0, got {j}")
    out = Poly.one()
    for i in range(j):
        out = out * Poly([-i, 1])
    return out


def to_falling_basis(p: Poly) -> list[Fraction]:
    """Coordinates d with p = sum_j d[j] * (x)_j.

    Computed as d[j] = (j-th forward difference of p at 0) / j!.
    Returns one coordinate per power of p (empty for the zero polynomial).
    """
    if p.is_zero:
        return []
    deg = len(p.coeffs) - 1
    values = [p(i) for i in range(deg + 1)]
    out = []
    fact = 1
    for j in range(deg + 1):
        if j:
            fact *= j
        out.append(values[0] / fact)
        values = [values[i + 1] - values[i] for i in range(len(values) - 1)]
    return out


def from_falling_basis(d: Sequence[RationalLike]) -> Poly:
    """Expand sum_j d[j] * (x)_j into the monomial basis; inverts to_falling_basis."""
    out = Poly()
    basis = Poly.one()
    for j, coord in enumerate(d):
        if j:
            basis = basis * Poly([-(j - 1), 1])
        out = out + basis * Fraction(coord)
    return out


def interpolate(points: Sequence[tuple[RationalLike, RationalLike]]) -> Poly:
    """The unique polynomial of degree < len(points) through all points.

    Newton divided differences over exact rationals; duplicate abscissae
    are rejected.
    """
    if not points:
        raise ValueError("interpolation needs at least one point")
    xs = [Fraction(x) for x, _ in points]
    if len(set(xs)) != len(xs):
        raise ValueError("interpolation abscissae must be distinct")
    coef = [Fraction(y) for _, y in points]
    n = len(points)
    for level in range(1, n):
        for i in range(n - 1, level - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - level])
    out = Poly([coef[-1]])
    for i in range(n - 2, -1, -1):
        out = out * Poly([-xs[i], 1]) + Poly([coef[i]])
    return out
