"""Tuenter polynomials and their falling-factorial coefficient triangle.

The family is defined by P_0 = 1 and the recursion
P_{k+1}(n) = n^2 (P_k(n) - P_k(n-1)) + n P_k(n-1).  Expanding P_k over
falling factorials, P_k(n) = sum_j c[j][k] (n)_j, yields a triangle of
positive integers that can be computed two independent ways: by the
recurrence c[j][k+1] = j^2 c[j][k] + j c[j-1][k], or in closed form from
a Catalan triangle of ballot numbers.  The polynomials evaluate the
central binomial sum S_r(n) = sum_{j=0}^{2n} C(2n,j) |n-j|^r for odd r:
S_{2k+1}(n) = P_k(n) * n * C(2n,n).  Everything here is exact integer
arithmetic; mismatches in the verifier are reported, never silently
rounded away.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb, factorial

from .exact_poly import Poly, shift_back


@dataclass(frozen=True)
class FallingCoeffs:
    """One row of the expansion triangle: values[j-1] holds c[j][k]."""

    k: int
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.values) != self.k:
            raise ValueError(f"row {self.k} must have {self.k} entries")


@dataclass(frozen=True)
class CoeffTriangle:
    """Rows k = 1..max_k of the falling-basis coefficient triangle."""

    max_k: int
    rows: tuple[FallingCoeffs, ...]

    def row(self, k: int) -> FallingCoeffs:
        if not 1 <= k <= self.max_k:
            raise ValueError(f"row index {k} outside 1..{self.max_k}")
        return self.rows[k - 1]

    def entry(self, j: int, k: int) -> int:
        row = self.row(k)
        if not 1 <= j <= k:
            raise ValueError(f"entry index j={j} outside 1..{k}")
        return row.values[j - 1]


@dataclass(frozen=True)
class SumWitness:
    """One checked instance of the odd-exponent sum identity."""

    r: int
    n: int
    lhs: int
    rhs: int
    match: bool


def apply_recursion(p: Poly) -> Poly:
    """One step of the defining recursion: n^2 (p(n) - p(n-1)) + n p(n-1)."""
    x = Poly.variable()
    back = shift_back(p)
    return x * x * (p - back) + x * back


@lru_cache(maxsize=None)
def tuenter_poly(k: int) -> Poly:
    """The degree-k family member, P_0 = 1 and P_k = step(P_{k-1})."""
    if k < 0:
        raise ValueError(f"polynomial index must be >= 0, got {k}")
    if k == 0:
        return Poly.one()
    return apply_recursion(tuenter_poly(k - 1))


def brute_sum(r: int, n: int) -> int:
    """S_r(n) = sum_{j=0}^{2n} C(2n,j) |n-j|^r by literal summation.

    The j = n term uses the convention 0**0 = 1, so S_0 is well defined
    (it only matters for r = 0, outside the odd-exponent identity).
    """
    if r < 0:
        raise ValueError(f"exponent must be >= 0, got {r}")
    if n < 1:
        raise ValueError(f"half-width must be >= 1, got {n}")
    return sum(comb(2 * n, j) * abs(n - j) ** r for j in range(2 * n + 1))


def verify_sum_identity(k: int, n: int) -> SumWitness:
    """Check S_{2k+1}(n) = P_k(n) * n * C(2n,n); mismatch is reported, not raised."""
    r = 2 * k + 1
    lhs = brute_sum(r, n)
    value = tuenter_poly(k)(n)
    assert value.denominator == 1
    rhs = value.numerator * n * comb(2 * n, n)
    return SumWitness(r=r, n=n, lhs=lhs, rhs=rhs, match=lhs == rhs)


def catalan_entry(j: int, q: int) -> int:
    """Ballot number (q/j) * C(2j, j-q) of the Catalan triangle, 1 <= q <= j.

    Column q = 1 gives the Catalan numbers; the quotient is always an
    exact integer and any remainder is a hard failure.
    """
    if not 1 <= q <= j:
        raise ValueError(f"need 1 <= q <= j, got j={j}, q={q}")
    value, rem = divmod(q * comb(2 * j, j - q), j)
    if rem:
        raise ArithmeticError(f"ballot number ({q}/{j})*C({2*j},{j-q}) not integral")
    return value


def coeff_table(max_k: int) -> CoeffTriangle:
    """Rows 1..max_k of c[j][k] by the recurrence alone (no closed form).

    c[j][k+1] = j^2 c[j][k] + j c[j-1][k], seeded with c[1][1] = 1 and
    zero boundaries.
    """
    if max_k < 1:
        raise ValueError(f"table needs max_k >= 1, got {max_k}")
    prev = [1]
    rows = [FallingCoeffs(1, (1,))]
    for k in range(1, max_k):
        nxt = []
        for j in range(1, k + 2):
            same = prev[j - 1] if j <= k else 0
            left = prev[j - 2] if j >= 2 else 0
            nxt.append(j * j * same + j * left)
        rows.append(FallingCoeffs(k + 1, tuple(nxt)))
        prev = nxt
    return CoeffTriangle(max_k, tuple(rows))


def coeff_closed(j: int, k: int) -> int:
    """Closed form for c[j][k]: an alternating ballot-number sum divided
    by (2j-1)!/j!.

    The division is exact for every valid (j, k); a nonzero remainder
    signals an implementation bug and raises.
    """
    if not 1 <= j <= k:
        raise ValueError(f"need 1 <= j <= k, got j={j}, k={k}")
    total = sum(
        (-1) ** (q + j) * catalan_entry(j, q) * q ** (2 * k - 1)
        for q in range(1, j + 1)
    )
    denom = factorial(2 * j - 1) // factorial(j)
    value, rem = divmod(total, denom)
    if rem:
        raise ArithmeticError(
            f"closed form for c[{j}][{k}] not divisible by (2j-1)!/j! = {denom}"
        )
    return value


def c2_closed(k: int) -> int:
    """Second-column closed form c[2][k] = (2^(2k-1) - 2) / 3, k >= 2."""
    if k < 2:
        raise ValueError(f"second column starts at k = 2, got {k}")
    return (2 ** (2 * k - 1) - 2) // 3
