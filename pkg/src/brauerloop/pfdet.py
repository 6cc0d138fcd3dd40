"""Pfaffians, degree determinants, and the square-zero-cone formulas.

The Pfaffian here is the signed sum over perfect matchings, which works
over any commutative coefficient domain (exact rationals or
polynomials).  For odd size the relevant extension sums over the point
left out as well, with the sign of the permutation (a1 b1 ... an bn k);
that is what the total-multidegree formula uses when N is odd.

The cone D1 of square-zero N x N matrices has a multidegree with two
closed forms: a localization sum over n-element subsets, and a Pfaffian
product.  Both are rational-function identities, so they are checked by
exact evaluation at admissible points, never with floating point.  They
tie the whole table together: D1 degenerates onto the loop scheme with
multiplicity 2^(n+r) on every component, so

    form = 2^(n+r) A^N sum_pi mdeg E_pi.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Callable, Iterator, Sequence

from .errors import PoleHit
from .linalg import det


class SkewMatrix:
    """Antisymmetric square matrix over any commutative domain."""

    __slots__ = ("n", "rows")

    def __init__(self, rows: Sequence[Sequence]):
        self.rows = [list(r) for r in rows]
        self.n = len(self.rows)
        for i in range(self.n):
            if len(self.rows[i]) != self.n:
                raise ValueError("matrix must be square")
            if not (self.rows[i][i] == 0):
                raise ValueError("diagonal must vanish")
            for j in range(i):
                if not (self.rows[i][j] == -self.rows[j][i]):
                    raise ValueError("matrix must be antisymmetric")

    @classmethod
    def build(cls, n: int, upper: Callable[[int, int], object]) -> "SkewMatrix":
        """Fill from the strict upper triangle, 1-based upper(i, j), i < j."""
        rows: list[list] = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                v = upper(i + 1, j + 1)
                rows[i][j] = v
                rows[j][i] = -v
        return cls(rows)

    def __getitem__(self, ij: tuple[int, int]):
        i, j = ij
        return self.rows[i - 1][j - 1]


def matchings_with_sign(points: tuple[int, ...]) -> Iterator[tuple[int, list[tuple[int, int]]]]:
    """Perfect matchings of an even point set with their permutation signs."""
    if not points:
        yield 1, []
        return
    a = points[0]
    for k in range(1, len(points)):
        b = points[k]
        rest = points[1:k] + points[k + 1:]
        factor = -1 if k % 2 == 0 else 1
        for sign, pairs in matchings_with_sign(rest):
            yield factor * sign, [(a, b)] + pairs


def pfaffian(m: SkewMatrix):
    """Signed matching sum; the canonical square root of the determinant."""
    if m.n % 2:
        raise ValueError("even size required")
    acc = None
    for sign, pairs in matchings_with_sign(tuple(range(1, m.n + 1))):
        term = m[pairs[0]] if pairs else 1
        for p in pairs[1:]:
            term = term * m[p]
        term = term * sign
        acc = term if acc is None else acc + term
    return 0 if acc is None else acc


def odd_pfaffian(m: SkewMatrix):
    """The S_N matching sum that leaves one point out, for odd size.

    Each term is signed by the permutation (a1 b1 ... an bn k) where k
    is the omitted point; for size 1 the sum is 1.
    """
    if m.n % 2 == 0:
        raise ValueError("odd size required")
    acc = None
    points = tuple(range(1, m.n + 1))
    for k in points:
        rest = tuple(p for p in points if p != k)
        outer = -1 if (m.n - k) % 2 else 1
        for sign, pairs in matchings_with_sign(rest):
            term = outer * sign
            for p in pairs:
                term = term * m[p]
            acc = term if acc is None else acc + term
    return acc


def skew_sum(m: SkewMatrix):
    return pfaffian(m) if m.n % 2 == 0 else odd_pfaffian(m)


# ---------------------------------------------------------------- degree counts


def degree_determinant(n: int) -> int:
    """Total degree of the loop scheme: a binomial determinant."""
    half = n // 2
    if n % 2 == 0:
        rows = [[comb(2 * i + 2 * j + 1, 2 * i) for j in range(half)]
                for i in range(half)]
    else:
        rows = [[comb(2 * i + 2 * j + 3, 2 * i + 1) for j in range(half)]
                for i in range(half)]
    if half == 0:
        return 1
    value = det(rows)
    assert isinstance(value, int)
    return value


# ---------------------------------------------------------------- evaluation forms

Rational = int | Fraction


def _require_admissible(n: int, a: Rational, z: Sequence[Rational]) -> None:
    if len(z) != n:
        raise ValueError("point size mismatch")
    for i in range(n):
        for j in range(n):
            if i != j and z[i] == z[j]:
                raise PoleHit(f"z_{i + 1} = z_{j + 1}")
            if i != j and a + z[i] - z[j] == 0:
                raise PoleHit(f"A + z_{i + 1} - z_{j + 1} = 0")


def total_mdeg_pfaffian_value(n: int, a: Rational, z: Sequence[Rational]) -> Fraction:
    """The Pfaffian product formula for the total multidegree, at a point.

    Entries (z_i - z_j)/((A+z_i-z_j)(A+z_j-z_i)); the prefactor clears
    every denominator, so the value is polynomial in (a, z).
    """
    _require_admissible(n, a, z)
    m = SkewMatrix.build(
        n, lambda i, j: Fraction(z[i - 1] - z[j - 1])
        / ((a + z[i - 1] - z[j - 1]) * (a + z[j - 1] - z[i - 1])))
    value = Fraction(skew_sum(m))
    if n % 2 and (n // 2) % 2:
        # odd sizes take the opposite matching orientation; forced by
        # positivity and the computed tables at sizes 3 and 5
        value = -value
    for i in range(n):
        for j in range(i + 1, n):
            value = value * ((a + z[i] - z[j]) * (a + z[j] - z[i])) / (z[i] - z[j])
    return value


def d1_mdeg_localization(n: int, a: Rational, z: Sequence[Rational]) -> Fraction:
    """Localization form of the square-zero cone multidegree.

    2^r prod_{i,j} (A+z_i-z_j), the product running over all ordered
    pairs including i = j, times the sum over n-subsets S of
    1/((A+z_s-z_t)(z_t-z_s)) over s in S, t outside.
    """
    from itertools import combinations

    _require_admissible(n, a, z)
    if a == 0:
        raise PoleHit("A = 0")
    half, r = n // 2, n % 2
    prefactor = Fraction(2) ** r
    for i in range(n):
        for j in range(n):
            prefactor *= a + z[i] - z[j]
    total = Fraction(0)
    for s_set in combinations(range(n), half):
        inside = set(s_set)
        term = Fraction(1)
        for s in s_set:
            for t in range(n):
                if t not in inside:
                    term /= (a + z[s] - z[t]) * (z[t] - z[s])
        total += term
    return prefactor * total


def d1_mdeg_pfaffian_form(n: int, a: Rational, z: Sequence[Rational]) -> Fraction:
    """Pfaffian form: 2^(n+r) A^N times the total-multidegree product."""
    half, r = n // 2, n % 2
    return (Fraction(2) ** (half + r) * Fraction(a) ** n
            * total_mdeg_pfaffian_value(n, a, z))


def d0_multiplicity_check(table, points: int = 20, seed: int = 4093) -> dict:
    """Both closed forms against 2^(n+r) A^N times the table's total.

    The flat degeneration carries every component with multiplicity
    2^(n+r); the A^N accounts for the full matrix space against the
    zero-diagonal subspace.
    """
    import random

    from .psitable import random_point

    n = table.n
    half, r = n // 2, n % 2
    factor = 2 ** (half + r)
    total = table.mdeg_sum()
    rng = random.Random(seed)
    for _ in range(points):
        a, z = random_point(n, rng)
        expected = factor * Fraction(a) ** n * total.evaluate(a, z)
        loc = d1_mdeg_localization(n, a, z)
        pf = d1_mdeg_pfaffian_form(n, a, z)
        if loc != expected or pf != expected:
            from .errors import IdentityViolation

            raise IdentityViolation(
                f"square-zero cone forms disagree at a={a}, z={z}: "
                f"{loc}, {pf}, expected {expected}")
    return {"points": points}
