"""Dense exact linear algebra over the rationals, for small matrices.

Everything works on plain lists of lists whose entries are ints or
fractions.Fraction.  rank() scales rows to integers and runs Bareiss
elimination, so intermediate entries stay minor-sized; rref/null_space
use Fraction arithmetic.  Sizes here are small (at most a couple of
hundred rows), so no pivot strategy beyond "first nonzero" is needed.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence

Rational = int | Fraction


def _integer_rows(rows: Sequence[Sequence[Rational]]) -> list[list[int]]:
    out = []
    for r in rows:
        den = 1
        for x in r:
            if isinstance(x, Fraction):
                den = den * x.denominator // gcd(den, x.denominator)
        out.append([int(x * den) for x in r])
    return out


def rank(rows: Sequence[Sequence[Rational]]) -> int:
    """Rank via fraction-free Bareiss elimination on integer-scaled rows."""
    m = _integer_rows(rows)
    if not m:
        return 0
    nrows, ncols = len(m), len(m[0])
    r = 0
    prev = 1
    for col in range(ncols):
        piv = next((i for i in range(r, nrows) if m[i][col]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        lead = m[r][col]
        top = m[r]
        for i in range(r + 1, nrows):
            row = m[i]
            f = row[col]
            for j in range(col + 1, ncols):
                row[j] = (lead * row[j] - f * top[j]) // prev
            row[col] = 0
        prev = lead
        r += 1
        if r == nrows:
            break
    return r


def rref(rows: Sequence[Sequence[Rational]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form and the list of pivot columns."""
    m = [[Fraction(x) for x in r] for r in rows]
    pivots: list[int] = []
    r = 0
    ncols = len(m[0]) if m else 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][col]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        lead = m[r][col]
        m[r] = [x / lead for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col]:
                f = m[i][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
        if r == len(m):
            break
    return m, pivots


def null_space(rows: Sequence[Sequence[Rational]]) -> list[list[Fraction]]:
    """Basis of the right kernel, one vector per free column."""
    if not rows:
        return []
    m, pivots = rref(rows)
    ncols = len(rows[0])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -m[r][fc]
        basis.append(v)
    return basis


def solve(rows: Sequence[Sequence[Rational]], rhs: Sequence[Rational]) -> list[Fraction] | None:
    """One solution of rows * x = rhs, or None if inconsistent."""
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    m, pivots = rref(aug)
    ncols = len(rows[0]) if rows else 0
    if ncols in pivots:
        return None  # pivot in the rhs column
    x = [Fraction(0)] * ncols
    for r, pc in enumerate(pivots):
        x[pc] = m[r][ncols]
    return x


def det(rows: Sequence[Sequence[Rational]]) -> Rational:
    """Determinant by Bareiss elimination (integer inputs stay integers)."""
    n = len(rows)
    m = [list(r) for r in rows]
    if any(len(r) != n for r in m):
        raise ValueError("determinant needs a square matrix")
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if not m[k][k]:
            piv = next((i for i in range(k + 1, n) if m[i][k]), None)
            if piv is None:
                return 0
            m[k], m[piv] = m[piv], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                q = Fraction(m[i][j] * m[k][k] - m[i][k] * m[k][j]) / Fraction(prev)
                m[i][j] = int(q) if q.denominator == 1 else q
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]
