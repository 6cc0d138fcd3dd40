"""The circular matrix product and its companion models.

cp_mul implements the degenerate product

    (P o Q)_{ik} = sum over j with cyc(i <= j <= k) of P_{ij} Q_{jk},

where cyc(i <= j <= k) says j lies on the cyclic arc from i to k; when
i == k the arc degenerates to the single point i.  Writing
e(i, j, k) = ((j-i) mod N) + ((k-j) mod N) - ((k-i) mod N), which is 0 on
the arc and N off it, the s-deformed product

    (P x_s Q)_{ik} = sum_j s^{e(i,j,k)} P_{ij} Q_{jk}

recovers the ordinary product at s = 1 and the circular product at
s = 0; for s != 0 it is conjugate to the ordinary product by the
rescaling M_{ij} -> s^{(j-i) mod N} M_{ij}.

The semidirect model splits M into its weakly upper part R and the class
of M modulo upper triangulars, represented by the strict lower part L;
the product is (R, L)(V, W) = (R V, R W + L V) and the inverse of (R, L)
is (R^-1, -R^-1 L R^-1), which is how cp_inv is computed.  The periodic
strip embeds M as the infinite banded matrix strip(i, j) = M_{i mod N,
j mod N} for 0 <= j - i < N, turning the circular product into ordinary
(banded) matrix multiplication.

Matrices are exact: entries are ints or fractions.Fraction, 1-based
indexing in the public interface.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from .errors import NotInvertible, WindowTooSmall

Rational = int | Fraction


class ExactMatrix:
    """Dense N x N matrix with exact rational entries, 1-based access."""

    __slots__ = ("n", "rows")

    def __init__(self, rows: Sequence[Sequence[Rational]]):
        self.rows = [list(r) for r in rows]
        self.n = len(self.rows)
        if any(len(r) != self.n for r in self.rows):
            raise ValueError("matrix must be square")

    @classmethod
    def zeros(cls, n: int) -> "ExactMatrix":
        return cls([[0] * n for _ in range(n)])

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def diagonal(cls, values: Sequence[Rational]) -> "ExactMatrix":
        n = len(values)
        return cls([[values[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def build(cls, n: int, entry: Callable[[int, int], Rational]) -> "ExactMatrix":
        return cls([[entry(i, j) for j in range(1, n + 1)] for i in range(1, n + 1)])

    def __getitem__(self, ij: tuple[int, int]) -> Rational:
        i, j = ij
        return self.rows[i - 1][j - 1]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, ExactMatrix) and self.n == other.n and all(
            a == b for ra, rb in zip(self.rows, other.rows) for a, b in zip(ra, rb))

    __hash__ = None  # type: ignore[assignment]

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        return ExactMatrix([[a + b for a, b in zip(ra, rb)]
                            for ra, rb in zip(self.rows, other.rows)])

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        return ExactMatrix([[a - b for a, b in zip(ra, rb)]
                            for ra, rb in zip(self.rows, other.rows)])

    def __neg__(self) -> "ExactMatrix":
        return ExactMatrix([[-a for a in r] for r in self.rows])

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.n != other.n:
            raise ValueError("size mismatch")
        n = self.n
        cols = list(zip(*other.rows))
        return ExactMatrix([[sum(a * b for a, b in zip(row, col) if a and b)
                             for col in cols] for row in self.rows])

    def scale(self, c: Rational) -> "ExactMatrix":
        return ExactMatrix([[c * a for a in r] for r in self.rows])

    def diagonal_entries(self) -> list[Rational]:
        return [self.rows[i][i] for i in range(self.n)]

    def upper_part(self) -> "ExactMatrix":
        """Weakly upper triangular part, diagonal included."""
        return ExactMatrix([[a if j >= i else 0 for j, a in enumerate(r)]
                            for i, r in enumerate(self.rows)])

    def strict_lower_part(self) -> "ExactMatrix":
        return ExactMatrix([[a if j < i else 0 for j, a in enumerate(r)]
                            for i, r in enumerate(self.rows)])

    def is_zero(self) -> bool:
        return all(not a for r in self.rows for a in r)

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(a) for a in r) for r in self.rows)
        return f"ExactMatrix[{body}]"


# --------------------------------------------------------------------- cyclic order


def cyc_ordered(i: int, j: int, k: int, n: int) -> bool:
    """Does j lie on the cyclic arc from i to k?  For i == k only j == i does."""
    return (j - i) % n + (k - j) % n == (k - i) % n


def _arc(i: int, k: int, n: int) -> list[int]:
    """The labels on the cyclic arc from i to k, in arc order."""
    return [(i - 1 + t) % n + 1 for t in range((k - i) % n + 1)]


# --------------------------------------------------------------------- products


def cp_mul(p: ExactMatrix, q: ExactMatrix) -> ExactMatrix:
    """Circular product: sum over the cyclic arc from row to column index."""
    if p.n != q.n:
        raise ValueError("size mismatch")
    n = p.n
    out = [[0] * n for _ in range(n)]
    for i in range(1, n + 1):
        prow = p.rows[i - 1]
        for k in range(1, n + 1):
            acc: Rational = 0
            for j in _arc(i, k, n):
                a = prow[j - 1]
                if a:
                    b = q.rows[j - 1][k - 1]
                    if b:
                        acc += a * b
            out[i - 1][k - 1] = acc
    return ExactMatrix(out)


def s_mul(p: ExactMatrix, q: ExactMatrix, s: Rational) -> ExactMatrix:
    """Deformed product sum_j s^{e(i,j,k)} P_{ij} Q_{jk}; s=1 ordinary, s=0 circular."""
    if p.n != q.n:
        raise ValueError("size mismatch")
    n = p.n
    off = s ** n
    out = [[0] * n for _ in range(n)]
    for i in range(1, n + 1):
        for k in range(1, n + 1):
            acc: Rational = 0
            for j in range(1, n + 1):
                a = p.rows[i - 1][j - 1]
                if not a:
                    continue
                b = q.rows[j - 1][k - 1]
                if not b:
                    continue
                term = a * b
                acc += term if cyc_ordered(i, j, k, n) else off * term
            out[i - 1][k - 1] = acc
    return ExactMatrix(out)


def s_scale(m: ExactMatrix, s: Rational) -> ExactMatrix:
    """Rescale M_{ij} by s^{(j-i) mod N} (the conjugation behind s_mul, s != 0)."""
    n = m.n
    return ExactMatrix.build(n, lambda i, j: m[i, j] * s ** ((j - i) % n))


def cycle(m: ExactMatrix, k: int = 1) -> ExactMatrix:
    """The cycling automorphism M_{ij} -> M_{i+k, j+k} (indices mod N)."""
    n = m.n
    return ExactMatrix.build(n, lambda i, j: m[(i + k - 1) % n + 1, (j + k - 1) % n + 1])


# --------------------------------------------------------------------- semidirect model


def to_semidirect(m: ExactMatrix) -> tuple[ExactMatrix, ExactMatrix]:
    """Split M into (weakly upper part, strict lower representative)."""
    return m.upper_part(), m.strict_lower_part()


def from_semidirect(r: ExactMatrix, lower: ExactMatrix) -> ExactMatrix:
    """Reassemble a matrix from an upper part and a class-mod-upper representative."""
    return r + lower.strict_lower_part()


def semidirect_mul(a: tuple[ExactMatrix, ExactMatrix],
                   b: tuple[ExactMatrix, ExactMatrix]) -> tuple[ExactMatrix, ExactMatrix]:
    """(R, L)(V, W) = (R V, R W + L V), the second slot taken mod upper."""
    r, low = a
    v, w = b
    return r @ v, (r @ w + low @ v).strict_lower_part()


def upper_inverse(r: ExactMatrix) -> ExactMatrix:
    """Ordinary inverse of a weakly upper triangular matrix, by back substitution."""
    n = r.n
    diag = r.diagonal_entries()
    if any(not d for d in diag):
        raise NotInvertible("zero diagonal entry")
    inv = [[Fraction(0)] * n for _ in range(n)]
    for j in range(n - 1, -1, -1):
        inv[j][j] = Fraction(1, 1) / diag[j]
        for i in range(j - 1, -1, -1):
            acc = Fraction(0)
            for k in range(i + 1, j + 1):
                if r.rows[i][k]:
                    acc += r.rows[i][k] * inv[k][j]
            inv[i][j] = -acc / diag[i]
    out = ExactMatrix(inv)
    out.rows = [[int(x) if isinstance(x, Fraction) and x.denominator == 1 else x
                 for x in row] for row in out.rows]
    return out


def cp_inv(p: ExactMatrix) -> ExactMatrix:
    """Circular-product inverse; exists iff every diagonal entry is nonzero."""
    r, low = to_semidirect(p)
    rinv = upper_inverse(r)
    return from_semidirect(rinv, -(rinv @ low @ rinv))


# --------------------------------------------------------------------- periodic strip


@dataclass(frozen=True)
class StripWindow:
    """A finite window onto the periodic strip of a matrix.

    Rows run 1..row_count; entry(i, j) is defined for rows in the window
    and 0 <= j - i < N, and equals M_{i mod N, j mod N}.
    """

    matrix: ExactMatrix
    row_count: int = field(default=0)

    def __post_init__(self) -> None:
        if self.row_count <= 0:
            object.__setattr__(self, "row_count", 3 * self.matrix.n)

    def entry(self, i: int, j: int) -> Rational:
        n = self.matrix.n
        if not 1 <= i <= self.row_count:
            raise WindowTooSmall(f"row {i} outside 1..{self.row_count}")
        if not 0 <= j - i < n:
            raise WindowTooSmall(f"column {j} outside the band of row {i}")
        return self.matrix[(i - 1) % n + 1, (j - 1) % n + 1]

    def band_product_entry(self, other: "StripWindow", i: int, k: int) -> Rational:
        """Entry (i, k) of the product of two strips, 0 <= k - i < N."""
        acc: Rational = 0
        for j in range(i, k + 1):
            a = self.entry(i, j)
            if a:
                b = other.entry(j, k)
                if b:
                    acc += a * b
        return acc


def strip_embed(m: ExactMatrix, row_count: int = 0) -> StripWindow:
    return StripWindow(m, row_count)
