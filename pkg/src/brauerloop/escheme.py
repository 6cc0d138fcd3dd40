"""Points of the loop scheme and its components.

The scheme lives inside the zero-diagonal matrices and is cut out by
M o M = 0 (circular product).  Its top components are indexed by link
patterns; the component of pi contains the dense family

    M = P o (pi t) o P^{o-1},

where pi t is the pattern matrix with row i scaled by t_i, fixed-point
entries removed, and P runs over unit-diagonal matrices.  This module
samples those families exactly and checks the equations satisfied on
each component:

  - membership: zero diagonal and M o M = 0;
  - diagonal pairing: the ordinary square's diagonal is (t_i t_{pi(i)}),
    so its nonzero values come in equal pairs and identify the pattern;
  - rank bounds: the southwest triangle at each strip position has rank
    at most the pattern's count of strip entries in that triangle;
  - tangent and stabilizer dimensions by exact linear algebra.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .circlealg import ExactMatrix, Rational, cp_inv, cp_mul
from .errors import AmbiguousPairing, DegenerateParameters
from .linalg import rank
from .linkpat import LinkPattern, rank_table


def pattern_matrix(pi: LinkPattern, t: tuple[Rational, ...] | None = None) -> ExactMatrix:
    """The matrix with entry t_i at (i, pi(i)) for non-fixed i, zero elsewhere."""
    n = pi.n
    if t is None:
        t = (1,) * n
    if len(t) != n:
        raise ValueError("t must have one entry per point")
    m = ExactMatrix.zeros(n)
    for i in range(1, n + 1):
        j = pi(i)
        if j != i:
            m.rows[i - 1][j - 1] = t[i - 1]
    return m


def check_generic(pi: LinkPattern, t: tuple[Rational, ...]) -> None:
    """Raise DegenerateParameters unless all t_i != 0 and chord products differ."""
    if len(t) != pi.n:
        raise ValueError("t must have one entry per point")
    if any(not ti for ti in t):
        raise DegenerateParameters("zero entry in t")
    products = [t[a - 1] * t[b - 1] for a, b in pi.chords()]
    if len(set(products)) != len(products):
        raise DegenerateParameters("coinciding chord products in t")


@dataclass(frozen=True)
class SamplePoint:
    """A point of a component, kept with the data that produced it."""

    matrix: ExactMatrix
    pattern: LinkPattern
    t: tuple[Rational, ...]
    conjugator: ExactMatrix

    def to_obj(self) -> dict:
        return {
            "pairing": list(self.pattern.pairing),
            "t": [str(x) for x in self.t],
            "conjugator": [[str(x) for x in row] for row in self.conjugator.rows],
        }

    @classmethod
    def from_obj(cls, obj: dict) -> "SamplePoint":
        pi = LinkPattern(tuple(obj["pairing"]))
        t = tuple(_parse(x) for x in obj["t"])
        p = ExactMatrix([[_parse(x) for x in row] for row in obj["conjugator"]])
        return sample_point(pi, t, p)


def _parse(s: str) -> Rational:
    f = Fraction(s)
    return int(f) if f.denominator == 1 else f


def sample_point(pi: LinkPattern, t: tuple[Rational, ...],
                 p: ExactMatrix) -> SamplePoint:
    """Conjugate the scaled pattern matrix by a unit-diagonal P."""
    if p.n != pi.n:
        raise ValueError("size mismatch")
    if any(d != 1 for d in p.diagonal_entries()):
        raise ValueError("conjugator must have unit diagonal")
    check_generic(pi, tuple(t))
    m = cp_mul(cp_mul(p, pattern_matrix(pi, tuple(t))), cp_inv(p))
    return SamplePoint(m, pi, tuple(t), p)


def random_t(pi: LinkPattern, rng: random.Random,
             bound: int = 40) -> tuple[int, ...]:
    while True:
        t = tuple(rng.randint(1, bound) for _ in range(pi.n))
        try:
            check_generic(pi, t)
        except DegenerateParameters:
            continue
        return t


def random_conjugator(n: int, rng: random.Random) -> ExactMatrix:
    return ExactMatrix.build(
        n, lambda i, j: 1 if i == j else rng.randint(-3, 3))


def random_sample(pi: LinkPattern, rng: random.Random) -> SamplePoint:
    return sample_point(pi, random_t(pi, rng), random_conjugator(pi.n, rng))


# --------------------------------------------------------------------- membership


def is_in_E(m: ExactMatrix) -> bool:
    """Zero diagonal and vanishing circular square."""
    if any(d for d in m.diagonal_entries()):
        return False
    return cp_mul(m, m).is_zero()


def square_diag(m: ExactMatrix) -> list[Rational]:
    """Diagonal of the ordinary square M^2."""
    n = m.n
    return [sum(m.rows[i][j] * m.rows[j][i] for j in range(n))
            for i in range(n)]


def identify_pattern(m: ExactMatrix) -> LinkPattern:
    """Read the link pattern off the diagonal of M^2.

    Nonzero values must occur exactly twice (a chord), zero at most once
    (the odd fixed point); anything else is not generic enough to decide.
    """
    d = square_diag(m)
    n = m.n
    by_value: dict[Rational, list[int]] = {}
    for i, v in enumerate(d, start=1):
        by_value.setdefault(v, []).append(i)
    image = [0] * n
    for v, idx in by_value.items():
        if not v:
            if len(idx) > 1:
                raise AmbiguousPairing("several zero diagonal values")
            image[idx[0] - 1] = idx[0]
        elif len(idx) == 2:
            a, b = idx
            image[a - 1], image[b - 1] = b, a
        else:
            raise AmbiguousPairing(f"value {v} occurs {len(idx)} times")
    return LinkPattern(tuple(image))


# --------------------------------------------------------------------- rank bounds


def strip_triangle(m: ExactMatrix, i: int, d: int) -> list[list[Rational]]:
    """The southwest triangle at strip position (i, i+d), 0 <= d < N.

    Row a, column c of the strip for i <= a <= c <= i+d, as a dense
    (d+1) x (d+1) array; entries below the diagonal are outside the
    band and vanish.
    """
    n = m.n
    tri = [[0] * (d + 1) for _ in range(d + 1)]
    for a in range(d + 1):
        for c in range(a, d + 1):
            tri[a][c] = m[(i + a - 1) % n + 1, (i + c - 1) % n + 1]
    return tri


def strip_rank(m: ExactMatrix, i: int, d: int) -> int:
    return rank(strip_triangle(m, i, d))


def check_rank_bounds(m: ExactMatrix, pi: LinkPattern) -> bool:
    """Does every southwest-triangle rank respect the pattern's bound?"""
    if m.n != pi.n:
        raise ValueError("size mismatch")
    table = rank_table(pi)
    for i in range(1, m.n + 1):
        for d in range(m.n):
            if strip_rank(m, i, d) > table.value(i, i + d):
                return False
    return True


# --------------------------------------------------------------------- dimensions


def _offdiag_basis(n: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j]


def _basis_matrix(n: int, i: int, j: int) -> ExactMatrix:
    m = ExactMatrix.zeros(n)
    m.rows[i - 1][j - 1] = 1
    return m


def tangent_dimension(m: ExactMatrix) -> int:
    """Dimension of {P zero-diagonal : P o M + M o P = 0}.

    This is the kernel of the derivative of M o M at M, restricted to
    the zero-diagonal space, so it bounds the local dimension of the
    scheme from above.
    """
    n = m.n
    cols = []
    for i, j in _offdiag_basis(n):
        e = _basis_matrix(n, i, j)
        img = cp_mul(e, m) + cp_mul(m, e)
        cols.append([img.rows[a][b] for a in range(n) for b in range(n)])
    return n * n - n - rank([list(row) for row in zip(*cols)])


def stabilizer_codim(pi: LinkPattern, t: tuple[Rational, ...]) -> int:
    """Codimension in the zero-diagonal space of {P : (pi t) o P = P o (pi t)}."""
    check_generic(pi, tuple(t))
    n = pi.n
    mt = pattern_matrix(pi, tuple(t))
    cols = []
    for i, j in _offdiag_basis(n):
        e = _basis_matrix(n, i, j)
        img = cp_mul(mt, e) - cp_mul(e, mt)
        cols.append([img.rows[a][b] for a in range(n) for b in range(n)])
    return rank([list(row) for row in zip(*cols)])
