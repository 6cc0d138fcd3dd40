"""Degrees of commuting-matrix varieties via operator chains.

The degree of {(X, Y) : XY = YX} in pairs of n x n matrices is read off
the multidegree table at the reversal pattern, size N = 2n.  It can
also be computed directly by applying a chain of operators

    theta_i = -2A d_i - tau_i

to the seed product prod_i (A+z_i)^{i-1} (A-z_i)^{n-i}: one pass
theta_1..theta_{n-1}, then theta_1..theta_{n-2}, and so on down to a
single theta_1, finally multiplied by A^n.  Once theta_g has been
applied for the last time the variable z_{g+1} is dead and is set to 0
on the spot, which keeps intermediate polynomials small; the alternate
ordering (theta_g..theta_1 with g growing) must give the same value and
serves as an oracle at small n.

The crosscheck against the table divides the reversal pattern's
multidegree by the within-half product of weights, exactly, and
compares the z_{n+i} = 0 specialization with the chain output.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import Mismatch
from .exactpoly import MultiPoly
from .linkpat import LinkPattern


@dataclass(frozen=True)
class DeltaResult:
    n: int
    delta: MultiPoly
    degree: int


def _seed(n: int) -> MultiPoly:
    out = MultiPoly.one(n)
    for i in range(1, n + 1):
        out = (out * MultiPoly.linear(n, 1, {i: 1}) ** (i - 1)
               * MultiPoly.linear(n, 1, {i: -1}) ** (n - i))
    return out


def delta(n: int) -> DeltaResult:
    """Grouped chain with immediate specialization of dead variables."""
    if n < 1:
        raise ValueError("n must be positive")
    poly = _seed(n)
    for g in range(n - 1, 0, -1):
        for i in range(1, g + 1):
            poly = poly.theta(i)
        poly = poly.subs_z(g + 1, 0)
    poly = poly * MultiPoly.gen_a(n) ** n
    value = poly.evaluate(1, [0] * n)
    assert isinstance(value, int) and value > 0
    return DeltaResult(n, poly, value)


def delta_alt_order(n: int) -> DeltaResult:
    """Reversed grouping, no early specialization; equality is a theorem."""
    if n < 1:
        raise ValueError("n must be positive")
    poly = _seed(n)
    for g in range(1, n):
        for i in range(g, 0, -1):
            poly = poly.theta(i)
    poly = poly * MultiPoly.gen_a(n) ** n
    value = poly.evaluate(1, [0] * n)
    assert isinstance(value, int) and value > 0
    return DeltaResult(n, poly, value)


def degree_sequence(max_n: int) -> list[int]:
    return [delta(k).degree for k in range(1, max_n + 1)]


def reversal_pattern(n2: int) -> LinkPattern:
    return LinkPattern(tuple(n2 + 1 - i for i in range(1, n2 + 1)))


def half_weight_product(n2: int) -> MultiPoly:
    """prod (A + z_i - z_j) over ordered pairs i < j within each half."""
    n = n2 // 2
    out = MultiPoly.one(n2)
    for lo, hi in ((1, n), (n + 1, n2)):
        for i in range(lo, hi + 1):
            for j in range(i + 1, hi + 1):
                out = out * MultiPoly.linear(n2, 1, {i: 1, j: -1})
    return out


def crosscheck_with_table(table, full_symbolic: bool | None = None) -> dict:
    """The chain against the table at the reversal pattern.

    Always compares degrees.  When full_symbolic (default for n <= 3),
    additionally divides the table entry by the half weight product --
    the division must be exact -- and matches the z_{n+i} = 0
    specialization against the chain, plus the z_{n+i} = z_i
    identification at the degree level.
    """
    n2 = table.n
    if n2 % 2:
        raise ValueError("the crosscheck needs even size")
    n = n2 // 2
    mdeg = table.mdeg(reversal_pattern(n2))
    d = delta(n)
    if table.degree(reversal_pattern(n2)) != d.degree:
        raise Mismatch(
            f"table degree {table.degree(reversal_pattern(n2))} != chain {d.degree}")
    if full_symbolic is None:
        full_symbolic = n <= 3
    if not full_symbolic:
        return {"n": n, "degree": d.degree, "symbolic": False}
    q = mdeg.exact_divide(half_weight_product(n2))
    spec = q * MultiPoly.gen_a(n2) ** n
    for i in range(1, n + 1):
        spec = spec.subs_z(n + i, 0)
    lifted = delta_alt_order(n).delta.map_z(n2, list(range(1, n + 1)))
    if spec != lifted:
        raise Mismatch(f"specialized quotient differs from the chain at n={n}")
    ident = q
    for i in range(1, n + 1):
        ident = ident.subs_z(n + i, MultiPoly.gen_z(n2, i))
    value = ident.evaluate(1, [0] * n2)
    if value != d.degree:
        raise Mismatch(f"identified quotient value {value} != degree {d.degree}")
    return {"n": n, "degree": d.degree, "symbolic": True}
