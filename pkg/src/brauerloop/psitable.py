"""Multidegree tables for the loop scheme components.

Each component E_pi of the loop scheme carries a multidegree, a
polynomial in A and z_1..z_N, homogeneous of degree ceil(N^2/2) - N.
The table of all of them is generated from two ingredients:

  - the base case at the maximally crossing pattern, an explicit product
    of linear forms (base_mdeg);
  - a divided-difference recursion (recursion_step) that produces the
    multidegree of f_i . rho from that of rho whenever rho has no chord
    joining i and i+1.

Since adjacent transposition moves connect all patterns, a breadth-first
sweep fills the whole table; every pattern reached twice is compared
exactly, so an inconsistent recursion cannot go unnoticed.

The remaining functions verify, symbolically or at exact rational
points, the identities these polynomials satisfy: the exchange
relations tying the family to the transfer matrix, sector and total sum
rules, the specialization that removes a small chord, the small-arch
identity, rotation covariance, and positivity on the region where every
weight 1 + z_i - z_j is positive.
"""

from __future__ import annotations

import hashlib
import json
import math
import random
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import (ChainInconsistency, ChordPresent, IdentityViolation,
                     NoSmallChord)
from .exactpoly import MultiPoly, Rational
from .linkpat import (LinkPattern, apply_e, apply_f, enumerate_patterns,
                      in_permutation_sector, maximal_pattern,
                      restrict_pattern, rotate, strands_cross_at, _wrap)


def target_degree(n: int) -> int:
    """Homogeneous degree of every multidegree at size n."""
    return -(-n * n // 2) - n


def base_mdeg(n: int) -> MultiPoly:
    """Multidegree of the maximally crossing component, as a product.

    One factor A + z_i - z_{i+step} per point i and step 1..floor(N/2)-1,
    plus, for odd N, one factor A + z_i - z_{i+half} for each i in the
    second half; indices cyclic.
    """
    half = n // 2
    out = MultiPoly.one(n)
    for i in range(1, n + 1):
        for step in range(1, half):
            out = out * _lin(n, 1, i, _wrap(i + step, n))
    if n % 2:
        for i in range(half + 1, n + 1):
            out = out * _lin(n, 1, i, _wrap(i + half, n))
    return out


def _lin(n: int, a: Rational, plus: int, minus: int) -> MultiPoly:
    """a*A + z_plus - z_minus."""
    return MultiPoly.linear(n, a, {plus: 1, minus: -1})


def recursion_step(mdeg_rho: MultiPoly, rho: LinkPattern, i: int) -> MultiPoly:
    """Multidegree of f_i . rho from that of rho.

    Needs no chord between i and i+1: the crossing and non-crossing
    resolutions then satisfy

        mdeg(f_i.rho) = -(2A+z_{i+1}-z_i) d_i((A+z_{i+1}-z_i) mdeg rho)
                         / (A+z_{i+1}-z_i)  -  mdeg rho,

    where the division is exact (checked).
    """
    n = rho.n
    ip = _wrap(i + 1, n)
    if rho(i) == ip:
        raise ChordPresent(f"pattern {rho} joins {i} and {ip}")
    w = _lin(n, 1, ip, i)
    q = ((w * mdeg_rho).ddiff(i)).exact_divide(w)
    return _lin(n, 2, ip, i) * q * (-1) - mdeg_rho


@dataclass(frozen=True)
class MdegTable:
    """All multidegrees at one size, with the recursion edges that built them."""

    n: int
    entries: dict[LinkPattern, MultiPoly]
    edges: dict[LinkPattern, tuple[int, LinkPattern] | None] = field(default_factory=dict)

    def patterns(self) -> tuple[LinkPattern, ...]:
        return enumerate_patterns(self.n)

    def mdeg(self, pi: LinkPattern) -> MultiPoly:
        return self.entries[pi]

    def psi(self, pi: LinkPattern) -> MultiPoly:
        return self.entries[pi].specialize_a(1)

    def psi_table(self) -> dict[LinkPattern, MultiPoly]:
        return {pi: self.psi(pi) for pi in self.patterns()}

    def degree(self, pi: LinkPattern) -> int:
        v = self.entries[pi].evaluate(1, [0] * self.n)
        assert isinstance(v, int), "stationary weight must be an integer"
        return v

    def degrees(self) -> dict[LinkPattern, int]:
        return {pi: self.degree(pi) for pi in self.patterns()}

    def degree_sum(self) -> int:
        return sum(self.degrees().values())

    def mdeg_sum(self) -> MultiPoly:
        total = MultiPoly.zero(self.n)
        for pi in self.patterns():
            total = total + self.entries[pi]
        return total

    def validate(self) -> None:
        """Homogeneity, the base entry, and the family GCD."""
        want = target_degree(self.n)
        for pi, p in self.entries.items():
            if p.homogeneous_degree() != want:
                raise ChainInconsistency(
                    f"entry {pi} has degree {p.homogeneous_degree()}, want {want}")
        if self.entries[maximal_pattern(self.n)] != base_mdeg(self.n):
            raise ChainInconsistency("base entry does not match the base product")
        g = 0
        for pi in self.patterns():
            for c in self.psi(pi).terms.values():
                if isinstance(c, Fraction):
                    raise ChainInconsistency(f"non-integer coefficient in {pi}")
                g = math.gcd(g, c)
        if g != 1:
            raise ChainInconsistency(f"family GCD is {g}, want 1")

    # ------------------------------------------------------------- persistence

    def to_obj(self) -> dict:
        pats = sorted(self.entries, key=lambda p: p.pairing)
        return {
            "n": self.n,
            "entries": [[list(pi.pairing), self.entries[pi].to_obj()] for pi in pats],
            "edges": [[list(pi.pairing),
                       None if self.edges.get(pi) is None else
                       [self.edges[pi][0], list(self.edges[pi][1].pairing)]]
                      for pi in pats],
        }

    @classmethod
    def from_obj(cls, obj: dict) -> "MdegTable":
        n = obj["n"]
        entries = {LinkPattern(tuple(pair)): MultiPoly.from_obj(n, poly)
                   for pair, poly in obj["entries"]}
        edges: dict[LinkPattern, tuple[int, LinkPattern] | None] = {}
        for pair, edge in obj.get("edges", []):
            pi = LinkPattern(tuple(pair))
            edges[pi] = None if edge is None else (edge[0], LinkPattern(tuple(edge[1])))
        return cls(n, entries, edges)

    def content_hash(self) -> str:
        blob = json.dumps(self.to_obj(), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(blob.encode()).hexdigest()


def compute_table(n: int, reverse_edges: bool = False) -> MdegTable:
    """Fill the table by breadth-first transposition moves from the base.

    reverse_edges explores the moves in the opposite order; the result
    must be identical, and any disagreement between two derivation
    chains raises ChainInconsistency.
    """
    pi0 = maximal_pattern(n)
    entries: dict[LinkPattern, MultiPoly] = {pi0: base_mdeg(n)}
    edges: dict[LinkPattern, tuple[int, LinkPattern] | None] = {pi0: None}
    work = deque([pi0])
    indices = list(range(1, n + 1))
    if reverse_edges:
        indices.reverse()
    while work:
        rho = work.pop() if reverse_edges else work.popleft()
        known = entries[rho]
        for i in indices:
            if rho(i) == _wrap(i + 1, n):
                continue
            sigma = apply_f(rho, i)
            value = recursion_step(known, rho, i)
            seen = entries.get(sigma)
            if seen is None:
                entries[sigma] = value
                edges[sigma] = (i, rho)
                work.append(sigma)
            elif seen != value:
                raise ChainInconsistency(
                    f"chains disagree at {sigma} via f_{i} from {rho}")
    missing = [pi for pi in enumerate_patterns(n) if pi not in entries]
    if missing:
        raise ChainInconsistency(f"unreached patterns: {missing}")
    return MdegTable(n, entries, edges)


# ----------------------------------------------------------------- exchange


def verify_exchange(table: MdegTable) -> dict:
    """The denominator-cleared exchange identity at every position.

    With u = z_i - z_{i+1} (cyclic) and Psi the A=1 table,

      2(1-u) Psi_pi + u(1-u) Psi_{f_i.pi} + 2u sum_{rho: e_i.rho=pi} Psi_rho
        = (2-u)(1+u) tau_i Psi_pi.
    """
    n = table.n
    pats = table.patterns()
    psis = {pi: table.psi(pi) for pi in pats}
    one = MultiPoly.one(n)
    checked = 0
    for i in range(1, n + 1):
        u = MultiPoly.linear(n, 0, {i: 1, _wrap(i + 1, n): -1})
        preimage: dict[LinkPattern, list[LinkPattern]] = {}
        for rho in pats:
            preimage.setdefault(apply_e(rho, i), []).append(rho)
        a_coef = (one - u) * 2
        b_coef = u * 2
        c_coef = u * (one - u)
        r_coef = (one * 2 - u) * (one + u)
        for pi in pats:
            esum = MultiPoly.zero(n)
            for rho in preimage.get(pi, ()):
                esum = esum + psis[rho]
            lhs = a_coef * psis[pi] + c_coef * psis[apply_f(pi, i)] + b_coef * esum
            rhs = r_coef * psis[pi].tau(i)
            if lhs != rhs:
                raise IdentityViolation(f"exchange identity fails at i={i}, {pi}")
            checked += 1
    return {"identities": checked}


# ----------------------------------------------------------------- sum rules


def sum_rule_sector(table: MdegTable) -> dict:
    """Patterns pairing each half into the other sum to a closed product."""
    n2 = table.n
    if n2 % 2:
        raise ValueError("the sector sum rule needs even size")
    n = n2 // 2
    total = MultiPoly.zero(n2)
    count = 0
    for pi in table.patterns():
        if in_permutation_sector(pi):
            total = total + table.mdeg(pi)
            count += 1
    product = MultiPoly.one(n2)
    for lo, hi in ((1, n), (n + 1, n2)):
        for i in range(lo, hi + 1):
            for j in range(i + 1, hi + 1):
                product = product * _lin(n2, 1, i, j) * _lin(n2, 2, j, i)
    if total != product:
        raise IdentityViolation("sector sum rule fails")
    return {"patterns": count}


def random_point(n: int, rng: random.Random,
                 require_distinct: bool = True) -> tuple[Rational, list[Rational]]:
    """An exact evaluation point (a, z) avoiding the usual denominators."""
    while True:
        a = Fraction(rng.randint(1, 60), rng.randint(1, 20))
        z = [Fraction(rng.randint(-40, 40), rng.randint(1, 12)) for _ in range(n)]
        if require_distinct and len(set(z)) != n:
            continue
        if any(a + zi - zj == 0 for zi in z for zj in z):
            continue
        return a, z


def sum_rule_total(table: MdegTable, points: int = 20, seed: int = 2011) -> dict:
    """Degree sum against the determinant, full sum against the Pfaffian.

    The Pfaffian form is checked by exact evaluation at seeded rational
    points; the inhomogeneous printed factor A - (z_i-z_j)^2 is read as
    (A + z_i - z_j)(A + z_j - z_i).
    """
    from .pfdet import degree_determinant, total_mdeg_pfaffian_value

    n = table.n
    want = degree_determinant(n)
    got = table.degree_sum()
    if got != want:
        raise IdentityViolation(f"degree sum {got} != determinant {want}")
    total = table.mdeg_sum()
    rng = random.Random(seed)
    for _ in range(points):
        a, z = random_point(n, rng)
        lhs = total.evaluate(a, z)
        rhs = total_mdeg_pfaffian_value(n, a, z)
        if lhs != rhs:
            raise IdentityViolation(
                f"Pfaffian total multidegree fails at a={a}, z={z}")
    return {"degree_sum": got, "points": points}


# ----------------------------------------------------------------- specialization


def specialize_check(table_big: MdegTable, table_small: MdegTable,
                     i: int, pi: LinkPattern | None = None) -> dict:
    """Setting z_{i+1} = z_i + A collapses a chord (i, i+1).

    The specialized multidegree factors as the product over the other
    points k of (A+z_{i+1}-z_k)(A+z_k-z_i), likewise specialized, times
    the multidegree of the pattern with i, i+1 deleted.
    """
    n = table_big.n
    if table_small.n != n - 2:
        raise ValueError("tables must differ by one chord")
    if not 1 <= i < n:
        raise ValueError("the glued pair must be literal neighbours")
    if pi is not None:
        targets = [pi]
    else:
        targets = [p for p in table_big.patterns() if p(i) == i + 1]
    sub = MultiPoly.linear(n, 1, {i: 1})
    keep = [k for k in range(1, n + 1) if k not in (i, i + 1)]
    checked = 0
    for p in targets:
        if p(i) != i + 1:
            raise NoSmallChord(f"{p} has no chord ({i},{i + 1})")
        lhs = table_big.mdeg(p).subs_z(i + 1, sub)
        prefactor = MultiPoly.one(n)
        for k in keep:
            prefactor = prefactor * (_lin(n, 1, i + 1, k).subs_z(i + 1, sub)
                                     * _lin(n, 1, k, i))
        small = table_small.mdeg(restrict_pattern(p, (i, i + 1)))
        rhs = prefactor * small.map_z(n, keep)
        if lhs != rhs:
            raise IdentityViolation(f"specialization fails for {p} at i={i}")
        checked += 1
    return {"patterns": checked}


def smallarch_check(table: MdegTable, i: int) -> dict:
    """The small-arch identity at position i (cyclic).

    For every pi with a chord (i, i+1), writing g = A + z_{i+1} - z_i,

      -d_i((A+z_i-z_{i+1}) g mdeg pi) = -2A sum_rho d_i(g mdeg rho)

    with rho != pi running over the patterns that e_i glues to pi and
    whose strands through i and i+1 cross.
    """
    n = table.n
    ip = _wrap(i + 1, n)
    g = _lin(n, 1, ip, i)
    gbar = _lin(n, 1, i, ip)
    two_a = MultiPoly.linear(n, 2, {})
    checked = 0
    for pi in table.patterns():
        if pi(i) != ip:
            continue
        lhs = -((gbar * g * table.mdeg(pi)).ddiff(i))
        rhs = MultiPoly.zero(n)
        for rho in table.patterns():
            if rho == pi or apply_e(rho, i) != pi or not strands_cross_at(rho, i):
                continue
            rhs = rhs + (g * table.mdeg(rho)).ddiff(i)
        rhs = -(two_a * rhs)
        if lhs != rhs:
            raise IdentityViolation(f"small-arch identity fails for {pi} at i={i}")
        checked += 1
    return {"patterns": checked}


# ----------------------------------------------------------------- spot checks


def positivity_spot_check(table: MdegTable, trials: int = 100,
                          seed: int = 97) -> dict:
    """Every Psi is positive wherever every weight 1 + z_i - z_j is."""
    n = table.n
    rng = random.Random(seed)
    psis = table.psi_table()
    for _ in range(trials):
        z = [Fraction(rng.randint(-9, 9), 20) for _ in range(n)]
        for pi, psi in psis.items():
            v = psi.evaluate(1, z)
            if v <= 0:
                raise IdentityViolation(f"{pi} evaluates to {v} at z={z}")
    return {"points": trials}


def rotation_check(table: MdegTable) -> dict:
    """Rotating the pattern matches shifting the variables cyclically."""
    n = table.n
    shift = [_wrap(k + 1, n) for k in range(1, n + 1)]
    for pi in table.patterns():
        if table.mdeg(rotate(pi, 1)) != table.mdeg(pi).map_z(n, shift):
            raise IdentityViolation(f"rotation covariance fails at {pi}")
    return {"patterns": len(table.patterns())}
