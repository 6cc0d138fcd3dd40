"""Exact sparse polynomials in Q[A, z_1, ..., z_m].

A term is keyed by its exponent vector (a, e_1, ..., e_m); coefficients
are ints or fractions.Fraction, zero coefficients are never stored, and
integral fractions are normalized back to int.  The first variable A is
the scaling parameter; the z_i are attached to the m cyclically ordered
points, so every operator indexed by i acts on the pair (z_i, z_{i+1})
with z_{m+1} meaning z_1.

Divided differences use the convention

    ddiff(f, i) = (f - tau_i f) / (z_i - z_{i+1}),

so ddiff annihilates tau_i-symmetric polynomials and ddiff(z_i, i) = 1.
theta(i) is the degree-preserving combination -2*A*ddiff_i - tau_i.

exact_divide performs multivariate division in lexicographic order (A
first) and raises InexactDivision on a nonzero remainder; divided
differences are computed through it, keeping all arithmetic in Z or Q
with no floating point anywhere.
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import InexactDivision, NotHomogeneous

Rational = int | Fraction


def _norm_coeff(c: Rational) -> Rational:
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


class MultiPoly:
    """Sparse polynomial in A and z_1 .. z_nz with exact coefficients."""

    __slots__ = ("nz", "terms")

    def __init__(self, nz: int, terms: Mapping[tuple[int, ...], Rational] | None = None):
        if nz < 0:
            raise ValueError("nz must be nonnegative")
        self.nz = nz
        clean: dict[tuple[int, ...], Rational] = {}
        if terms:
            width = nz + 1
            for key, c in terms.items():
                key = tuple(key)
                if len(key) != width or any(e < 0 for e in key):
                    raise ValueError(f"bad exponent vector {key} for nz={nz}")
                c = _norm_coeff(c)
                if c:
                    clean[key] = c
        self.terms = clean

    # ---------------------------------------------------------------- constructors

    @classmethod
    def zero(cls, nz: int) -> "MultiPoly":
        return cls(nz)

    @classmethod
    def const(cls, c: Rational, nz: int) -> "MultiPoly":
        return cls(nz, {(0,) * (nz + 1): c})

    @classmethod
    def one(cls, nz: int) -> "MultiPoly":
        return cls.const(1, nz)

    @classmethod
    def gen_a(cls, nz: int) -> "MultiPoly":
        key = (1,) + (0,) * nz
        return cls(nz, {key: 1})

    @classmethod
    def gen_z(cls, nz: int, i: int) -> "MultiPoly":
        if not 1 <= i <= nz:
            raise ValueError(f"z_{i} out of range for nz={nz}")
        key = tuple(1 if k == i else 0 for k in range(nz + 1))
        return cls(nz, {key: 1})

    @classmethod
    def linear(cls, nz: int, a_coeff: Rational = 0, z_coeffs: Mapping[int, Rational] | None = None,
               const: Rational = 0) -> "MultiPoly":
        """a_coeff*A + sum z_coeffs[i]*z_i + const."""
        terms: dict[tuple[int, ...], Rational] = {}
        if a_coeff:
            terms[(1,) + (0,) * nz] = a_coeff
        if const:
            terms[(0,) * (nz + 1)] = const
        for i, c in (z_coeffs or {}).items():
            key = tuple(1 if k == i else 0 for k in range(nz + 1))
            terms[key] = terms.get(key, 0) + c
        return cls(nz, terms)

    # ---------------------------------------------------------------- basics

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, MultiPoly):
            return self.nz == other.nz and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == MultiPoly.const(other, self.nz)
        return NotImplemented

    __hash__ = None  # type: ignore[assignment]

    def _check_compat(self, other: "MultiPoly") -> None:
        if self.nz != other.nz:
            raise ValueError(f"mixed variable counts {self.nz} and {other.nz}")

    def __add__(self, other: "MultiPoly | Rational") -> "MultiPoly":
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.const(other, self.nz)
        self._check_compat(other)
        out = dict(self.terms)
        for key, c in other.terms.items():
            s = out.get(key, 0) + c
            if s:
                out[key] = s
            else:
                out.pop(key, None)
        res = MultiPoly(self.nz)
        res.terms = {k: _norm_coeff(c) for k, c in out.items()}
        return res

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        res = MultiPoly(self.nz)
        res.terms = {k: -c for k, c in self.terms.items()}
        return res

    def __sub__(self, other: "MultiPoly | Rational") -> "MultiPoly":
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.const(other, self.nz)
        return self + (-other)

    def __rsub__(self, other: Rational) -> "MultiPoly":
        return MultiPoly.const(other, self.nz) - self

    def __mul__(self, other: "MultiPoly | Rational") -> "MultiPoly":
        if isinstance(other, (int, Fraction)):
            if not other:
                return MultiPoly.zero(self.nz)
            res = MultiPoly(self.nz)
            res.terms = {k: _norm_coeff(c * other) for k, c in self.terms.items()}
            return res
        self._check_compat(other)
        # iterate over the smaller operand for speed
        a, b = (self.terms, other.terms) if len(self.terms) <= len(other.terms) else (other.terms, self.terms)
        out: dict[tuple[int, ...], Rational] = {}
        for ka, ca in a.items():
            for kb, cb in b.items():
                key = tuple(x + y for x, y in zip(ka, kb))
                s = out.get(key, 0) + ca * cb
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
        res = MultiPoly(self.nz)
        res.terms = {k: _norm_coeff(c) for k, c in out.items()}
        return res

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "MultiPoly":
        if e < 0:
            raise ValueError("negative power")
        result = MultiPoly.one(self.nz)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def __repr__(self) -> str:
        return f"MultiPoly(nz={self.nz}, {len(self.terms)} terms)"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        names = ["A"] + [f"z{i}" for i in range(1, self.nz + 1)]
        parts = []
        for key in sorted(self.terms, reverse=True):
            c = self.terms[key]
            factors = [names[k] if e == 1 else f"{names[k]}^{e}"
                       for k, e in enumerate(key) if e]
            mono = "*".join(factors) if factors else "1"
            if c == 1 and factors:
                parts.append(mono)
            elif c == -1 and factors:
                parts.append(f"-{mono}")
            elif factors:
                parts.append(f"{c}*{mono}")
            else:
                parts.append(str(c))
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out

    # ---------------------------------------------------------------- degrees

    def total_degree(self) -> int:
        """Maximal total degree; 0 for the zero polynomial."""
        if not self.terms:
            return 0
        return max(sum(k) for k in self.terms)

    def homogeneous_degree(self) -> int:
        """Common total degree of all terms (A counts once); NotHomogeneous otherwise."""
        if not self.terms:
            return 0
        degs = {sum(k) for k in self.terms}
        if len(degs) != 1:
            raise NotHomogeneous(f"degrees {sorted(degs)} present")
        return degs.pop()

    # ---------------------------------------------------------------- variable maps

    def _pair(self, i: int) -> tuple[int, int]:
        if not 1 <= i <= self.nz:
            raise ValueError(f"index {i} out of range for nz={self.nz}")
        return i, i % self.nz + 1

    def tau(self, i: int) -> "MultiPoly":
        """Swap z_i and z_{i+1} (cyclically: tau_m swaps z_m and z_1)."""
        i, j = self._pair(i)
        out: dict[tuple[int, ...], Rational] = {}
        for key, c in self.terms.items():
            lk = list(key)
            lk[i], lk[j] = lk[j], lk[i]
            out[tuple(lk)] = c
        res = MultiPoly(self.nz)
        res.terms = out
        return res

    def ddiff(self, i: int) -> "MultiPoly":
        """Divided difference (f - tau_i f) / (z_i - z_{i+1})."""
        i, j = self._pair(i)
        num = self - self.tau(i)
        den = MultiPoly.linear(self.nz, z_coeffs={i: 1, j: -1})
        return num.exact_divide(den)

    def theta(self, i: int) -> "MultiPoly":
        """-2*A*ddiff_i - tau_i, the degree-preserving operator of the recursion."""
        return MultiPoly.gen_a(self.nz) * self.ddiff(i) * (-2) - self.tau(i)

    def map_z(self, new_nz: int, new_pos: Sequence[int]) -> "MultiPoly":
        """Relabel z variables: old z_k becomes z_{new_pos[k-1]} (injective)."""
        if len(new_pos) != self.nz:
            raise ValueError("new_pos must list a target for every z variable")
        if len(set(new_pos)) != len(new_pos):
            raise ValueError("variable relabeling must be injective")
        if any(not 1 <= p <= new_nz for p in new_pos):
            raise ValueError("target index out of range")
        out: dict[tuple[int, ...], Rational] = {}
        for key, c in self.terms.items():
            nk = [0] * (new_nz + 1)
            nk[0] = key[0]
            for old, e in enumerate(key[1:], start=1):
                if e:
                    nk[new_pos[old - 1]] = e
            out[tuple(nk)] = c
        res = MultiPoly(new_nz)
        res.terms = out
        return res

    def subs_z(self, i: int, repl: "MultiPoly | Rational") -> "MultiPoly":
        """Substitute z_i := repl (a polynomial in the same variables, or a constant)."""
        if not 1 <= i <= self.nz:
            raise ValueError(f"z_{i} out of range")
        if isinstance(repl, (int, Fraction)) and repl == 0:
            res = MultiPoly(self.nz)
            res.terms = {k: c for k, c in self.terms.items() if k[i] == 0}
            return res
        if isinstance(repl, (int, Fraction)):
            repl = MultiPoly.const(repl, self.nz)
        self._check_compat(repl)
        by_deg: dict[int, dict[tuple[int, ...], Rational]] = {}
        for key, c in self.terms.items():
            d = key[i]
            stripped = key[:i] + (0,) + key[i + 1:]
            bucket = by_deg.setdefault(d, {})
            bucket[stripped] = bucket.get(stripped, 0) + c
        result = MultiPoly.zero(self.nz)
        for d, bucket in sorted(by_deg.items()):
            part = MultiPoly(self.nz, bucket)
            result = result + (part if d == 0 else part * repl ** d)
        return result

    def specialize_a(self, value: Rational) -> "MultiPoly":
        """Substitute A := value (the z variables survive)."""
        out: dict[tuple[int, ...], Rational] = {}
        for key, c in self.terms.items():
            nk = (0,) + key[1:]
            s = out.get(nk, 0) + c * value ** key[0]
            if s:
                out[nk] = s
            else:
                out.pop(nk, None)
        res = MultiPoly(self.nz)
        res.terms = {k: _norm_coeff(c) for k, c in out.items()}
        return res

    # ---------------------------------------------------------------- division

    def exact_divide(self, den: "MultiPoly") -> "MultiPoly":
        """Exact quotient self / den; raises InexactDivision on any remainder.

        Lexicographic order on (a, e_1, ..., e_m).  Because each reduction
        step only creates keys strictly below the current lead, a max-heap
        with lazy deletion keeps the whole division near-linear in the
        number of quotient terms for the short divisors used here.
        """
        self._check_compat(den)
        if not den.terms:
            raise ZeroDivisionError("division by zero polynomial")
        if not self.terms:
            return MultiPoly.zero(self.nz)
        dlead = max(den.terms)
        dcoeff = den.terms[dlead]
        dtail = [(k, c) for k, c in den.terms.items() if k != dlead]
        num = dict(self.terms)
        # heap of candidate leads; negate components so heapq pops the lex max
        heap = [tuple(-e for e in k) for k in num]
        heapq.heapify(heap)
        quo: dict[tuple[int, ...], Rational] = {}
        while heap:
            lead = tuple(-e for e in heapq.heappop(heap))
            c = num.get(lead)
            if not c:
                continue  # stale entry
            qkey = tuple(a - b for a, b in zip(lead, dlead))
            if any(e < 0 for e in qkey):
                raise InexactDivision(f"monomial {lead} not reducible by {dlead}")
            qc = c if dcoeff == 1 else _norm_coeff(Fraction(c) / Fraction(dcoeff))
            quo[qkey] = qc
            del num[lead]
            for tk, tc in dtail:
                key = tuple(a + b for a, b in zip(qkey, tk))
                s = num.get(key, 0) - qc * tc
                if s:
                    if key not in num:
                        heapq.heappush(heap, tuple(-e for e in key))
                    num[key] = s
                else:
                    num.pop(key, None)
        if num:
            raise InexactDivision("nonzero remainder")
        res = MultiPoly(self.nz)
        res.terms = {k: _norm_coeff(c) for k, c in quo.items()}
        return res

    # ---------------------------------------------------------------- evaluation

    def evaluate(self, a_value: Rational, z_values: Sequence[Rational]) -> Rational:
        """Exact value at A = a_value, z = z_values."""
        if len(z_values) != self.nz:
            raise ValueError(f"need {self.nz} z values")
        point = (a_value,) + tuple(z_values)
        total: Rational = 0
        for key, c in self.terms.items():
            v = c
            for x, e in zip(point, key):
                if e:
                    v = v * x ** e
            total += v
        return _norm_coeff(Fraction(total)) if isinstance(total, Fraction) else total

    # ---------------------------------------------------------------- serialization

    def to_obj(self) -> list[list]:
        """Sorted [coefficient-string, A-exponent, [z-exponents]] triples."""
        out = []
        for key in sorted(self.terms):
            out.append([str(self.terms[key]), key[0], list(key[1:])])
        return out

    @classmethod
    def from_obj(cls, nz: int, obj: Iterable[Sequence]) -> "MultiPoly":
        terms: dict[tuple[int, ...], Rational] = {}
        for coeff_str, a_exp, z_exps in obj:
            key = (int(a_exp),) + tuple(int(e) for e in z_exps)
            terms[key] = Fraction(coeff_str)
        return cls(nz, terms)
