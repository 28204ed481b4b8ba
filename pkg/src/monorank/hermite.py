"""Trace forms of gap-shaped complete intersections.

A gap system is ``G_i = X_i^(a_i+1) + F_i`` (i = 1..n) with
``deg F_i <= a_i - a0``. The leading powers are pairwise coprime, so the
generators already form a Groebner basis for any degree-compatible order and
reduction modulo the ideal is a direct rewrite ``X_i^(a_i+1) -> -F_i``.
Polynomials here live in ``X1..Xn``, stored with index 0 for ``X1``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .linalg import charpoly, is_symmetric, rank
from .poly import Polynomial, parse_polynomial
from .univariate import descartes_bound

Exps = tuple[int, ...]


class ObstructionFailure(AssertionError):
    """A gap system violated the zero-trace obstruction (would be a bug)."""


@dataclass(frozen=True)
class GapSystem:
    a: tuple[int, ...]
    a0: int
    F: tuple[Polynomial, ...]

    def __init__(self, a: Sequence[int], a0: int, F: Sequence[Polynomial]):
        a = tuple(int(v) for v in a)
        F = tuple(F)
        n = len(a)
        if n < 1:
            raise ValueError("a gap system needs at least one equation")
        if len(F) != n:
            raise ValueError(f"expected {n} tails F_i, got {len(F)}")
        if a0 < 0 or any(v < 0 for v in a):
            raise ValueError("exponents must be non-negative")
        for i, (ai, f) in enumerate(zip(a, F)):
            if f.nvars != n:
                raise ValueError(f"F_{i + 1} must be a polynomial in X1..X{n}")
            if not f.is_zero() and f.degree() > ai - a0:
                raise ValueError(
                    f"deg F_{i + 1} = {f.degree()} exceeds a_{i + 1} - a0 = {ai - a0}"
                )
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "a0", int(a0))
        object.__setattr__(self, "F", F)

    @property
    def n(self) -> int:
        return len(self.a)

    @property
    def bezout(self) -> int:
        return math.prod(v + 1 for v in self.a)

    def generators(self) -> list[Polynomial]:
        out = []
        for i, (ai, f) in enumerate(zip(self.a, self.F)):
            exps = [0] * self.n
            exps[i] = ai + 1
            out.append(Polynomial.monomial(exps) + f)
        return out

    @classmethod
    def from_generators(cls, gens: Sequence[Polynomial | str], a: Sequence[int], a0: int) -> "GapSystem":
        """Split ``G_i`` into its leading power ``X_i^(a_i+1)`` and tail ``F_i``.

        String generators are parsed with variables ``X1..Xn``.
        """
        n = len(a)
        polys = [parse_polynomial(g, nvars=n, offset=1) if isinstance(g, str) else g for g in gens]
        if len(polys) != n:
            raise ValueError(f"expected {n} generators, got {len(polys)}")
        tails = []
        for i, (ai, g) in enumerate(zip(a, polys)):
            lead = [0] * n
            lead[i] = ai + 1
            if g.coefficient(lead) != 1:
                raise ValueError(f"generator {i + 1} must contain X{i + 1}^{ai + 1} with coefficient 1")
            tails.append(g - Polynomial.monomial(lead))
        return cls(a, a0, tails)


class QuotientAlgebra:
    """``Q[X1..Xn] / (G_1..G_n)`` with the box monomial basis."""

    def __init__(self, system: GapSystem):
        self.system = system
        self.basis: list[Exps] = list(itertools.product(*(range(v + 1) for v in system.a)))
        self.index = {b: i for i, b in enumerate(self.basis)}
        self._nf: dict[Exps, dict[Exps, Fraction]] = {}
        self._trace: dict[Exps, Fraction] = {}

    @property
    def dim(self) -> int:
        return len(self.basis)

    def _reduce_monomial(self, exps: Exps) -> dict[Exps, Fraction]:
        cached = self._nf.get(exps)
        if cached is not None:
            return cached
        a = self.system.a
        i = next((k for k, (e, ak) in enumerate(zip(exps, a)) if e > ak), None)
        if i is None:
            out = {exps: Fraction(1)}
        else:
            rest = list(exps)
            rest[i] -= a[i] + 1
            out = {}
            for t, c in self.system.F[i].terms.items():
                shifted = tuple(r + s for r, s in zip(rest, t))
                for b, v in self._reduce_monomial(shifted).items():
                    out[b] = out.get(b, 0) - c * v
            out = {b: v for b, v in out.items() if v}
        self._nf[exps] = out
        return out

    def normal_form(self, f: Polynomial) -> Polynomial:
        if f.nvars != self.system.n:
            raise ValueError(f"expected a polynomial in {self.system.n} variables")
        out: dict[Exps, Fraction] = {}
        for exps, c in f.terms.items():
            for b, v in self._reduce_monomial(exps).items():
                out[b] = out.get(b, 0) + c * v
        return Polynomial(out, self.system.n)

    def mult_matrix(self, f: Polynomial) -> list[list[Fraction]]:
        """Matrix of ``h -> f*h``; column j is the image of basis element j."""
        dim = self.dim
        m = [[Fraction(0)] * dim for _ in range(dim)]
        for j, b in enumerate(self.basis):
            for exps, c in f.terms.items():
                shifted = tuple(x + y for x, y in zip(exps, b))
                for r, v in self._reduce_monomial(shifted).items():
                    m[self.index[r]][j] += c * v
        return m

    def _trace_monomial(self, exps: Exps) -> Fraction:
        cached = self._trace.get(exps)
        if cached is not None:
            return cached
        nf = self._reduce_monomial(exps)
        if len(nf) == 1 and exps in nf:
            # basis element: sum of diagonal entries of its multiplication matrix
            total = Fraction(0)
            for b in self.basis:
                shifted = tuple(x + y for x, y in zip(exps, b))
                total += self._reduce_monomial(shifted).get(b, 0)
        else:
            total = sum((c * self._trace_monomial(b) for b, c in nf.items()), Fraction(0))
        self._trace[exps] = total
        return total

    def trace(self, f: Polynomial) -> Fraction:
        return sum((c * self._trace_monomial(e) for e, c in f.terms.items()), Fraction(0))

    def trace_form(self) -> list[list[Fraction]]:
        """``B[i][j] = Tr(m_{b_i * b_j})`` in the monomial basis."""
        dim = self.dim
        out = [[Fraction(0)] * dim for _ in range(dim)]
        for i, bi in enumerate(self.basis):
            for j in range(i, dim):
                v = self._trace_monomial(tuple(x + y for x, y in zip(bi, self.basis[j])))
                out[i][j] = out[j][i] = v
        return out


def signature(b: Sequence[Sequence]) -> tuple[int, int, int]:
    """Inertia ``(n_plus, n_minus, n_zero)`` of a rational symmetric matrix.

    Eigenvalues of a symmetric matrix are real, so Descartes' rule of signs
    on the characteristic polynomial counts them exactly.
    """
    if not is_symmetric(b):
        raise ValueError("signature needs a symmetric matrix")
    dim = len(b)
    if dim == 0:
        return (0, 0, 0)
    p = charpoly(b)
    zero = dim - rank(b)
    low = next(i for i, c in enumerate(p) if c)
    if low != zero:
        raise ArithmeticError(f"charpoly has a {low}-fold zero root but the rank deficit is {zero}")
    tail = p[low:]
    plus = descartes_bound(tail)
    minus = descartes_bound([c * (-1) ** i for i, c in enumerate(tail)])
    if plus + minus + zero != dim:
        raise ArithmeticError("characteristic polynomial is not real-rooted")
    return plus, minus, zero


def count_real_points(system: GapSystem) -> tuple[int, int]:
    """``(distinct real solutions, distinct complex solutions)``."""
    plus, minus, _ = signature(QuotientAlgebra(system).trace_form())
    return plus - minus, plus + minus


def check_gap_obstruction(system: GapSystem) -> bool:
    """Confirm that a gap system with a0 >= 2 cannot be totally real.

    Checks that ``Tr(m_{X1^2}) = 0`` and that fewer than ``prod(a_i + 1)``
    real solutions exist.
    """
    if system.a0 < 2:
        raise ValueError(f"the obstruction needs a0 >= 2, got {system.a0}")
    if any(ai < system.a0 for ai in system.a):
        raise ValueError(f"every a_i must be at least a0 = {system.a0}")
    alg = QuotientAlgebra(system)
    x1_sq = [0] * system.n
    x1_sq[0] = 2
    t = alg.trace(Polynomial.monomial(x1_sq))
    if t != 0:
        raise ObstructionFailure(f"Tr(m_X1^2) = {t} for {system}")
    plus, minus, _ = signature(alg.trace_form())
    if plus - minus >= system.bezout:
        raise ObstructionFailure(f"{plus - minus} real solutions for {system}")
    return True
