"""Exact linear algebra over the rationals.

Elimination is fraction-free (Bareiss): rows are scaled to integers once and
every intermediate entry stays an integer minor of the input.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .poly import to_fraction


class InconsistentSystem(ArithmeticError):
    pass


def _integer_rows(rows: Sequence[Sequence]) -> list[list[int]]:
    out = []
    for row in rows:
        fr = [to_fraction(v) for v in row]
        den = math.lcm(*(v.denominator for v in fr)) if fr else 1
        out.append([int(v * den) for v in fr])
    return out


def bareiss_echelon(m: list[list[int]], ncols: int | None = None) -> list[int]:
    """Reduce integer matrix ``m`` in place to row echelon form.

    Pivots are searched only in the first ``ncols`` columns (the remaining
    columns ride along, e.g. a right-hand side). Returns pivot columns.
    """
    nrows = len(m)
    if not nrows:
        return []
    width = len(m[0])
    if ncols is None:
        ncols = width
    prev = 1
    r = 0
    pivots = []
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if m[i][c]), None)
        if piv is None:
            continue
        if piv != r:
            m[r], m[piv] = m[piv], m[r]
        top = m[r]
        p = top[c]
        for i in range(r + 1, nrows):
            row = m[i]
            f = row[c]
            if f:
                for j in range(c + 1, width):
                    row[j] = (p * row[j] - f * top[j]) // prev
            elif p != prev:
                for j in range(c + 1, width):
                    row[j] = (p * row[j]) // prev
            row[c] = 0
        prev = p
        pivots.append(c)
        r += 1
    return pivots


def rank(matrix: Sequence[Sequence]) -> int:
    if not matrix:
        return 0
    return len(bareiss_echelon(_integer_rows(matrix)))


@dataclass(frozen=True)
class Solution:
    values: tuple[Fraction, ...]
    rank: int
    free: tuple[int, ...]

    @property
    def nullity(self) -> int:
        return len(self.free)


def solve(a: Sequence[Sequence], b: Sequence) -> Solution:
    """Solve ``a x = b`` exactly; free unknowns are set to zero.

    Raises :class:`InconsistentSystem` if there is no solution.
    """
    nrows = len(a)
    if nrows != len(b):
        raise ValueError("row count of a and b differ")
    ncols = len(a[0]) if nrows else 0
    aug = _integer_rows([list(row) + [rhs] for row, rhs in zip(a, b)])
    pivots = bareiss_echelon(aug, ncols)
    r = len(pivots)
    for i in range(r, nrows):
        if aug[i][ncols]:
            raise InconsistentSystem(f"row {i} reduces to 0 = {aug[i][ncols]}")
    x = [Fraction(0)] * ncols
    for i in range(r - 1, -1, -1):
        c = pivots[i]
        row = aug[i]
        acc = Fraction(row[ncols])
        for j in pivots[i + 1:]:
            if row[j]:
                acc -= row[j] * x[j]
        x[c] = acc / row[c]
    free = tuple(c for c in range(ncols) if c not in set(pivots))
    return Solution(tuple(x), r, free)


def _is_prime(n: int) -> bool:
    # Miller-Rabin with bases 2, 3, 5, 7 is deterministic below 3.2e9
    if n < 2:
        return False
    for q in (2, 3, 5, 7):
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for b in (2, 3, 5, 7):
        x = pow(b, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _primes():
    p = 2**31 - 1
    while True:
        if _is_prime(p):
            yield p
        p -= 2


def integer_charpoly(m: Sequence[Sequence[int]], backend: str | None = None) -> list[int]:
    """Charpoly of an integer matrix, lowest degree first.

    Hessenberg reduction modulo word-size primes, recombined by CRT once the
    modulus exceeds twice the coefficient bound ``(1 + rho)^n`` where ``rho``
    is the largest absolute row sum.
    """
    from ._kernels import charpoly_mod

    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("matrix must be square")
    if n == 0:
        return [1]
    rho = max(sum(abs(int(v)) for v in row) for row in m)
    bound = 2 * (1 + rho) ** n
    coeffs = [0] * (n + 1)
    modulus = 1
    for p in _primes():
        a = np.array([[int(v) % p for v in row] for row in m], dtype=np.int64)
        r = [int(c) for c in charpoly_mod(a, p, backend)]
        # Garner step: x = coeffs + modulus * t with t chosen mod p
        inv = pow(modulus % p, -1, p)
        coeffs = [c + modulus * ((ri - c) * inv % p) for c, ri in zip(coeffs, r)]
        modulus *= p
        if modulus > bound:
            break
    half = modulus // 2
    return [c - modulus if c > half else c for c in coeffs]


def charpoly(matrix: Sequence[Sequence], backend: str | None = None) -> list[Fraction]:
    """Coefficients of ``det(t I - A)``, lowest degree first.

    The matrix is cleared to ``L A`` with integer entries; the coefficient of
    ``t^k`` is then that of ``L A`` divided by ``L^(n-k)``.
    """
    n = len(matrix)
    fr = [[to_fraction(v) for v in row] for row in matrix]
    if any(len(row) != n for row in fr):
        raise ValueError("matrix must be square")
    den = math.lcm(1, *(v.denominator for row in fr for v in row))
    ints = [[int(v * den) for v in row] for row in fr]
    return [Fraction(c, den ** (n - k)) for k, c in enumerate(integer_charpoly(ints, backend))]


def is_symmetric(matrix: Sequence[Sequence]) -> bool:
    n = len(matrix)
    return all(len(row) == n for row in matrix) and all(
        matrix[i][j] == matrix[j][i] for i in range(n) for j in range(i + 1, n)
    )
