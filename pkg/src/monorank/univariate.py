"""Univariate helpers: coefficient lists, Sturm counting, symmetric functions.

Univariate polynomials are plain lists of coefficients, lowest degree first.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

from .poly import Polynomial, to_fraction


def trim(coeffs: Sequence) -> list:
    out = list(coeffs)
    while out and not out[-1]:
        out.pop()
    return out


def from_polynomial(p: Polynomial) -> list[Fraction]:
    if p.nvars != 1:
        raise ValueError(f"expected a univariate polynomial, got {p.nvars} variables")
    if p.is_zero():
        return []
    out = [Fraction(0)] * (p.degree() + 1)
    for (e,), c in p.terms.items():
        out[e] = c
    return out


def to_polynomial(coeffs: Sequence) -> Polynomial:
    return Polynomial({(i,): c for i, c in enumerate(coeffs) if c}, 1)


def from_roots(roots: Sequence) -> list[Fraction]:
    """Coefficients of the monic ``prod (t - r)``."""
    out = [Fraction(1)]
    for r in roots:
        r = to_fraction(r)
        nxt = [Fraction(0)] * (len(out) + 1)
        for i, c in enumerate(out):
            nxt[i + 1] += c
            nxt[i] -= r * c
        out = nxt
    return out


def elementary_symmetric(roots: Sequence, k: int) -> Fraction:
    """e_k of ``roots``; e_0 is 1."""
    roots = [to_fraction(r) for r in roots]
    if not 0 <= k <= len(roots):
        raise ValueError(f"k={k} outside 0..{len(roots)}")
    e = [Fraction(1)] + [Fraction(0)] * k
    for r in roots:
        for j in range(k, 0, -1):
            e[j] += r * e[j - 1]
    return e[k]


def derivative(coeffs: Sequence) -> list:
    return [i * c for i, c in enumerate(coeffs)][1:]


def evaluate(coeffs: Sequence, t):
    acc = 0
    for c in reversed(coeffs):
        acc = acc * t + c
    return acc


def _primitive_integer(coeffs: Sequence) -> list[int]:
    """Positive rational multiple of ``coeffs`` with coprime integer entries."""
    fracs = [to_fraction(c) for c in coeffs]
    den = math.lcm(*(c.denominator for c in fracs))
    ints = [int(c * den) for c in fracs]
    g = math.gcd(*ints)
    return [c // g for c in ints] if g > 1 else ints


def _signed_prem(a: list[int], b: list[int]) -> list[int]:
    """A positive multiple of ``a mod b`` computed without division."""
    r = list(a)
    lb = b[-1]
    db = len(b) - 1
    steps = 0
    while len(r) - 1 >= db and r:
        lr = r[-1]
        shift = len(r) - 1 - db
        r = [lb * c for c in r]
        for i, c in enumerate(b):
            r[i + shift] -= lr * c
        r = trim(r)
        steps += 1
    if lb < 0 and steps % 2:
        r = [-c for c in r]
    return r


def sturm_sequence(coeffs: Sequence) -> list[list[int]]:
    """Sturm chain of ``coeffs`` built from content-free pseudo-remainders.

    Every element is a positive multiple of the corresponding element of
    the classical chain, so sign variations are unchanged.
    """
    p = trim(coeffs)
    if not p:
        raise ValueError("the zero polynomial has no Sturm sequence")
    chain = [_primitive_integer(p)]
    dp = derivative(chain[0])
    if trim(dp):
        chain.append(_primitive_integer(trim(dp)))
    while len(chain) > 1 and len(chain[-1]) > 1:
        r = _signed_prem(chain[-2], chain[-1])
        if not r:
            break
        chain.append(_primitive_integer([-c for c in r]))
    return chain


def _variations(signs: Sequence[int]) -> int:
    nz = [s for s in signs if s]
    return sum(1 for u, v in zip(nz, nz[1:]) if u != v)


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def sturm_count(p) -> int:
    """Number of distinct real roots of a univariate polynomial.

    ``p`` is a univariate :class:`Polynomial` or a coefficient sequence
    (lowest degree first).
    """
    coeffs = from_polynomial(p) if isinstance(p, Polynomial) else trim([to_fraction(c) for c in p])
    if not coeffs:
        raise ValueError("sturm_count of the zero polynomial")
    chain = sturm_sequence(coeffs)
    at_pos = [_sign(q[-1]) for q in chain]
    at_neg = [_sign(q[-1]) * (-1) ** (len(q) - 1) for q in chain]
    return _variations(at_neg) - _variations(at_pos)


def descartes_bound(coeffs: Sequence) -> int:
    """Sign variations of the coefficient sequence."""
    return _variations([_sign(c) for c in coeffs])


def divmod_poly(a: Sequence, b: Sequence) -> tuple[list[Fraction], list[Fraction]]:
    a = [to_fraction(c) for c in trim(a)]
    b = [to_fraction(c) for c in trim(b)]
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    r = list(a)
    while len(r) >= len(b) and r:
        k = r[-1] / b[-1]
        shift = len(r) - len(b)
        q[shift] = k
        for i, c in enumerate(b):
            r[i + shift] -= k * c
        r = trim(r)
    return trim(q), r


def gcd(a: Sequence, b: Sequence) -> list[Fraction]:
    """Monic gcd over the rationals."""
    a = trim([to_fraction(c) for c in a])
    b = trim([to_fraction(c) for c in b])
    while b:
        a, b = b, divmod_poly(a, b)[1]
    if not a:
        return []
    return [c / a[-1] for c in a]


def is_squarefree(coeffs: Sequence) -> bool:
    p = trim(coeffs)
    return len(gcd(p, derivative(p))) == 1
