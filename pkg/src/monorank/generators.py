"""Seeded random inputs for property checks and the CLI ``--seed`` option."""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

from .hermite import GapSystem
from .poly import Polynomial, compositions
from .univariate import is_squarefree, trim


def random_rational(rng: random.Random, bound: int = 5, max_den: int = 3) -> Fraction:
    """A rational in ``[-bound, bound]`` with denominator at most ``max_den``."""
    den = rng.randint(1, max_den)
    return Fraction(rng.randint(-bound * den, bound * den), den)


def random_polynomial(rng: random.Random, nvars: int, max_degree: int, density: float = 0.6, bound: int = 5) -> Polynomial:
    if max_degree < 0:
        return Polynomial.zero(nvars)
    terms = {}
    for deg in range(max_degree + 1):
        for exps in compositions(deg, nvars):
            if rng.random() < density:
                terms[exps] = random_rational(rng, bound)
    return Polynomial(terms, nvars)


def random_gap_system(rng: random.Random, max_n: int = 3, max_a: int = 3, min_a0: int = 2, bound: int = 5) -> GapSystem:
    """A gap system with ``a0 >= min_a0`` and ``a0 <= a_1 <= ... <= a_n <= max_a``."""
    n = rng.randint(1, max_n)
    a0 = rng.randint(min_a0, max_a)
    a = sorted(rng.randint(a0, max_a) for _ in range(n))
    tails = [random_polynomial(rng, n, ai - a0, bound=bound) for ai in a]
    return GapSystem(a, a0, tails)


def random_squarefree(rng: random.Random, min_degree: int = 1, max_degree: int = 8, bound: int = 5) -> list[Fraction]:
    """Squarefree univariate coefficients (lowest first), nonzero leading term."""
    for _ in itertools.count():
        deg = rng.randint(min_degree, max_degree)
        coeffs = [Fraction(rng.randint(-bound, bound)) for _ in range(deg)]
        coeffs.append(Fraction(rng.choice([v for v in range(-bound, bound + 1) if v])))
        if is_squarefree(coeffs):
            return coeffs
    raise AssertionError("unreachable")


def random_double_gap(rng: random.Random, max_degree: int = 8, bound: int = 5) -> tuple[list[Fraction], int]:
    """Monic polynomial ``t^d + c_1 t^(d-1) + ... + c_d`` with ``c_i = c_(i+1) = 0``.

    Returns (coefficients lowest first, i) for some ``0 < i < d``.
    """
    d = rng.randint(3, max_degree)
    i = rng.randint(1, d - 1)
    high = [Fraction(1)] + [random_rational(rng, bound) for _ in range(d)]
    high[i] = high[i + 1] = Fraction(0)
    return trim(high[::-1]), i
