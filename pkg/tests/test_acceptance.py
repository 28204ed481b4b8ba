"""Exit criteria of the build, one test (or parametrized family) per criterion.

Run ``pytest tests/test_acceptance.py`` to get a PASS/FAIL line per criterion
in the terminal summary.
"""

import itertools
import math
import random
import time

import pytest
import sympy as sp

from monorank.apolarity import verify_decomposition
from monorank.constructors import decompose_real, gapped_roots, min_points_a0_eq_1, squares_decomposition
from monorank.generators import random_double_gap, random_gap_system, random_squarefree
from monorank.hermite import GapSystem, QuotientAlgebra, count_real_points, signature
from monorank.monomial import Monomial
from monorank.poly import Polynomial
from monorank.ranks import complex_rank, real_equals_complex, real_rank_lower, real_rank_upper
from monorank.univariate import elementary_symmetric, from_roots, sturm_count

from oracles import expand_terms, symbols

acceptance = pytest.mark.acceptance

SWEEP = [e for n in range(1, 4) for e in itertools.combinations_with_replacement(range(1, 5), n + 1)]


def scaled_term_set(dec, scale):
    return {(c * scale, form.coeffs) for c, form in dec.terms}


@acceptance(1, "squares identity n=1: 12 x0^2 x1^2 exactly, < 1 s")
def test_squares_identity_n1():
    t0 = time.perf_counter()
    dec = squares_decomposition(1)
    ok = verify_decomposition(dec)
    elapsed = time.perf_counter() - t0
    assert ok and elapsed < 1.0
    assert scaled_term_set(dec, 12) == {(1, (1, 1)), (1, (1, -1)), (-2, (1, 0)), (-2, (0, 1))}
    x0, x1 = symbols(2)
    rhs = (x0 + x1) ** 4 + (x0 - x1) ** 4 - 2 * (x0**4 + x1**4)
    assert sp.expand(12 * expand_terms(dec.terms, 4, 2)) == sp.expand(rhs) == 12 * x0**2 * x1**2


@acceptance(2, "squares identity n=2: 13 terms for 360 x0^2 x1^2 x2^2 exactly, < 1 s")
def test_squares_identity_n2():
    t0 = time.perf_counter()
    dec = squares_decomposition(2)
    ok = verify_decomposition(dec)
    elapsed = time.perf_counter() - t0
    assert ok and elapsed < 1.0
    expected = (
        {(1, p) for p in [(1, 1, 1), (1, 1, -1), (1, -1, 1), (1, -1, -1)]}
        | {(-2, p) for p in [(1, 1, 0), (1, -1, 0), (1, 0, 1), (1, 0, -1), (0, 1, 1), (0, 1, -1)]}
        | {(4, p) for p in [(1, 0, 0), (0, 1, 0), (0, 0, 1)]}
    )
    assert dec.size == 13
    assert scaled_term_set(dec, 360) == expected
    x0, x1, x2 = symbols(3)
    assert sp.expand(360 * expand_terms(dec.terms, 6, 3)) == 360 * x0**2 * x1**2 * x2**2


@acceptance(3, "rank values of x0^2 x1^2 x2^2: 9, 13, 11, not equal")
def test_rank_values_222():
    m = Monomial((2, 2, 2))
    assert complex_rank(m) == 9
    assert real_rank_upper(m)[0] == 13
    assert real_rank_lower(m) == 11
    assert real_equals_complex(m) is False


@acceptance(4, "binary optimum: a0 + a1 terms for 1 <= a0 <= a1 <= 6")
@pytest.mark.parametrize("a0,a1", [(a0, a1) for a1 in range(1, 7) for a0 in range(1, a1 + 1)])
def test_binary_optimum(a0, a1):
    dec = decompose_real(Monomial((a0, a1)))
    assert verify_decomposition(dec)
    assert dec.size == a0 + a1


@acceptance(5, "a0 = 1: real size equals complex rank, n <= 3, a_i <= 4")
@pytest.mark.parametrize("exps", [e for e in SWEEP if e[0] == 1])
def test_a0_one_equality(exps):
    m = Monomial(exps)
    dec = decompose_real(m)
    assert verify_decomposition(dec)
    assert dec.size == complex_rank(m)


@acceptance(6, "general sweep n <= 3, exponents <= 4: verified, promised size, >= complex rank, < 5 min")
def test_general_sweep():
    t0 = time.perf_counter()
    failures = []
    for exps in SWEEP:
        m = Monomial(exps)
        dec = decompose_real(m)
        promised = real_rank_upper(m)[0]
        if not (verify_decomposition(dec) and dec.size == promised and dec.size >= complex_rank(m)):
            failures.append(exps)
    elapsed = time.perf_counter() - t0
    assert failures == []
    assert elapsed < 300, f"sweep took {elapsed:.1f} s"


@acceptance(7, "gap systems: B(X1, X1) = 0 and fewer real points than the Bezout number")
@pytest.mark.parametrize("seed", range(100))
def test_gap_system_property(seed):
    system = random_gap_system(random.Random(seed), max_n=3, max_a=3, min_a0=2)
    assert system.a0 >= 2 and system.n <= 3 and max(system.a) <= 3
    alg = QuotientAlgebra(system)
    x1_sq = Polynomial.monomial(tuple(2 if j == 0 else 0 for j in range(system.n)))
    assert alg.trace(x1_sq) == 0
    real, _ = count_real_points(system)
    assert real < math.prod(a + 1 for a in system.a)


@acceptance(8, "Hermite count agrees with Sturm on 200 squarefree univariates")
@pytest.mark.parametrize("seed", range(200))
def test_hermite_vs_sturm(seed):
    coeffs = random_squarefree(random.Random(seed), max_degree=8)
    d = len(coeffs) - 1
    lead = coeffs[-1]
    tail = {(k,): c / lead for k, c in enumerate(coeffs[:-1]) if c}
    system = GapSystem([d - 1], 0, [Polynomial(tail, 1)])
    real, complex_distinct = count_real_points(system)
    assert real == sturm_count(coeffs)
    assert complex_distinct == d


WITNESS_MONOMIALS = [
    (1, 1), (1, 2), (1, 4), (1, 1, 1), (1, 1, 3),
    (1, 2, 2), (1, 2, 3), (1, 1, 1, 1), (1, 1, 2, 2), (1, 2, 2, 3),
]


@acceptance(9, "grid systems of the a0 = 1 point sets have positive definite trace forms")
@pytest.mark.parametrize("exps", WITNESS_MONOMIALS)
def test_a0_one_grid_positive_definite(exps):
    n = len(exps) - 1
    points = min_points_a0_eq_1(Monomial(exps))
    gens = []
    for i in range(n):
        values = sorted({p.coords[i + 1] for p in points})
        assert len(values) == exps[i + 1] + 1
        coeffs = from_roots(values)
        gens.append(Polynomial({tuple(k if j == i else 0 for j in range(n)): c for k, c in enumerate(coeffs) if c}, n))
    system = GapSystem.from_generators(gens, exps[1:], 1)
    b = QuotientAlgebra(system).trace_form()
    plus, minus, zero = signature(b)
    assert (plus, minus, zero) == (len(b), 0, 0)


@acceptance(10, "gapped roots are real with e_a0 = 0; double gaps lose real roots")
@pytest.mark.parametrize("case", [("gapped", a0, ai) for ai in range(1, 6) for a0 in range(1, ai + 1)] + [("double", s, 0) for s in range(100)])
def test_gapped_and_double_gap_roots(case):
    kind, u, v = case
    if kind == "gapped":
        rs = gapped_roots(u, v)
        assert elementary_symmetric(rs.roots, u) == 0
        assert sturm_count(from_roots(rs.roots)) == u + v
    else:
        coeffs, i = random_double_gap(random.Random(u), max_degree=8)
        d = len(coeffs) - 1
        assert coeffs[-1] == 1 and coeffs[d - i] == coeffs[d - i - 1] == 0
        assert sturm_count(coeffs) < d
