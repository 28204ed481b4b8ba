import itertools

import pytest

from monorank.constructors import decompose_real
from monorank.monomial import Monomial
from monorank.ranks import (
    complex_rank,
    rank_report,
    real_equals_complex,
    real_rank_exact,
    real_rank_lower,
    real_rank_upper,
)

M = Monomial


def test_complex_rank_examples():
    assert complex_rank(M((2, 2, 2))) == 9
    assert complex_rank(M((1, 1))) == 2
    assert complex_rank(M((2, 3, 4))) == 20


def test_real_rank_upper_examples():
    assert real_rank_upper(M((2, 2))) == (4, "binary")
    assert real_rank_upper(M((2, 2, 2))) == (13, "squares")
    assert real_rank_upper(M((1, 1, 1))) == (4, "a0eq1")
    assert real_rank_upper(M((2, 2, 3))) == (20, "general-grid")


def test_real_rank_exact_examples():
    assert real_rank_exact(M((3, 5))) == 8
    assert real_rank_exact(M((1, 3, 3))) == 16
    assert real_rank_exact(M((2, 2, 2))) is None


def test_real_equals_complex_examples():
    assert real_equals_complex(M((1, 9)))
    assert not real_equals_complex(M((2, 2)))
    assert complex_rank(M((2, 2))) == 3 < 4 == real_rank_exact(M((2, 2)))
    assert not real_equals_complex(M((2, 2, 2)))


def test_real_rank_lower_examples():
    assert real_rank_lower(M((2, 2, 2))) == 11
    assert real_rank_lower(M((2, 3))) == 5
    assert real_rank_lower(M((1, 1, 1))) == 4
    # strictness only: rk_C + 1
    assert real_rank_lower(M((2, 2, 3))) == complex_rank(M((2, 2, 3))) + 1


@pytest.mark.parametrize("bad", [(0, 2), (2,), (-1, 3)])
def test_bad_monomials(bad):
    with pytest.raises(ValueError):
        M(bad)


def test_parse_monomial():
    assert M.parse("x0^2*x1^3") == M((2, 3))
    assert M.parse("x1^3*x0") == M((1, 3))
    for bad in ["x0^2*x2", "2*x0*x1", "x0 + x1", "x0^3"]:
        with pytest.raises(ValueError):
            M.parse(bad)


SWEEP = [e for n in range(1, 4) for e in itertools.combinations_with_replacement(range(1, 5), n + 1)]


@pytest.mark.parametrize("exps", SWEEP)
def test_rank_interval(exps):
    r = rank_report(M(exps))
    assert r.complex_rank <= r.real_lower <= r.real_upper
    assert r.equality == (exps[0] == 1)
    if r.real_exact is not None:
        assert r.real_lower == r.real_exact == r.real_upper
    if exps[0] == 1 or len(exps) == 2:
        assert r.equality == (r.real_exact == r.complex_rank)


@pytest.mark.parametrize("exps", [(1, 2, 3), (2, 2, 3), (1, 4), (2, 3, 3, 4)])
def test_permutation_invariance(exps):
    reports = {
        (complex_rank(M(p)), real_rank_upper(M(p)), real_rank_exact(M(p)), real_rank_lower(M(p)), real_equals_complex(M(p)))
        for p in itertools.permutations(exps)
    }
    assert len(reports) == 1


def test_exact_value_matches_decomposition_size():
    for exps in [(1, 1), (2, 5), (1, 2, 3), (1, 1, 1, 4)]:
        assert decompose_real(M(exps)).size == real_rank_exact(M(exps))
