"""Explicit real apolar point sets and the decompositions they carry.

All grids here are tensor products ``{[1 : v1 : ... : vn]}`` where axis ``i``
ranges over the roots of a binary form in ``X0, Xi`` lying in the perp ideal
of the monomial. Grid coefficients are obtained per axis (a small
Vandermonde solve each) and multiplied together.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .apolarity import Decomposition, PointSet, ProjectivePoint, SolveDiagnostic, verify_decomposition
from .linalg import solve
from .monomial import Monomial
from .poly import LinearForm, to_fraction
from .ranks import candidate_sizes, real_rank_upper
from .univariate import elementary_symmetric


def seed_values() -> Iterator[int]:
    """1, 2, -1, 3, -2, 4, -3, ..."""
    yield 1
    k = 2
    while True:
        yield k
        yield -(k - 1)
        k += 1


@dataclass(frozen=True)
class GappedRootSet:
    """Distinct rationals whose e_{a0} vanishes.

    Equivalently, ``prod(Xi - r X0)`` has no ``X0^a0 Xi^ai`` term.
    """

    a0: int
    ai: int
    roots: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.roots) != self.a0 + self.ai:
            raise ValueError(f"expected {self.a0 + self.ai} roots, got {len(self.roots)}")
        if len(set(self.roots)) != len(self.roots):
            raise ValueError("roots are not distinct")
        if elementary_symmetric(self.roots, self.a0) != 0:
            raise ValueError(f"e_{self.a0} of the roots is not zero")


MAX_RETRIES = 10_000


def gapped_roots(a0: int, ai: int) -> GappedRootSet:
    """a0 + ai distinct rationals with ``e_{a0} = 0``.

    The first a0 + ai - 1 values come from :func:`seed_values`; the last is
    the unique solution of ``e_{a0}(seed) + r * e_{a0-1}(seed) = 0``. If that
    equation is degenerate or its solution repeats a seed value, the largest
    seed value is bumped to the next unused integer and the solve retried.
    """
    if not 1 <= a0 <= ai:
        raise ValueError(f"need 1 <= a0 <= ai, got a0={a0}, ai={ai}")
    seed = [Fraction(v) for v in itertools.islice(seed_values(), a0 + ai - 1)]
    for _ in range(MAX_RETRIES):
        lower = elementary_symmetric(seed, a0 - 1)
        if lower:
            last = -elementary_symmetric(seed, a0) / lower
            if last not in seed:
                return GappedRootSet(a0, ai, tuple(seed) + (last,))
        top = max(seed)
        bumped = top + 1
        while bumped in seed:
            bumped += 1
        seed[seed.index(top)] = bumped
    raise RuntimeError(f"gapped_roots({a0}, {ai}) did not converge")


def sum_zero_values(count: int) -> tuple[Fraction, ...]:
    """``count`` distinct values summing to zero: 0, 1, -1, 2, -2, ..."""
    if count < 1:
        raise ValueError("count must be positive")
    m, odd = divmod(count, 2)
    out = [Fraction(0)] if odd else []
    for k in range(1, m + 1):
        out += [Fraction(k), Fraction(-k)]
    return tuple(out)


def _canonical(m: Monomial) -> tuple[tuple[int, ...], tuple[int, ...]]:
    return m.canonical(), m.permutation


def _to_original(coords: Sequence, perm: Sequence[int]) -> list:
    out = [None] * len(perm)
    for k, orig in enumerate(perm):
        out[orig] = coords[k]
    return out


def _grid_points(axes: Sequence[Sequence[Fraction]]) -> list[tuple[Fraction, ...]]:
    return [(Fraction(1),) + combo for combo in itertools.product(*axes)]


def _axis_weights(values: Sequence[Fraction], target: int) -> list[Fraction]:
    # w with sum_j w_j v_j^k = [k == target] for k < len(values)
    m = len(values)
    a = [[v ** k for v in values] for k in range(m)]
    b = [int(k == target) for k in range(m)]
    return list(solve(a, b).values)


def grid_terms(exps: Sequence[int], axes: Sequence[Sequence[Fraction]]) -> tuple[list[tuple[Fraction, LinearForm]], tuple[int, ...]]:
    """Coefficients of the product-structured solution on a canonical grid.

    ``exps`` is sorted and axis ``i`` carries the values for variable i+1.
    The functional ``P -> c_P`` is the tensor product of one functional per
    axis that picks out the ``t^{a_i}`` coordinate in the monomial basis of
    functions on that axis. Returns the nonzero terms and the indices of
    grid points that received a zero coefficient.
    """
    a0, rest = exps[0], exps[1:]
    d = sum(exps)
    if len(axes) != len(rest):
        raise ValueError("need one axis per variable after the first")
    scale = Fraction(math.prod(math.factorial(e) for e in exps), math.factorial(d))
    weights = [_axis_weights(vals, e) for vals, e in zip(axes, rest)]
    terms = []
    dropped = []
    for idx, combo in enumerate(itertools.product(*(range(len(v)) for v in axes))):
        c = scale
        for w, j in zip(weights, combo):
            c *= w[j]
        if c:
            point = (Fraction(1),) + tuple(axes[i][j] for i, j in enumerate(combo))
            terms.append((c, LinearForm(point)))
        else:
            dropped.append(idx)
    return terms, tuple(dropped)


def _gapped_axes(exps: Sequence[int]) -> list[tuple[Fraction, ...]]:
    return [gapped_roots(exps[0], e).roots for e in exps[1:]]


def _a0eq1_axes(exps: Sequence[int], value_sets=None) -> list[tuple[Fraction, ...]]:
    if exps[0] != 1:
        raise ValueError(f"least exponent is {exps[0]}, not 1")
    rest = exps[1:]
    if value_sets is None:
        return [sum_zero_values(e + 1) for e in rest]
    if len(value_sets) != len(rest):
        raise ValueError(f"expected {len(rest)} value sets")
    axes = []
    for vals, e in zip(value_sets, rest):
        vals = tuple(to_fraction(v) for v in vals)
        if len(vals) != e + 1:
            raise ValueError(f"value set {vals} should have {e + 1} entries")
        if len(set(vals)) != len(vals):
            raise ValueError(f"value set {vals} has repeated entries")
        if sum(vals) != 0:
            raise ValueError(f"value set {vals} does not sum to zero")
        axes.append(vals)
    return axes


def _point_set(m: Monomial, axes) -> PointSet:
    perm = m.permutation
    return PointSet(ProjectivePoint(_to_original(p, perm)) for p in _grid_points(axes))


def upper_bound_points(m: Monomial) -> PointSet:
    """Grid of size prod_{i>=1}(a0 + ai) apolar to ``m`` (in m's variable order)."""
    return _point_set(m, _gapped_axes(m.canonical()))


def min_points_a0_eq_1(m: Monomial, value_sets: Sequence[Sequence] | None = None) -> PointSet:
    """Grid of size prod_{i>=1}(ai + 1) for a monomial whose least exponent is 1.

    ``value_sets`` optionally replaces the default sum-zero values, one set
    per variable in sorted-exponent order (the least-exponent variable
    excluded).
    """
    return _point_set(m, _a0eq1_axes(m.canonical(), value_sets))


def squares_points(n: int) -> list[tuple[int, ...]]:
    """Points of {0, +-1}^(n+1) up to sign, first nonzero entry 1.

    Ordered by number of nonzero entries (descending), then by support,
    then with + before -.
    """
    out = []
    for k in range(n + 1, 0, -1):
        for support in itertools.combinations(range(n + 1), k):
            for signs in itertools.product((1, -1), repeat=k - 1):
                p = [0] * (n + 1)
                p[support[0]] = 1
                for pos, s in zip(support[1:], signs):
                    p[pos] = s
                out.append(tuple(p))
    return out


def squares_decomposition(n: int) -> Decomposition:
    """``x0^2 ... xn^2`` as (3^(n+1) - 1)/2 signed powers of {0, +-1} forms.

    The point with k nonzero entries carries ``(-2)^(n+1-k) * 2 / (2n+2)!``.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    d = 2 * n + 2
    base = Fraction(2, math.factorial(d))
    terms = []
    for p in squares_points(n):
        k = sum(1 for v in p if v)
        terms.append((base * (-2) ** (n + 1 - k), LinearForm(p)))
    dec = Decomposition(Monomial((2,) * (n + 1)), terms, method="squares")
    if not verify_decomposition(dec):
        raise RuntimeError(f"squares decomposition for n={n} failed to verify")
    return dec


def decompose_real(m: Monomial, method: str | None = None) -> Decomposition:
    """A verified real decomposition of ``m`` from the best applicable grid.

    ``method`` forces one of ``binary``, ``a0eq1``, ``squares``,
    ``general-grid``; by default the smallest applicable one is used.
    """
    exps, perm = _canonical(m)
    sizes = dict(candidate_sizes(exps))
    if method is None:
        method = real_rank_upper(exps)[1]
    elif method not in sizes:
        raise ValueError(f"method {method!r} does not apply to {m}; applicable: {', '.join(sizes)}")

    if method == "squares":
        terms = squares_decomposition(len(exps) - 1).terms
        diag = None
    else:
        axes = _a0eq1_axes(exps) if method == "a0eq1" else _gapped_axes(exps)
        terms, dropped = grid_terms(exps, axes)
        diag = SolveDiagnostic(rank=len(terms), nullity=0, dropped=dropped)

    terms = [(c, LinearForm(_to_original(form.coeffs, perm))) for c, form in terms]
    dec = Decomposition(m, terms, method=method, diagnostic=diag)
    if not verify_decomposition(dec):
        raise RuntimeError(f"{method} decomposition of {m} failed to verify")
    return dec
