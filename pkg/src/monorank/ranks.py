"""Closed-form Waring rank values and bounds for monomials."""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass

from .monomial import Monomial

METHODS = ("binary", "a0eq1", "squares", "general-grid")

# Real-rank lower bounds proved in the literature, keyed by sorted exponents.
# These are imported facts, not computed here.
KNOWN_REAL_LOWER = {
    (2, 2, 2): 11,  # Michałek, Moon, Sturmfels, Ventura: rk_R(x0^2 x1^2 x2^2) > 10
}


def _exps(m: Monomial | tuple) -> tuple[int, ...]:
    exps = m.canonical() if isinstance(m, Monomial) else tuple(sorted(m))
    if len(exps) < 2 or exps[0] < 1:
        raise ValueError(f"need at least two positive exponents, got {exps}")
    return exps


def complex_rank(m: Monomial | tuple) -> int:
    a = _exps(m)
    prod = math.prod(e + 1 for e in a)
    q, r = divmod(prod, a[0] + 1)
    assert not r
    return q


def candidate_sizes(m: Monomial | tuple) -> list[tuple[str, int]]:
    """Sizes of the decompositions each applicable constructor produces.

    Listed in tie-break preference order.
    """
    a = _exps(m)
    a0, rest = a[0], a[1:]
    n = len(rest)
    out = []
    if n == 1:
        out.append(("binary", a0 + rest[0]))
    if a0 == 1:
        out.append(("a0eq1", math.prod(e + 1 for e in rest)))
    if all(e == 2 for e in a):
        out.append(("squares", (3 ** (n + 1) - 1) // 2))
    out.append(("general-grid", math.prod(a0 + e for e in rest)))
    return out


def real_rank_upper(m: Monomial | tuple) -> tuple[int, str]:
    best = None
    for method, size in candidate_sizes(m):
        if best is None or size < best[0]:
            best = (size, method)
    return best


def real_rank_exact(m: Monomial | tuple) -> int | None:
    a = _exps(m)
    if len(a) == 2:
        return a[0] + a[1]
    if a[0] == 1:
        return complex_rank(a)
    return None


def real_equals_complex(m: Monomial | tuple) -> bool:
    return _exps(m)[0] == 1


def real_rank_lower(m: Monomial | tuple) -> int:
    a = _exps(m)
    exact = real_rank_exact(a)
    if exact is not None:
        return exact
    # a0 >= 2: the real rank is strictly larger than the complex rank
    return max(complex_rank(a) + 1, KNOWN_REAL_LOWER.get(a, 0))


@dataclass(frozen=True)
class RankReport:
    monomial: str
    exponents: tuple[int, ...]
    complex_rank: int
    real_upper: int
    real_exact: int | None
    real_lower: int
    equality: bool
    method: str

    def to_json(self) -> dict:
        out = asdict(self)
        out["exponents"] = list(self.exponents)
        return out


def rank_report(m: Monomial) -> RankReport:
    upper, method = real_rank_upper(m)
    report = RankReport(
        monomial=str(m),
        exponents=m.exps,
        complex_rank=complex_rank(m),
        real_upper=upper,
        real_exact=real_rank_exact(m),
        real_lower=real_rank_lower(m),
        equality=real_equals_complex(m),
        method=method,
    )
    assert report.complex_rank <= report.real_lower <= report.real_upper, report
    return report
