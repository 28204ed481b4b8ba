"""Apolar point sets and exact Waring decompositions of monomials."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .linalg import InconsistentSystem, solve
from .monomial import Monomial
from .poly import LinearForm, Polynomial, apply_diff, compositions, parse_polynomial, power_sum, to_fraction

log = logging.getLogger(__name__)


class NoSolution(ArithmeticError):
    """The point set does not support a decomposition of the target."""


@dataclass(frozen=True)
class ProjectivePoint:
    coords: tuple[Fraction, ...]

    def __init__(self, coords: Sequence):
        values = [to_fraction(c) for c in coords]
        lead = next((c for c in values if c), None)
        if lead is None:
            raise ValueError("the zero vector is not a projective point")
        object.__setattr__(self, "coords", tuple(c / lead for c in values))

    def form(self) -> LinearForm:
        return LinearForm(self.coords)

    def __len__(self) -> int:
        return len(self.coords)

    def __str__(self) -> str:
        return "[" + ":".join(str(c) for c in self.coords) + "]"


class PointSet(tuple):
    """Ordered tuple of pairwise distinct projective points."""

    def __new__(cls, points: Iterable):
        pts = tuple(p if isinstance(p, ProjectivePoint) else ProjectivePoint(p) for p in points)
        if len(set(pts)) != len(pts):
            raise ValueError("point set contains repeated points")
        if len({len(p) for p in pts}) > 1:
            raise ValueError("points have different numbers of coordinates")
        return super().__new__(cls, pts)


def perp_membership(m: Monomial, op: Polynomial) -> bool:
    """True iff the differential operator ``op`` annihilates ``m``."""
    return apply_diff(op, m.to_polynomial()).is_zero()


@dataclass
class SolveDiagnostic:
    rank: int
    nullity: int
    dropped: tuple[int, ...] = ()


@dataclass
class Decomposition:
    """``target = sum(c * L**deg(target))``."""

    target: Monomial
    terms: list[tuple[Fraction, LinearForm]]
    method: str | None = None
    diagnostic: SolveDiagnostic | None = field(default=None, compare=False)

    def __post_init__(self):
        for c, form in self.terms:
            if not c:
                raise ValueError("decomposition terms must have nonzero coefficients")
            if form.nvars != self.target.nvars:
                raise ValueError("linear form and target have different variable counts")

    @property
    def degree(self) -> int:
        return self.target.degree

    @property
    def size(self) -> int:
        return len(self.terms)

    def expand(self) -> Polynomial:
        return power_sum(self.terms, self.degree, self.target.nvars)

    def to_json(self) -> dict:
        out = {
            "target": str(self.target),
            "degree": self.degree,
            "terms": [{"coeff": str(c), "form": [str(v) for v in form.coeffs]} for c, form in self.terms],
        }
        if self.method is not None:
            out["method"] = self.method
            out["size"] = self.size
        return out

    @classmethod
    def from_json(cls, data: dict) -> "Decomposition":
        """Read the JSON certificate format.

        A scaled target such as ``"12*x0^2*x1^2"`` is accepted; the scale is
        divided out of the coefficients.
        """
        target = parse_polynomial(data["target"])
        if len(target.terms) != 1:
            raise ValueError(f"target {data['target']!r} is not a monomial")
        (exps, scale), = target.terms.items()
        mono = Monomial(exps)
        if "degree" in data and int(data["degree"]) != mono.degree:
            raise ValueError(f"declared degree {data['degree']} but target has degree {mono.degree}")
        terms = [(to_fraction(t["coeff"]) / scale, LinearForm(t["form"])) for t in data["terms"]]
        return cls(mono, terms, method=data.get("method"))


def verify_decomposition(dec: Decomposition) -> bool:
    return dec.expand() == dec.target.to_polynomial()


def solve_decomposition(m: Monomial, points: Iterable) -> Decomposition:
    """Find coefficients ``c_P`` with ``sum c_P L_P**d == m`` exactly.

    One unknown per point, one equation per degree-d exponent vector.
    When the solution is not unique, free unknowns are set to zero in point
    order. Points whose coefficient comes out zero are dropped.
    """
    points = points if isinstance(points, PointSet) else PointSet(points)
    if any(len(p) != m.nvars for p in points):
        raise ValueError(f"points must have {m.nvars} coordinates")
    d = m.degree
    columns = [power_sum([(1, p.form())], d, m.nvars) for p in points]
    rows = compositions(d, m.nvars)
    a = [[col.coefficient(beta) for col in columns] for beta in rows]
    b = [int(beta == m.exps) for beta in rows]
    try:
        sol = solve(a, b)
    except InconsistentSystem as exc:
        raise NoSolution(f"{len(points)} points do not support a decomposition of {m}") from exc
    terms = []
    dropped = []
    for i, (c, p) in enumerate(zip(sol.values, points)):
        if c:
            terms.append((c, p.form()))
        else:
            dropped.append(i)
    diag = SolveDiagnostic(rank=sol.rank, nullity=sol.nullity, dropped=tuple(dropped))
    if dropped:
        log.info("solve_decomposition(%s): dropped %d zero-coefficient points, nullity %d", m, len(dropped), sol.nullity)
    return Decomposition(m, terms, diagnostic=diag)
