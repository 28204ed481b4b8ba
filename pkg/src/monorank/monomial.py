from __future__ import annotations

from typing import Sequence

from .poly import Polynomial, parse_polynomial


class Monomial:
    """``x0^a0 * ... * xn^an`` with every exponent positive.

    The exponents are kept in the order the user gave them. Rank formulas
    work on the sorted vector (see :meth:`canonical`); ``permutation[k]``
    is the original index of the k-th smallest exponent.
    """

    __slots__ = ("exps",)

    def __init__(self, exps: Sequence[int]):
        exps = tuple(int(e) for e in exps)
        if len(exps) < 2:
            raise ValueError("a monomial needs at least two variables")
        if any(e < 1 for e in exps):
            raise ValueError(f"all exponents must be positive, got {exps}")
        self.exps = exps

    @classmethod
    def parse(cls, text: str) -> "Monomial":
        p = parse_polynomial(text)
        if len(p.terms) != 1:
            raise ValueError(f"{text!r} is not a monomial")
        (exps, coeff), = p.terms.items()
        if coeff != 1:
            raise ValueError(f"{text!r} has coefficient {coeff}; monomials are monic")
        missing = [i for i, e in enumerate(exps) if e == 0]
        if missing:
            raise ValueError(f"{text!r} does not involve x{missing[0]}; drop unused variables")
        return cls(exps)

    @property
    def nvars(self) -> int:
        return len(self.exps)

    @property
    def degree(self) -> int:
        return sum(self.exps)

    @property
    def permutation(self) -> tuple[int, ...]:
        return tuple(sorted(range(len(self.exps)), key=lambda i: self.exps[i]))

    def canonical(self) -> tuple[int, ...]:
        return tuple(sorted(self.exps))

    def is_canonical(self) -> bool:
        return self.exps == self.canonical()

    def to_polynomial(self) -> Polynomial:
        return Polynomial.monomial(self.exps)

    def __eq__(self, other) -> bool:
        return isinstance(other, Monomial) and self.exps == other.exps

    def __hash__(self) -> int:
        return hash(self.exps)

    def __str__(self) -> str:
        return self.to_polynomial().to_text()

    def __repr__(self) -> str:
        return f"Monomial({self.exps})"
