"""Sparse multivariate polynomials with exact rational coefficients.

A single :class:`Polynomial` type serves both the coordinate ring in
``x0..xN`` and the dual ring in ``X0..XN``; the dual ring acts on the
coordinate ring by plain iterated partial differentiation (see
:func:`apply_diff`).
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence

Exps = tuple[int, ...]


def to_fraction(value) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to :class:`Fraction`.

    Floats are refused so that no rounded value can leak into a computation.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not coefficients")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if not re.fullmatch(r"[+-]?\d+(/\d+)?", text):
            raise ValueError(f"not an exact rational: {value!r}")
        return Fraction(text)
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


def _grlex_key(exps: Exps):
    return (sum(exps), exps)


class Polynomial:
    """Immutable sparse polynomial ``{exponent tuple: Fraction}``."""

    __slots__ = ("_terms", "_nvars", "_hash")

    def __init__(self, terms: Mapping[Exps, object] | Iterable[tuple[Exps, object]], nvars: int):
        if nvars < 1:
            raise ValueError("a polynomial needs at least one variable")
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[Exps, Fraction] = {}
        for exps, coeff in items:
            exps = tuple(int(e) for e in exps)
            if len(exps) != nvars:
                raise ValueError(f"exponent vector {exps} does not have {nvars} entries")
            if any(e < 0 for e in exps):
                raise ValueError(f"negative exponent in {exps}")
            c = clean.get(exps, Fraction(0)) + to_fraction(coeff)
            if c:
                clean[exps] = c
            else:
                clean.pop(exps, None)
        self._terms = clean
        self._nvars = nvars
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[Exps, Fraction], nvars: int) -> "Polynomial":
        # terms already validated and free of zeros
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._nvars = nvars
        obj._hash = None
        return obj

    @classmethod
    def zero(cls, nvars: int) -> "Polynomial":
        return cls._raw({}, nvars)

    @classmethod
    def constant(cls, value, nvars: int) -> "Polynomial":
        return cls({(0,) * nvars: value}, nvars)

    @classmethod
    def monomial(cls, exps: Sequence[int], coeff=1) -> "Polynomial":
        return cls({tuple(exps): coeff}, len(exps))

    @classmethod
    def variable(cls, i: int, nvars: int) -> "Polynomial":
        exps = [0] * nvars
        exps[i] = 1
        return cls.monomial(exps)

    @property
    def nvars(self) -> int:
        return self._nvars

    @property
    def terms(self) -> Mapping[Exps, Fraction]:
        return MappingProxyType(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self) -> int:
        if not self._terms:
            raise ValueError("the zero polynomial has no degree")
        return max(sum(e) for e in self._terms)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self._terms}) <= 1

    def coefficient(self, exps: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(exps), Fraction(0))

    def sorted_terms(self) -> list[tuple[Exps, Fraction]]:
        """Terms in graded lexicographic order, largest first."""
        return sorted(self._terms.items(), key=lambda t: _grlex_key(t[0]), reverse=True)

    def _check(self, other: "Polynomial") -> None:
        if self._nvars != other._nvars:
            raise ValueError(f"variable count mismatch: {self._nvars} vs {other._nvars}")

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        return Polynomial.constant(other, self._nvars)

    def __add__(self, other) -> "Polynomial":
        other = self._coerce(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Polynomial._raw(out, self._nvars)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw({e: -c for e, c in self._terms.items()}, self._nvars)

    def __sub__(self, other) -> "Polynomial":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Polynomial":
        return self._coerce(other) - self

    def __mul__(self, other) -> "Polynomial":
        if not isinstance(other, Polynomial):
            k = to_fraction(other)
            if not k:
                return Polynomial.zero(self._nvars)
            return Polynomial._raw({e: c * k for e, c in self._terms.items()}, self._nvars)
        self._check(other)
        out: dict[Exps, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return Polynomial._raw({e: c for e, c in out.items() if c}, self._nvars)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Polynomial":
        if k < 0:
            raise ValueError("negative power")
        result = Polynomial.constant(1, self._nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self._nvars == other._nvars and self._terms == other._terms
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self == Polynomial.constant(other, self._nvars)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._nvars, frozenset(self._terms.items())))
        return self._hash

    def to_text(self, var: str = "x", offset: int = 0) -> str:
        return format_polynomial(self, var=var, offset=offset)

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"Polynomial({self.to_text()!r}, nvars={self._nvars})"


def poly_add(f: Polynomial, g: Polynomial) -> Polynomial:
    f._check(g)
    return f + g


def poly_mul(f: Polynomial, g: Polynomial) -> Polynomial:
    f._check(g)
    return f * g


def poly_neg(f: Polynomial) -> Polynomial:
    return -f


# ---------------------------------------------------------------------------
# text grammar


_TOKEN = re.compile(r"\s*(?:(\d+)|([xX])(\d+)|(\^)|(\*)|(/)|([+-]))")


def parse_polynomial(text: str, nvars: int | None = None, offset: int = 0) -> Polynomial:
    """Parse the text grammar, e.g. ``"12*x0^2*x1^2 - 1/2*x0*x1 + 3"``.

    Variables are ``x<k>`` or ``X<k>`` (dual ring); variable ``x<offset>``
    maps to index 0. ``nvars`` defaults to one past the largest index seen.
    """
    tokens = _tokenize(text)
    pos = 0
    raw_terms: list[tuple[dict[int, int], Fraction]] = []
    letters = set()

    def peek():
        return tokens[pos] if pos < len(tokens) else (None, None)

    def take(kind):
        nonlocal pos
        tok = peek()
        if tok[0] != kind:
            raise ValueError(f"expected {kind} at token {pos} in {text!r}")
        pos += 1
        return tok[1]

    first = True
    while True:
        sign = 1
        kind, val = peek()
        if kind == "sign":
            pos += 1
            sign = -1 if val == "-" else 1
        elif not first:
            raise ValueError(f"expected '+' or '-' between terms in {text!r}")
        first = False
        coeff = Fraction(sign)
        powers: dict[int, int] = {}
        while True:
            kind, val = peek()
            if kind == "int":
                pos += 1
                num = Fraction(int(val))
                if peek()[0] == "slash":
                    pos += 1
                    den = int(take("int"))
                    if den == 0:
                        raise ValueError(f"zero denominator in {text!r}")
                    num /= den
                coeff *= num
            elif kind == "var":
                pos += 1
                letter, idx = val
                letters.add(letter)
                idx -= offset
                if idx < 0:
                    raise ValueError(f"variable index below {offset} in {text!r}")
                exp = 1
                if peek()[0] == "caret":
                    pos += 1
                    exp = int(take("int"))
                powers[idx] = powers.get(idx, 0) + exp
            else:
                raise ValueError(f"expected a number or variable in {text!r}")
            if peek()[0] == "star":
                pos += 1
                continue
            break
        raw_terms.append((powers, coeff))
        if pos >= len(tokens):
            break

    if len(letters) > 1:
        raise ValueError(f"mixed x/X variables in {text!r}")
    seen = max((i for p, _ in raw_terms for i in p), default=-1) + 1
    if nvars is None:
        nvars = max(seen, 1)
    elif seen > nvars:
        raise ValueError(f"{text!r} uses more than {nvars} variables")
    terms = []
    for powers, coeff in raw_terms:
        exps = [0] * nvars
        for i, e in powers.items():
            exps[i] = e
        terms.append((tuple(exps), coeff))
    return Polynomial(terms, nvars)


def _tokenize(text: str):
    tokens = []
    pos = 0
    text = text.rstrip()
    if not text.strip():
        raise ValueError("empty polynomial text")
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ValueError(f"unexpected character {text[pos:pos + 1]!r} in {text!r}")
        pos = m.end()
        num, letter, idx, caret, star, slash, sign = m.groups()
        if num is not None:
            tokens.append(("int", num))
        elif letter is not None:
            tokens.append(("var", (letter, int(idx))))
        elif caret:
            tokens.append(("caret", caret))
        elif star:
            tokens.append(("star", star))
        elif slash:
            tokens.append(("slash", slash))
        else:
            tokens.append(("sign", sign))
    return tokens


def format_polynomial(f: Polynomial, var: str = "x", offset: int = 0) -> str:
    if f.is_zero():
        return "0"
    parts = []
    for exps, c in f.sorted_terms():
        factors = []
        for i, e in enumerate(exps):
            if e == 1:
                factors.append(f"{var}{i + offset}")
            elif e > 1:
                factors.append(f"{var}{i + offset}^{e}")
        mag = abs(c)
        if not factors:
            body = str(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = "*".join([str(mag)] + factors)
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts)


# ---------------------------------------------------------------------------
# linear forms and power sums


@dataclass(frozen=True)
class LinearForm:
    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Sequence):
        values = tuple(to_fraction(c) for c in coeffs)
        if not values:
            raise ValueError("a linear form needs at least one coefficient")
        if not any(values):
            raise ValueError("a linear form cannot be identically zero")
        object.__setattr__(self, "coeffs", values)

    @property
    def nvars(self) -> int:
        return len(self.coeffs)

    def to_polynomial(self) -> Polynomial:
        n = self.nvars
        return Polynomial({tuple(int(j == i) for j in range(n)): c for i, c in enumerate(self.coeffs)}, n)

    def power(self, d: int) -> Polynomial:
        return linear_form_power(self, d)

    def __str__(self) -> str:
        return self.to_polynomial().to_text()


@lru_cache(maxsize=None)
def compositions(total: int, parts: int) -> tuple[Exps, ...]:
    """All tuples of ``parts`` non-negative ints summing to ``total``."""
    if parts == 1:
        return ((total,),)
    out = []
    for first in range(total, -1, -1):
        for rest in compositions(total - first, parts - 1):
            out.append((first,) + rest)
    return tuple(out)


@lru_cache(maxsize=64)
def _factorials(d: int) -> tuple[int, ...]:
    return tuple(math.factorial(k) for k in range(d + 1))


def _integer_form(form: LinearForm) -> tuple[int, list[int]]:
    """Return ``(D, u)`` with ``form = (u . x) / D`` and ``u`` integral."""
    den = math.lcm(*(c.denominator for c in form.coeffs))
    return den, [int(c * den) for c in form.coeffs]


def _accumulate_power(acc: dict[Exps, int], scale: int, u: Sequence[int], d: int) -> None:
    """``acc += scale * (u . x)^d`` over the integers."""
    support = [i for i, c in enumerate(u) if c]
    n = len(u)
    fact = _factorials(d)
    pw = [[u[i] ** k for k in range(d + 1)] for i in support]
    for comp in compositions(d, len(support)):
        coef = fact[d]
        prod = scale
        for j, k in enumerate(comp):
            coef //= fact[k]
            prod *= pw[j][k]
        exps = [0] * n
        for j, k in enumerate(comp):
            exps[support[j]] = k
        key = tuple(exps)
        acc[key] = acc.get(key, 0) + coef * prod


def linear_form_power(form: LinearForm, d: int) -> Polynomial:
    """Full multinomial expansion of ``form ** d``."""
    if d < 0:
        raise ValueError("power must be non-negative")
    return power_sum([(Fraction(1), form)], d, form.nvars)


def power_sum(terms: Sequence[tuple[object, LinearForm]], d: int, nvars: int | None = None) -> Polynomial:
    """Expand ``sum c * L**d`` exactly.

    Every form is written as an integer form over a denominator, all the
    scalars are brought over one common denominator, and the sum is
    accumulated in Python integers.
    """
    if d < 0:
        raise ValueError("power must be non-negative")
    if nvars is None:
        if not terms:
            raise ValueError("nvars is required for an empty sum")
        nvars = terms[0][1].nvars
    scaled = []
    for c, form in terms:
        if form.nvars != nvars:
            raise ValueError(f"linear form has {form.nvars} coefficients, expected {nvars}")
        den, u = _integer_form(form)
        scaled.append((to_fraction(c) / den ** d, u))
    common = math.lcm(*(s.denominator for s, _ in scaled)) if scaled else 1
    acc: dict[Exps, int] = {}
    for s, u in scaled:
        _accumulate_power(acc, int(s * common), u, d)
    return Polynomial._raw({e: Fraction(v, common) for e, v in acc.items() if v}, nvars)


# ---------------------------------------------------------------------------
# dual-ring action


def apply_diff(op: Polynomial, f: Polynomial) -> Polynomial:
    """Apply the constant-coefficient differential operator ``op`` to ``f``.

    The dual monomial ``X^b`` acts as the iterated partial derivative
    ``d^|b| / dx^b``; no factorial rescaling is applied.
    """
    op._check(f)
    out: dict[Exps, Fraction] = {}
    for b, cb in op.terms.items():
        for a, ca in f.terms.items():
            if any(bi > ai for ai, bi in zip(a, b)):
                continue
            falling = 1
            for ai, bi in zip(a, b):
                for k in range(bi):
                    falling *= ai - k
            e = tuple(ai - bi for ai, bi in zip(a, b))
            out[e] = out.get(e, 0) + cb * ca * falling
    return Polynomial._raw({e: c for e, c in out.items() if c}, f.nvars)
