"""Normal forms in the K-ring of the solenoidal projective line.

The ring is generated by classes x^q for rational q, subject to
(x^q - 1)(x^p - 1) = 0 for all rational p, q.  Every element then has a
unique normal form a*1 + r*u with integer a and rational r, where u is the
common class of x^q - 1 scaled so that x^q maps to (1, q).

The closed form (sum of coefficients, exponent-weighted sum) is cheap but
derived, so the module also ships an independent brute-force reduction:
rewrite x^(p+q) -> x^p + x^q - 1 with arbitrary splittings, in arbitrary
order, on a shared term table, until only the exponents {0, g} of the
common grid survive.  The two must agree; tests and the acceptance suite
gate the closed form on that agreement.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import DomainError, ExpressionError


def _as_fraction(x) -> Fraction:
    if isinstance(x, float):
        raise DomainError("floating point exponent rejected; pass Fraction or int")
    return Fraction(x)


@dataclass(frozen=True)
class FormalSum:
    """Finite integer combination of monomials x^q, q rational."""

    terms: tuple[tuple[Fraction, int], ...]

    def __post_init__(self):
        merged: dict[Fraction, int] = {}
        for q, c in self.terms:
            q = _as_fraction(q)
            if isinstance(c, bool) or not isinstance(c, int):
                raise DomainError("coefficients must be integers")
            merged[q] = merged.get(q, 0) + c
        cleaned = tuple(sorted((q, c) for q, c in merged.items() if c != 0))
        object.__setattr__(self, "terms", cleaned)

    @classmethod
    def from_terms(cls, pairs) -> "FormalSum":
        return cls(tuple((q, c) for q, c in pairs))

    @classmethod
    def monomial(cls, q, c: int = 1) -> "FormalSum":
        return cls(((_as_fraction(q), c),))

    @classmethod
    def zero(cls) -> "FormalSum":
        return cls(())

    def __add__(self, other: "FormalSum") -> "FormalSum":
        return FormalSum(self.terms + other.terms)

    def __mul__(self, other: "FormalSum") -> "FormalSum":
        return FormalSum(
            tuple((q1 + q2, c1 * c2) for q1, c1 in self.terms for q2, c2 in other.terms)
        )

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for q, c in self.terms:
            parts.append(f"{c:+d}*x^({q})" if q else f"{c:+d}")
        return " ".join(parts)


@dataclass(frozen=True)
class KRingElement:
    """Normal form a*1 + r*u; multiplication kills the square of u."""

    rank_part: int
    class_part: Fraction

    def __post_init__(self):
        if isinstance(self.rank_part, bool) or not isinstance(self.rank_part, int):
            raise DomainError("rank part must be an integer")
        object.__setattr__(self, "class_part", _as_fraction(self.class_part))

    def __add__(self, other: "KRingElement") -> "KRingElement":
        return KRingElement(self.rank_part + other.rank_part,
                            self.class_part + other.class_part)

    def __mul__(self, other: "KRingElement") -> "KRingElement":
        return KRingElement(
            self.rank_part * other.rank_part,
            self.rank_part * other.class_part + other.rank_part * self.class_part,
        )

    def __str__(self) -> str:
        return f"rank_part={self.rank_part} class_part={self.class_part}"


def reduce(s: FormalSum) -> KRingElement:
    """Closed-form normal form: (sum of coefficients, weighted exponent sum)."""
    a = sum(c for _, c in s.terms)
    r = sum((Fraction(c) * q for q, c in s.terms), Fraction(0))
    return KRingElement(a, r)


def multiply(u: KRingElement, v: KRingElement) -> KRingElement:
    return u * v


def add(u: KRingElement, v: KRingElement) -> KRingElement:
    return u + v


def in_level_image(e: KRingElement, n: int) -> bool:
    """Is the element in the image of the level-n covering, i.e. is the class
    part a multiple of 1/n?"""
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise DomainError("level must be a positive integer")
    return (e.class_part * n).denominator == 1


def _common_grid(s: FormalSum) -> Fraction:
    denom = 1
    for q, _ in s.terms:
        denom = denom * q.denominator // gcd(denom, q.denominator)
    return Fraction(1, denom)


def oracle_reduce(s: FormalSum, seed: int | None = None) -> KRingElement:
    """Brute-force normal form by exhaustive monomial splitting.

    Exponents are put on the common grid g = 1/lcm(denominators) and every
    monomial outside {0, g} is split by x^(a+b) -> x^a + x^b - 1 (applied
    backwards for exponents below zero), with the split point chosen at
    random, until only 1 and x^g survive.  Coefficients merge in a shared
    table, so repeated subterms are processed once.  Any splitting order
    reaches the same pair, which is the point of using it as an oracle for
    the closed form in ``reduce``.
    """
    if not s.terms:
        return KRingElement(0, Fraction(0))
    rng = random.Random(seed)
    g = _common_grid(s)
    table: dict[int, int] = {}
    for q, c in s.terms:
        k = q / g
        assert k.denominator == 1
        table[k.numerator] = table.get(k.numerator, 0) + c

    def bump(k: int, c: int):
        new = table.get(k, 0) + c
        if new:
            table[k] = new
        else:
            table.pop(k, None)

    while True:
        pending = [k for k in table if k not in (0, 1)]
        if not pending:
            break
        k = rng.choice(pending)
        c = table.pop(k)
        if k >= 2:
            if k <= 32:
                j = rng.randint(1, k - 1)
            else:
                j = max(1, min(k - 1, k // 2 + rng.randint(-3, 3)))
            bump(j, c)
            bump(k - j, c)
            bump(0, -c)
        else:
            # k <= -1: x^k = x^(k+j) - x^j + 1, split point capped so both
            # new exponents shrink in magnitude
            bound = max(1, -k - 1)
            if bound <= 32:
                j = rng.randint(1, bound)
            else:
                j = max(1, min(bound, (-k) // 2 + rng.randint(-3, 3)))
            bump(k + j, c)
            bump(j, -c)
            bump(0, c)
    a0 = table.get(0, 0)
    a1 = table.get(1, 0)
    return KRingElement(a0 + a1, a1 * g)


_TERM_RE = re.compile(
    r"""^\s*
        (?:(?P<coeff>\d+)\s*\*?\s*)?          # optional integer coefficient
        (?:
            (?P<var>x)
            (?:\^(?:
                (?P<plain>-?\d+)
                |\(\s*(?P<num>-?\d+)\s*(?:/\s*(?P<den>\d+)\s*)?\)
            ))?
        )?
    \s*$""",
    re.VERBOSE,
)


def parse_expression(text: str) -> FormalSum:
    """Parse expressions such as ``3*x^(1/2) - x^(2/3) + 1``.

    Grammar: signed terms joined by + or -; a term is an optional integer
    coefficient (with optional ``*``), then optionally ``x`` with an
    optional exponent, written as an integer or as ``(p/q)``.
    """
    if not isinstance(text, str) or not text.strip():
        raise ExpressionError("empty expression")
    chunks: list[tuple[int, str]] = []
    depth = 0
    sign = 1
    current: list[str] = []
    started = False
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ExpressionError("unbalanced parentheses")
        if ch in "+-" and depth == 0:
            if started and "".join(current).strip():
                chunks.append((sign, "".join(current)))
                current = []
                sign = 1 if ch == "+" else -1
            elif not "".join(current).strip():
                sign *= 1 if ch == "+" else -1
            started = True
            continue
        current.append(ch)
        started = True
    if depth != 0:
        raise ExpressionError("unbalanced parentheses")
    if "".join(current).strip():
        chunks.append((sign, "".join(current)))
    if not chunks:
        raise ExpressionError("no terms found")
    terms: list[tuple[Fraction, int]] = []
    for sgn, chunk in chunks:
        m = _TERM_RE.match(chunk)
        if not m or (m.group("coeff") is None and m.group("var") is None):
            raise ExpressionError(f"cannot parse term {chunk.strip()!r}")
        coeff = int(m.group("coeff")) if m.group("coeff") else 1
        if m.group("var") is None:
            exponent = Fraction(0)
        elif m.group("plain") is not None:
            exponent = Fraction(int(m.group("plain")))
        elif m.group("num") is not None:
            den = int(m.group("den")) if m.group("den") else 1
            if den == 0:
                raise ExpressionError(f"zero denominator in term {chunk.strip()!r}")
            exponent = Fraction(int(m.group("num")), den)
        else:
            exponent = Fraction(1)
        terms.append((exponent, sgn * coeff))
    return FormalSum.from_terms(terms)
