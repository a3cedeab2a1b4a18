"""Exact multivariate polynomial arithmetic over the rationals.

Monomials are compared in the lexicographic order induced by the variable
index (variable 0 largest), which for the three-variable ring (x, y, z)
is the order x > y > z. Polynomials are kept in a canonical form: a tuple
of nonzero terms, strictly decreasing in the monomial order, so structural
equality coincides with mathematical equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Rational = Fraction


class ZeroPolynomialError(ValueError):
    """Raised by operations that are undefined on the zero polynomial."""


@dataclass(frozen=True, order=True, slots=True)
class Monomial:
    """Exponent vector of a power product; ordering is lexicographic."""

    exponents: tuple[int, ...]

    def __post_init__(self):
        if not isinstance(self.exponents, tuple):
            object.__setattr__(self, "exponents", tuple(self.exponents))
        if any(e < 0 for e in self.exponents):
            raise ValueError(f"negative exponent in {self.exponents}")

    @property
    def arity(self) -> int:
        return len(self.exponents)

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    def is_unit(self) -> bool:
        return all(e == 0 for e in self.exponents)


def unit_monomial(arity: int) -> Monomial:
    return Monomial((0,) * arity)


def _check_arity(a: Monomial, b: Monomial) -> None:
    if a.arity != b.arity:
        raise ValueError(f"arity mismatch: {a.arity} vs {b.arity}")


def cmp_lex(a: Monomial, b: Monomial) -> int:
    """Compare two monomials lexicographically: -1, 0 or 1."""
    _check_arity(a, b)
    if a.exponents == b.exponents:
        return 0
    return -1 if a.exponents < b.exponents else 1


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    _check_arity(a, b)
    return Monomial(tuple(i + j for i, j in zip(a.exponents, b.exponents)))


def mono_divide(a: Monomial, b: Monomial) -> Monomial | None:
    """Return a/b, or None when some exponent of b exceeds the one in a."""
    _check_arity(a, b)
    diff = tuple(i - j for i, j in zip(a.exponents, b.exponents))
    if any(e < 0 for e in diff):
        return None
    return Monomial(diff)


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    _check_arity(a, b)
    return Monomial(tuple(max(i, j) for i, j in zip(a.exponents, b.exponents)))


@dataclass(frozen=True, slots=True)
class Term:
    """A nonzero coefficient attached to a monomial."""

    coefficient: Fraction
    monomial: Monomial

    def __post_init__(self):
        if not isinstance(self.coefficient, Fraction):
            object.__setattr__(self, "coefficient", Fraction(self.coefficient))
        if self.coefficient == 0:
            raise ValueError("zero coefficient in term")


@dataclass(frozen=True)
class Polynomial:
    """Canonical term sequence, strictly decreasing in the monomial order.

    The zero polynomial is the empty sequence. Two polynomials compare
    equal iff their term sequences are identical.
    """

    terms: tuple[Term, ...]
    arity: int

    def __post_init__(self):
        if not isinstance(self.terms, tuple):
            object.__setattr__(self, "terms", tuple(self.terms))
        for t in self.terms:
            if t.monomial.arity != self.arity:
                raise ValueError("term arity differs from polynomial arity")
        for a, b in zip(self.terms, self.terms[1:]):
            if a.monomial.exponents <= b.monomial.exponents:
                raise ValueError("terms not strictly decreasing")

    @classmethod
    def zero(cls, arity: int) -> Polynomial:
        return cls((), arity)

    @classmethod
    def constant(cls, value, arity: int) -> Polynomial:
        c = Fraction(value)
        if c == 0:
            return cls.zero(arity)
        return cls((Term(c, unit_monomial(arity)),), arity)

    @classmethod
    def variable(cls, index: int, arity: int) -> Polynomial:
        exps = [0] * arity
        exps[index] = 1
        return cls((Term(Fraction(1), Monomial(tuple(exps))),), arity)

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[Monomial, Fraction]], arity: int) -> Polynomial:
        """Build the canonical polynomial from (monomial, coefficient) pairs."""
        acc: dict[Monomial, Fraction] = {}
        for mono, coeff in pairs:
            c = coeff if isinstance(coeff, Fraction) else Fraction(coeff)
            acc[mono] = acc.get(mono, Fraction(0)) + c
        terms = tuple(
            Term(c, m) for m, c in sorted(acc.items(), key=lambda kv: kv[0], reverse=True) if c != 0
        )
        return cls(terms, arity)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def leading_term(self) -> Term:
        if not self.terms:
            raise ZeroPolynomialError("zero polynomial has no leading term")
        return self.terms[0]

    def leading_monomial(self) -> Monomial:
        return self.leading_term().monomial

    def leading_coefficient(self) -> Fraction:
        return self.leading_term().coefficient

    def coefficient(self, mono: Monomial) -> Fraction:
        for t in self.terms:
            if t.monomial == mono:
                return t.coefficient
        return Fraction(0)

    def monomials(self) -> tuple[Monomial, ...]:
        return tuple(t.monomial for t in self.terms)

    def __neg__(self) -> Polynomial:
        return Polynomial(tuple(Term(-t.coefficient, t.monomial) for t in self.terms), self.arity)

    def __add__(self, other: Polynomial) -> Polynomial:
        if not isinstance(other, Polynomial):
            return NotImplemented
        if self.arity != other.arity:
            raise ValueError("arity mismatch")
        pairs = [(t.monomial, t.coefficient) for t in self.terms]
        pairs += [(t.monomial, t.coefficient) for t in other.terms]
        return Polynomial.from_pairs(pairs, self.arity)

    def __sub__(self, other: Polynomial) -> Polynomial:
        return self + (-other)

    def __mul__(self, other) -> Polynomial:
        if isinstance(other, Polynomial):
            if self.arity != other.arity:
                raise ValueError("arity mismatch")
            pairs = [
                (mono_mul(s.monomial, t.monomial), s.coefficient * t.coefficient)
                for s in self.terms
                for t in other.terms
            ]
            return Polynomial.from_pairs(pairs, self.arity)
        return self.scale(Fraction(other))

    def __rmul__(self, other) -> Polynomial:
        return self.scale(Fraction(other))

    def scale(self, c: Fraction) -> Polynomial:
        if c == 0:
            return Polynomial.zero(self.arity)
        return Polynomial(tuple(Term(t.coefficient * c, t.monomial) for t in self.terms), self.arity)

    def mul_term(self, coeff: Fraction, mono: Monomial) -> Polynomial:
        """Multiply by the single term coeff * mono."""
        if coeff == 0:
            return Polynomial.zero(self.arity)
        return Polynomial(
            tuple(Term(t.coefficient * coeff, mono_mul(t.monomial, mono)) for t in self.terms),
            self.arity,
        )

    def monic(self) -> Polynomial:
        """Scale so that the leading coefficient is 1."""
        lc = self.leading_coefficient()
        if lc == 1:
            return self
        return self.scale(1 / lc)

    def is_linear(self) -> bool:
        """True iff total degree is 1: every monomial has degree <= 1 and one has degree 1."""
        return bool(self.terms) and all(t.monomial.degree <= 1 for t in self.terms) and any(
            t.monomial.degree == 1 for t in self.terms
        )

    def evaluate(self, point: Sequence[float]) -> float:
        """Evaluate at a point of floats; coefficients round to nearest double."""
        if len(point) != self.arity:
            raise ValueError("point arity mismatch")
        total = 0.0
        for t in self.terms:
            v = float(t.coefficient)
            for x, e in zip(point, t.monomial.exponents):
                if e:
                    v *= x**e
            total += v
        return total
