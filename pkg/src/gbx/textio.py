"""Text syntax for polynomials over (x, y, z) and the generator file format.

Grammar (whitespace is insignificant outside digit runs)::

    polynomial  = [sign] term { sign term }
    term        = coefficient ["*"] { factor ["*"] } | factor { ["*"] factor }
    coefficient = integer [ "/" positive-integer ]
    factor      = variable [ "^" positive-integer ]
    variable    = "x" | "y" | "z"

A fraction coefficient directly followed by a variable binds as a scalar:
``3/2y`` means (3/2)*y. Adjacent factors multiply implicitly (``yz``).
Decimal literals are rejected; only exact integer or fraction coefficients
are accepted.

Generator files are UTF-8 text with one polynomial per line; ``#`` starts
a comment running to end of line, blank lines are skipped.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .poly import Monomial, Polynomial, Term

VARIABLES = ("x", "y", "z")
ARITY = len(VARIABLES)
_VAR_INDEX = {name: i for i, name in enumerate(VARIABLES)}


class ParseError(ValueError):
    """Syntax error, carrying the byte offset (and line for generator files)."""

    def __init__(self, message: str, offset: int, line: int | None = None):
        self.message = message
        self.offset = offset
        self.line = line
        where = f"line {line}, offset {offset}" if line is not None else f"offset {offset}"
        super().__init__(f"{where}: {message}")


class EmptyInputError(ValueError):
    """Generator file contained no polynomials."""


class ZeroGeneratorError(ValueError):
    """A generator line cancelled to the zero polynomial."""


@dataclass(frozen=True)
class GeneratorSet:
    """Ordered, nonempty tuple of nonzero generators with display labels."""

    generators: tuple[Polynomial, ...]
    labels: tuple[str, ...]

    def __post_init__(self):
        if not self.generators:
            raise EmptyInputError("generator set is empty")
        if any(g.is_zero() for g in self.generators):
            raise ZeroGeneratorError("zero polynomial in generator set")
        if len(self.labels) != len(self.generators):
            raise ValueError("one label per generator required")

    @classmethod
    def of(cls, generators, labels=None) -> GeneratorSet:
        gens = tuple(generators)
        if labels is None:
            labels = tuple(f"f{i + 1}" for i in range(len(gens)))
        return cls(gens, tuple(labels))

    def __len__(self) -> int:
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str) -> ParseError:
        byte_offset = len(self.text[: self.pos].encode("utf-8"))
        return ParseError(message, byte_offset)

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def advance(self) -> str:
        ch = self.text[self.pos]
        self.pos += 1
        return ch

    def at_end(self) -> bool:
        return self.pos >= len(self.text)

    def read_integer(self) -> int:
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise self.error("expected an integer")
        return int(self.text[start : self.pos])


def _parse_coefficient(s: _Scanner) -> Fraction:
    num = s.read_integer()
    s.skip_ws()
    if s.peek() == "/":
        s.advance()
        s.skip_ws()
        if not s.peek().isdigit():
            raise s.error("expected a positive integer denominator")
        den = s.read_integer()
        if den == 0:
            raise s.error("zero denominator")
        return Fraction(num, den)
    return Fraction(num)


def _parse_factor(s: _Scanner, exponents: list[int]) -> None:
    name = s.advance()
    index = _VAR_INDEX[name]
    s.skip_ws()
    exp = 1
    if s.peek() == "^":
        s.advance()
        s.skip_ws()
        if not s.peek().isdigit():
            raise s.error("expected a positive integer exponent")
        exp = s.read_integer()
        if exp == 0:
            raise s.error("exponent must be positive")
    exponents[index] += exp


def _parse_term(s: _Scanner) -> tuple[Monomial, Fraction]:
    s.skip_ws()
    coeff = None
    if s.peek().isdigit():
        coeff = _parse_coefficient(s)
    exponents = [0] * ARITY
    saw_factor = False
    while True:
        s.skip_ws()
        ch = s.peek()
        if ch == "*":
            s.advance()
            s.skip_ws()
            ch = s.peek()
            if ch not in _VAR_INDEX:
                raise s.error("expected a variable after '*'")
        if ch in _VAR_INDEX:
            _parse_factor(s, exponents)
            saw_factor = True
            continue
        break
    if coeff is None and not saw_factor:
        ch = s.peek()
        if ch == ".":
            raise s.error("decimal literals are not supported; use an exact fraction like 3/2")
        if ch.isalpha():
            raise s.error(f"unknown variable {ch!r} (variables are x, y, z)")
        raise s.error("expected a term" if ch else "unexpected end of input")
    return Monomial(tuple(exponents)), coeff if coeff is not None else Fraction(1)


def parse_polynomial(text: str) -> Polynomial:
    """Parse one polynomial over (x, y, z) into canonical form."""
    s = _Scanner(text)
    pairs: list[tuple[Monomial, Fraction]] = []
    s.skip_ws()
    if s.at_end():
        raise s.error("empty polynomial")
    first = True
    while True:
        s.skip_ws()
        sign = Fraction(1)
        ch = s.peek()
        if ch == "+" or ch == "-":
            sign = Fraction(-1) if ch == "-" else Fraction(1)
            s.advance()
        elif not first:
            if ch == ".":
                raise s.error("decimal literals are not supported; use an exact fraction like 3/2")
            if ch.isalpha() and ch not in _VAR_INDEX:
                raise s.error(f"unknown variable {ch!r} (variables are x, y, z)")
            raise s.error(f"expected '+' or '-', found {ch!r}")
        mono, coeff = _parse_term(s)
        pairs.append((mono, sign * coeff))
        first = False
        s.skip_ws()
        if s.at_end():
            break
    return Polynomial.from_pairs(pairs, ARITY)


def parse_generators(text: str) -> GeneratorSet:
    """Parse a generator file: one polynomial per line, # comments, blank lines."""
    generators: list[Polynomial] = []
    labels: list[str] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        try:
            poly = parse_polynomial(line)
        except ParseError as exc:
            raise ParseError(exc.message, exc.offset, line=lineno) from None
        if poly.is_zero():
            raise ZeroGeneratorError(f"line {lineno}: generator cancels to zero")
        generators.append(poly)
        labels.append(f"f{len(generators)}")
    if not generators:
        raise EmptyInputError("no generators found in input")
    return GeneratorSet.of(generators, labels)


def _variable_names(arity: int) -> tuple[str, ...]:
    if arity <= ARITY:
        return VARIABLES[:arity]
    return tuple(f"x{i + 1}" for i in range(arity))


def format_monomial(mono: Monomial, sep: str = "") -> str:
    """Power-product part only; the unit monomial prints as '1'."""
    names = _variable_names(mono.arity)
    parts = [
        name if e == 1 else f"{name}^{e}"
        for name, e in zip(names, mono.exponents)
        if e > 0
    ]
    return sep.join(parts) if parts else "1"


def _format_term(term: Term) -> str:
    mag = abs(term.coefficient)
    mono = term.monomial
    if mono.is_unit():
        return str(mag)
    if mag == 1:
        return format_monomial(mono)
    if mag.denominator == 1:
        return f"{mag.numerator}{format_monomial(mono)}"
    # fraction coefficients take explicit '*' so a/b*y cannot read as a/(b*y)
    return f"{mag}*{format_monomial(mono, sep='*')}"


def print_polynomial(poly: Polynomial) -> str:
    """Canonical text form; re-parses to an equal polynomial."""
    if poly.is_zero():
        return "0"
    out = []
    for i, term in enumerate(poly.terms):
        if term.coefficient < 0:
            out.append("-")
        elif i > 0:
            out.append("+")
        out.append(_format_term(term))
    return "".join(out)
