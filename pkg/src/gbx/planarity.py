"""Consistency and planarity analysis of polynomial surface intersections.

Everything here works in the three-variable ring (x, y, z). A system is
consistent iff its reduced basis is not {1}. The intersection is certified
planar when a linear polynomial turns up in the ideal; detection follows
the stepwise computation (generators grown by the Buchberger phase, then
intermediate results of partial reduction, then the reduced basis) and is
sufficient but path-dependent, so the report also carries a complete,
path-independent oracle: a basis of all linear members of the ideal,
obtained by solving for the coefficients (A, B, C, D) that make
A*x + B*y + C*z + D reduce to zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

from .buchberger import GbResult, groebner_full, rem
from .poly import Monomial, Polynomial, mono_divide
from .textio import GeneratorSet
from .trace import PartialReduction

_X = Monomial((1, 0, 0))
_Y = Monomial((0, 1, 0))
_Z = Monomial((0, 0, 1))
_ONE = Monomial((0, 0, 0))


class WitnessSource(Enum):
    """Where the linear witness first appeared in the computation."""

    BUCHBERGER = "buchberger"
    REDUCTION = "reduction"
    RGB = "rgb"


@dataclass(frozen=True)
class LinearForm:
    """Plane coefficients: a*x + b*y + c*z + d with (a, b, c) nonzero."""

    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction

    def __post_init__(self):
        for name in ("a", "b", "c", "d"):
            v = getattr(self, name)
            if not isinstance(v, Fraction):
                object.__setattr__(self, name, Fraction(v))
        if self.a == 0 and self.b == 0 and self.c == 0:
            raise ValueError("degenerate linear form: (a, b, c) = 0")

    @classmethod
    def from_polynomial(cls, p: Polynomial) -> LinearForm:
        if p.arity != 3 or not p.is_linear():
            raise ValueError(f"not a linear three-variable polynomial: {p!r}")
        return cls(p.coefficient(_X), p.coefficient(_Y), p.coefficient(_Z), p.coefficient(_ONE))

    def to_polynomial(self) -> Polynomial:
        pairs = [(_X, self.a), (_Y, self.b), (_Z, self.c), (_ONE, self.d)]
        return Polynomial.from_pairs(pairs, 3)

    def integer_scaled(self) -> tuple[int, int, int, int]:
        """Smallest integer multiple with positive first nonzero coefficient."""
        coeffs = (self.a, self.b, self.c, self.d)
        scale = lcm(*(f.denominator for f in coeffs))
        ints = [int(f * scale) for f in coeffs]
        g = gcd(*ints)
        ints = [v // g for v in ints]
        if next(v for v in ints if v) < 0:
            ints = [-v for v in ints]
        return tuple(ints)


@dataclass(frozen=True)
class PlanarityReport:
    """Outcome of the full analysis of one generator system."""

    consistent: bool
    planar_detected: bool
    witness: LinearForm | None
    witness_source: WitnessSource | None
    lt_exclusion: tuple[bool, bool] | None
    oracle_basis: tuple[LinearForm, ...]


def is_consistent(rgb: Sequence[Polynomial]) -> bool:
    """False exactly when the reduced basis is the single polynomial 1."""
    return not (len(rgb) == 1 and rgb[0].monomials() == (_ONE,))


def detect_linear_witness(result: GbResult) -> tuple[LinearForm, WitnessSource] | None:
    """First linear polynomial along the computation path, with its origin.

    Scans the Buchberger-phase basis in growth order, then every
    intermediate polynomial of the reduction phase, then the reduced basis.
    """
    for poly in result.gb:
        if poly.is_linear():
            return LinearForm.from_polynomial(poly), WitnessSource.BUCHBERGER
    for event in result.trace:
        if isinstance(event, PartialReduction) and event.result.is_linear():
            return LinearForm.from_polynomial(event.result), WitnessSource.REDUCTION
    for poly in result.rgb:
        if poly.is_linear():
            return LinearForm.from_polynomial(poly), WitnessSource.RGB
    return None


def monomial_in_lt_ideal(mono: Monomial, gb: Sequence[Polynomial]) -> bool:
    """Membership in the leading-term ideal: some basis leading monomial divides mono."""
    return any(mono_divide(mono, g.leading_monomial()) is not None for g in gb)


def lt_exclusion_check(gb: Sequence[Polynomial]) -> tuple[bool, bool]:
    """(y outside the leading-term ideal, z outside the leading-term ideal)."""
    return (not monomial_in_lt_ideal(_Y, gb), not monomial_in_lt_ideal(_Z, gb))


def _nullspace_basis(rows: list[list[Fraction]], ncols: int) -> list[list[Fraction]]:
    """Basis of the solution space of a homogeneous system, exact over the rationals."""
    mat = [row[:] for row in rows]
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        pivot_row = next((k for k in range(r, len(mat)) if mat[k][col] != 0), None)
        if pivot_row is None:
            continue
        mat[r], mat[pivot_row] = mat[pivot_row], mat[r]
        pv = mat[r][col]
        mat[r] = [v / pv for v in mat[r]]
        for k in range(len(mat)):
            if k != r and mat[k][col] != 0:
                f = mat[k][col]
                mat[k] = [a - f * b for a, b in zip(mat[k], mat[r])]
        pivots.append(col)
        r += 1
        if r == len(mat):
            break
    basis = []
    for free_col in (c for c in range(ncols) if c not in pivots):
        v = [Fraction(0)] * ncols
        v[free_col] = Fraction(1)
        for row, pivot_col in enumerate(pivots):
            v[pivot_col] = -mat[row][free_col]
        basis.append(v)
    return basis


def linear_member_oracle(rgb: Sequence[Polynomial]) -> tuple[LinearForm, ...]:
    """Basis of all planes a*x + b*y + c*z + d lying in the ideal.

    The normal forms of x, y, z and 1 modulo the reduced basis are linear
    in (a, b, c, d); requiring their combination to vanish is one equation
    per monomial, solved exactly. Solutions with (a, b, c) = 0 are dropped
    and each basis form is normalized to first nonzero coefficient 1.
    """
    normal_forms = [
        rem(Polynomial.variable(i, 3), rgb) for i in range(3)
    ] + [rem(Polynomial.constant(1, 3), rgb)]
    monos = sorted({m for nf in normal_forms for m in nf.monomials()}, reverse=True)
    rows = [[nf.coefficient(m) for nf in normal_forms] for m in monos]
    forms = []
    for a, b, c, d in _nullspace_basis(rows, 4):
        if a == 0 and b == 0 and c == 0:
            continue
        lead = next(v for v in (a, b, c, d) if v != 0)
        forms.append(LinearForm(a / lead, b / lead, c / lead, d / lead))
    return tuple(forms)


def in_span(forms: Sequence[LinearForm], candidate: LinearForm) -> bool:
    """Exact test that candidate is a rational combination of the given forms.

    The solution space of linear ideal members can have dimension above one
    (two independent planes through the intersection), in which case a
    detected witness need not be a scalar multiple of any single basis form;
    span membership is the faithful containment check.
    """
    rows = [[f.a, f.b, f.c, f.d] for f in forms]
    mat: list[list[Fraction]] = []
    pivots: list[int] = []
    for row in rows:
        row = row[:]
        for prow, pcol in zip(mat, pivots):
            if row[pcol] != 0:
                f = row[pcol]
                row = [a - f * b for a, b in zip(row, prow)]
        lead = next((i for i, a in enumerate(row) if a != 0), None)
        if lead is None:
            continue
        row = [a / row[lead] for a in row]
        for k, prow in enumerate(mat):
            if prow[lead] != 0:
                f = prow[lead]
                mat[k] = [a - f * b for a, b in zip(prow, row)]
        mat.append(row)
        pivots.append(lead)
    work = [candidate.a, candidate.b, candidate.c, candidate.d]
    for prow, pcol in zip(mat, pivots):
        if work[pcol] != 0:
            f = work[pcol]
            work = [a - f * b for a, b in zip(work, prow)]
    return not any(work)


def report_from_result(result: GbResult) -> PlanarityReport:
    """Assemble the planarity report for an already-computed basis pipeline."""
    if not is_consistent(result.rgb):
        return PlanarityReport(False, False, None, None, None, ())
    hit = detect_linear_witness(result)
    witness, source = hit if hit is not None else (None, None)
    return PlanarityReport(
        consistent=True,
        planar_detected=hit is not None,
        witness=witness,
        witness_source=source,
        lt_exclusion=lt_exclusion_check(result.gb),
        oracle_basis=linear_member_oracle(result.rgb),
    )


def analyze(generators: GeneratorSet, optimized: bool = False) -> PlanarityReport:
    """Full pipeline: compute the bases, then report consistency and planarity."""
    return report_from_result(groebner_full(generators, optimized=optimized))
