"""Multivariate division and the basis pipeline: Buchberger, minimal, reduced.

The Buchberger loop is the plain textbook form, kept deliberately faithful
so the recorded trace mirrors it: each pass snapshots the basis, walks all
unordered pairs in ascending index order, reduces every S-polynomial
against the snapshot, and appends nonzero monic remainders; additions only
take effect in the next pass. ``optimized=True`` additionally skips pairs
with coprime leading monomials, which cannot contribute; both modes reach
the same reduced basis.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .poly import Monomial, Polynomial, ZeroPolynomialError, mono_divide, mono_lcm
from .textio import GeneratorSet, format_monomial
from .trace import (
    PHASE_MINIMALIZE,
    GeneratorAdded,
    GeneratorRemoved,
    PartialReduction,
    PassCompleted,
    RemainderComputed,
    SPairConsidered,
    TraceEvent,
)


class EmptyDivisorSetError(ValueError):
    """Division requires at least one divisor."""


class BudgetExceededError(RuntimeError):
    """Raised when an explicit pair budget runs out before the basis stabilizes.

    Termination itself is guaranteed; the budget is an opt-in guard for
    randomized stress runs, where a rare dense system can make the faithful
    full-rescan loop arbitrarily expensive.
    """


def s_polynomial(p: Polynomial, q: Polynomial) -> Polynomial:
    """S-polynomial: scale p and q to the lcm of their leading monomials and subtract."""
    lt_p = p.leading_term()
    lt_q = q.leading_term()
    lcm = mono_lcm(lt_p.monomial, lt_q.monomial)
    left = p.mul_term(1 / lt_p.coefficient, mono_divide(lcm, lt_p.monomial))
    right = q.mul_term(1 / lt_q.coefficient, mono_divide(lcm, lt_q.monomial))
    return left - right


def divide(f: Polynomial, divisors: Sequence[Polynomial]) -> tuple[list[Polynomial], Polynomial]:
    """Multivariate division: f = sum(q_i * g_i) + r.

    The current leading term is cancelled by the lowest-index divisor whose
    leading monomial divides it; terms no divisor can cancel move to the
    remainder, so no monomial of r is divisible by any divisor's leading
    monomial.
    """
    if not divisors:
        raise EmptyDivisorSetError("no divisors")
    leads = []
    for g in divisors:
        if g.is_zero():
            raise ZeroPolynomialError("zero polynomial among divisors")
        leads.append(g.leading_term())
    work = {t.monomial: t.coefficient for t in f.terms}
    quotients: list[dict[Monomial, Fraction]] = [{} for _ in divisors]
    remainder: dict[Monomial, Fraction] = {}
    while work:
        mono = max(work)
        coeff = work.pop(mono)
        for i, lead in enumerate(leads):
            q_mono = mono_divide(mono, lead.monomial)
            if q_mono is None:
                continue
            q_coeff = coeff / lead.coefficient
            quotients[i][q_mono] = quotients[i].get(q_mono, Fraction(0)) + q_coeff
            # cancel the whole multiple; the leading part vanished with pop()
            for t in divisors[i].terms[1:]:
                m = Monomial(tuple(a + b for a, b in zip(q_mono.exponents, t.monomial.exponents)))
                c = work.get(m, Fraction(0)) - q_coeff * t.coefficient
                if c == 0:
                    work.pop(m, None)
                else:
                    work[m] = c
            break
        else:
            remainder[mono] = coeff
    arity = f.arity
    return (
        [Polynomial.from_pairs(q.items(), arity) for q in quotients],
        Polynomial.from_pairs(remainder.items(), arity),
    )


def rem(f: Polynomial, divisors: Sequence[Polynomial]) -> Polynomial:
    """Remainder of multivariate division of f by the divisor sequence."""
    return divide(f, divisors)[1]


def _coprime(a: Monomial, b: Monomial) -> bool:
    return all(i == 0 or j == 0 for i, j in zip(a.exponents, b.exponents))


def buchberger(
    generators: Sequence[Polynomial],
    trace: list[TraceEvent] | None = None,
    optimized: bool = False,
    pair_budget: int | None = None,
) -> list[Polynomial]:
    """Grow the monic generator list into a Groebner basis."""
    basis = [g.monic() for g in generators]
    pass_no = 0
    pairs_done = 0
    while True:
        pass_no += 1
        snapshot = list(basis)
        pairs_seen = False
        added = False
        for i in range(len(snapshot)):
            for j in range(i + 1, len(snapshot)):
                p, q = snapshot[i], snapshot[j]
                if optimized and _coprime(p.leading_monomial(), q.leading_monomial()):
                    continue
                pairs_seen = True
                pairs_done += 1
                if pair_budget is not None and pairs_done > pair_budget:
                    raise BudgetExceededError(f"pair budget {pair_budget} exhausted")
                s = s_polynomial(p, q)
                h = rem(s, snapshot) if not s.is_zero() else s
                if trace is not None:
                    trace.append(SPairConsidered(i, j, s))
                    trace.append(RemainderComputed(h))
                if h.is_zero():
                    continue
                h = h.monic()
                if h in basis:
                    continue
                basis.append(h)
                added = True
                if trace is not None:
                    trace.append(GeneratorAdded(len(basis) - 1, h))
        if trace is not None and pairs_seen:
            trace.append(PassCompleted(pass_no))
        if not added:
            return basis


def minimalize(
    basis: Sequence[Polynomial], trace: list[TraceEvent] | None = None
) -> list[Polynomial]:
    """Drop members whose leading monomial another member's leading monomial divides."""
    members = list(basis)
    i = 0
    while i < len(members):
        lm = members[i].leading_monomial()
        divisor = next(
            (
                g
                for k, g in enumerate(members)
                if k != i and mono_divide(lm, g.leading_monomial()) is not None
            ),
            None,
        )
        if divisor is None:
            i += 1
            continue
        members.pop(i)
        if trace is not None:
            reason = (
                f"leading monomial {format_monomial(lm)} is divisible by "
                f"{format_monomial(divisor.leading_monomial())}"
            )
            trace.append(GeneratorRemoved(i, reason, phase=PHASE_MINIMALIZE))
        i = 0
    return members


def _first_reducible(
    p: Polynomial, others: Sequence[Polynomial]
) -> tuple[int, Polynomial, Monomial] | None:
    """Largest non-leading monomial of p some other leading monomial divides."""
    for pos in range(1, len(p.terms)):
        mono = p.terms[pos].monomial
        for g in others:
            if mono_divide(mono, g.leading_monomial()) is not None:
                return pos, g, mono
    return None


def _partial_reduce(
    p: Polynomial, others: Sequence[Polynomial]
) -> tuple[Polynomial, Monomial] | None:
    hit = _first_reducible(p, others)
    if hit is None:
        return None
    pos, g, mono = hit
    factor = p.terms[pos].coefficient / g.leading_coefficient()
    reduced = p - g.mul_term(factor, mono_divide(mono, g.leading_monomial()))
    return reduced, mono


def partial_reduce_step(p: Polynomial, others: Sequence[Polynomial]) -> Polynomial | None:
    """Cancel exactly one reducible non-leading term of p, or None if none exists.

    Non-leading monomials are scanned in decreasing order and the first one
    divisible by another member's leading monomial is eliminated.
    """
    hit = _partial_reduce(p, others)
    return None if hit is None else hit[0]


def reduce_to_rgb(
    mgb: Sequence[Polynomial], trace: list[TraceEvent] | None = None
) -> list[Polynomial]:
    """Fully interreduce a minimal basis into the unique reduced basis.

    Members are visited in decreasing leading-monomial order, each driven
    to a fixpoint of single-term cancellations before moving on; sweeps
    repeat until nothing changes. Leading terms never participate, so the
    order and the monic scaling are stable throughout.
    """
    members = sorted(mgb, key=lambda p: p.leading_monomial(), reverse=True)
    changed = True
    while changed:
        changed = False
        for idx in range(len(members)):
            others = members[:idx] + members[idx + 1 :]
            if not others:
                continue
            while True:
                hit = _partial_reduce(members[idx], others)
                if hit is None:
                    break
                members[idx], mono = hit
                changed = True
                if trace is not None:
                    trace.append(PartialReduction(idx, mono, members[idx]))
    return members


@dataclass(frozen=True)
class GbResult:
    """All three bases plus the full step trace for one input system."""

    input: GeneratorSet
    gb: tuple[Polynomial, ...]
    mgb: tuple[Polynomial, ...]
    rgb: tuple[Polynomial, ...]
    trace: tuple[TraceEvent, ...]


def groebner_full(
    generators: GeneratorSet, optimized: bool = False, pair_budget: int | None = None
) -> GbResult:
    """Run the whole pipeline: Buchberger, then minimalize, then reduce."""
    trace: list[TraceEvent] = []
    gb = buchberger(generators.generators, trace=trace, optimized=optimized, pair_budget=pair_budget)
    mgb = minimalize(gb, trace=trace)
    rgb = reduce_to_rgb(mgb, trace=trace)
    return GbResult(generators, tuple(gb), tuple(mgb), tuple(rgb), tuple(trace))
