"""Step-by-step events recorded while computing and reducing a basis.

The event sequence is a complete, deterministic transcript: replaying it
on top of the monic input generators reproduces every intermediate basis
state (see tests). Events serialize to a line-oriented text form and to
JSON records, one event per line in both cases. Indices are 0-based in
records and displayed 1-based (g1, g2, ...) in text.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Union

from .poly import Monomial, Polynomial
from .textio import format_monomial, print_polynomial

PHASE_BUCHBERGER = "buchberger"
PHASE_MINIMALIZE = "minimalize"
PHASE_REDUCE = "reduce"


@dataclass(frozen=True)
class SPairConsidered:
    i: int
    j: int
    s_poly: Polynomial
    phase: str = PHASE_BUCHBERGER


@dataclass(frozen=True)
class RemainderComputed:
    remainder: Polynomial
    phase: str = PHASE_BUCHBERGER


@dataclass(frozen=True)
class GeneratorAdded:
    index: int
    poly: Polynomial
    phase: str = PHASE_BUCHBERGER


@dataclass(frozen=True)
class GeneratorRemoved:
    index: int
    reason: str
    phase: str = PHASE_MINIMALIZE


@dataclass(frozen=True)
class PartialReduction:
    index: int
    monomial: Monomial
    result: Polynomial
    phase: str = PHASE_REDUCE


@dataclass(frozen=True)
class PassCompleted:
    number: int
    phase: str = PHASE_BUCHBERGER


TraceEvent = Union[
    SPairConsidered,
    RemainderComputed,
    GeneratorAdded,
    GeneratorRemoved,
    PartialReduction,
    PassCompleted,
]


def event_line(event: TraceEvent) -> str:
    """Human-readable one-line rendering."""
    prefix = f"[{event.phase}]"
    match event:
        case SPairConsidered(i=i, j=j, s_poly=s):
            return f"{prefix} s-pair (g{i + 1}, g{j + 1}): s = {print_polynomial(s)}"
        case RemainderComputed(remainder=h):
            return f"{prefix}   remainder = {print_polynomial(h)}"
        case GeneratorAdded(index=k, poly=p):
            return f"{prefix} added g{k + 1} = {print_polynomial(p)}"
        case GeneratorRemoved(index=k, reason=why):
            return f"{prefix} removed g{k + 1}: {why}"
        case PartialReduction(index=k, monomial=m, result=p):
            return f"{prefix} g{k + 1}: eliminated {format_monomial(m)}, now {print_polynomial(p)}"
        case PassCompleted(number=n):
            return f"{prefix} pass {n} complete"
    raise TypeError(f"unknown event {event!r}")


def event_record(event: TraceEvent) -> dict:
    """JSON-serializable record with printed polynomials."""
    match event:
        case SPairConsidered(i=i, j=j, s_poly=s, phase=phase):
            return {"kind": "s_pair", "phase": phase, "i": i, "j": j, "s": print_polynomial(s)}
        case RemainderComputed(remainder=h, phase=phase):
            return {"kind": "remainder", "phase": phase, "value": print_polynomial(h)}
        case GeneratorAdded(index=k, poly=p, phase=phase):
            return {"kind": "generator_added", "phase": phase, "index": k, "poly": print_polynomial(p)}
        case GeneratorRemoved(index=k, reason=why, phase=phase):
            return {"kind": "generator_removed", "phase": phase, "index": k, "reason": why}
        case PartialReduction(index=k, monomial=m, result=p, phase=phase):
            return {
                "kind": "partial_reduction",
                "phase": phase,
                "index": k,
                "monomial": format_monomial(m),
                "result": print_polynomial(p),
            }
        case PassCompleted(number=n, phase=phase):
            return {"kind": "pass_completed", "phase": phase, "number": n}
    raise TypeError(f"unknown event {event!r}")


def render_text(events) -> str:
    return "\n".join(event_line(e) for e in events)


def render_json(events) -> str:
    return "\n".join(json.dumps(event_record(e), sort_keys=True) for e in events)
