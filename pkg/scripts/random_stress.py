#!/usr/bin/env python3
"""Seeded randomized stress run over small generator systems.

Draws random systems (up to 3 generators, total degree up to 3, integer
coefficients in [-5, 5]), discards candidates whose faithful computation
exceeds the pair budget, and checks on every kept system that all
S-polynomials reduce to zero and that the reduced basis is invariant under
permuting and rescaling the generators. Prints throughput statistics.
"""

import argparse
import random
import sys
import time
from collections import Counter
from fractions import Fraction

from gbx import (
    BudgetExceededError,
    GeneratorSet,
    Monomial,
    Polynomial,
    groebner_full,
    rem,
    s_polynomial,
)


def random_polynomial(rng: random.Random) -> Polynomial:
    while True:
        terms = {}
        for _ in range(rng.randint(1, 4)):
            while True:
                exps = tuple(rng.randint(0, 3) for _ in range(3))
                if sum(exps) <= 3:
                    break
            coeff = rng.choice([c for c in range(-5, 6) if c])
            terms[exps] = terms.get(exps, 0) + coeff
        poly = Polynomial.from_pairs([(Monomial(e), Fraction(c)) for e, c in terms.items()], 3)
        if not poly.is_zero():
            return poly


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--count", type=int, default=100)
    parser.add_argument("--seed", type=int, default=20260809)
    parser.add_argument("--budget", type=int, default=250)
    args = parser.parse_args()

    rng = random.Random(args.seed)
    kept = 0
    rejected = 0
    sizes = Counter()
    t0 = time.perf_counter()
    while kept < args.count:
        gens = GeneratorSet.of([random_polynomial(rng) for _ in range(rng.randint(1, 3))])
        try:
            result = groebner_full(gens, pair_budget=args.budget)
        except BudgetExceededError:
            rejected += 1
            continue
        gb = list(result.gb)
        for i in range(len(gb)):
            for j in range(i + 1, len(gb)):
                assert rem(s_polynomial(gb[i], gb[j]), gb).is_zero(), gens

        shuffled = list(gens.generators)
        rng.shuffle(shuffled)
        scaled = [
            g.scale(Fraction(rng.randint(1, 9), rng.randint(1, 9)) * rng.choice((-1, 1)))
            for g in shuffled
        ]
        assert groebner_full(GeneratorSet.of(scaled)).rgb == result.rgb, gens

        sizes[len(result.rgb)] += 1
        kept += 1
    elapsed = time.perf_counter() - t0

    print(f"{kept} systems verified in {elapsed:.1f}s ({rejected} over budget, redrawn)")
    print("reduced basis sizes: " + ", ".join(f"{k}: {v}" for k, v in sorted(sizes.items())))
    return 0


if __name__ == "__main__":
    sys.exit(main())
