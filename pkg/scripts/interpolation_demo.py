"""Round-trip random sparse expansions through the interpolator and report costs.

    python3 scripts/interpolation_demo.py --basis schubert --count 10

For each expansion it prints the recovered terms, the number of test
vectors used, and the node count D per vector, once with small coefficients
and once with the coefficients scaled to about 2^64 (D must not move).
"""

from __future__ import annotations

import argparse
import random
import time
from itertools import product

from schubinterp.combinatorics import canonical_code, is_dominant
from schubinterp.interpolation import (
    BlackBox, Expansion, InterpolationConfig, InterpolationTrace, get_basis, interpolate,
)


def random_expansion(rng: random.Random, basis: str, n: int, terms: int, degree: int) -> Expansion:
    pool = sorted({canonical_code(c) for c in product(range(degree + 1), repeat=n) if sum(c) <= degree})
    if basis == "schur":
        pool = [c for c in pool if is_dominant(c)]
    labels = rng.sample(pool, min(terms, len(pool)))
    return Expansion(basis, {lab: rng.choice((-1, 1)) * rng.randint(1, 100) for lab in labels})


def run(e: Expansion, n: int) -> tuple[Expansion, InterpolationTrace, float]:
    basis = get_basis(e.basis, n)
    trace = InterpolationTrace()
    start = time.perf_counter()
    d = max((sum(lab) for lab in e.terms), default=0)
    got = interpolate(BlackBox.from_polynomial(e.polynomial(basis)), basis, n, d, max(1, len(e)),
                      InterpolationConfig(early_exit=False), trace)
    return got, trace, time.perf_counter() - start


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--basis", choices=("monomial", "schur", "schubert"), default="schubert")
    parser.add_argument("--count", type=int, default=5)
    parser.add_argument("--n", type=int, default=3)
    parser.add_argument("--terms", type=int, default=3)
    parser.add_argument("--degree", type=int, default=4)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    rng = random.Random(args.seed)
    for _ in range(args.count):
        e = random_expansion(rng, args.basis, args.n, args.terms, args.degree)
        big = Expansion(e.basis, {lab: c * 2**57 for lab, c in e.terms.items()})
        got, trace, secs = run(e, args.n)
        got_big, trace_big, secs_big = run(big, args.n)
        ok = got == e and got_big == big
        same_d = trace.degree_bounds == trace_big.degree_bounds
        print(f"{dict(e.terms)} ok={ok} vectors={trace.vectors_tried} votes={trace.votes} "
              f"max D={max(trace.degree_bounds)} D unchanged at 2^64 scale={same_d} "
              f"time {secs:.2f}s / {secs_big:.2f}s", flush=True)


if __name__ == "__main__":
    main()
