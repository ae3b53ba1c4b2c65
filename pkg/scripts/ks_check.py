"""Exhaustively check the Klivans-Spielman distinguishing bound at small sizes.

    python3 scripts/ks_check.py --max-m 3 --max-n 3 --max-entry 3

For every set of at most m exponent vectors with entries <= max-entry, counts
the test vectors whose inner products with the set are pairwise distinct and
reports the worst fraction seen against 1 - eps.
"""

from __future__ import annotations

import argparse
from fractions import Fraction
from itertools import combinations, product

from schubinterp.interpolation import ks_set


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-m", type=int, default=3)
    parser.add_argument("--max-n", type=int, default=3)
    parser.add_argument("--max-entry", type=int, default=3)
    parser.add_argument("--eps", type=Fraction, default=Fraction(1, 3))
    args = parser.parse_args()

    bad_total = 0
    for m in range(1, args.max_m + 1):
        for n in range(1, args.max_n + 1):
            ks = ks_set(m, n, args.eps, args.max_entry)
            exps = list(product(range(args.max_entry + 1), repeat=n))
            # bit k of masks[a, b] is set when vector k does not separate exps a and b
            masks = {}
            for a, b in combinations(range(len(exps)), 2):
                mask = 0
                for k, c in enumerate(ks.vectors):
                    if sum(x * y for x, y in zip(c, exps[a])) == sum(x * y for x, y in zip(c, exps[b])):
                        mask |= 1 << k
                masks[a, b] = mask
            worst, bad, sets = Fraction(1), 0, 0
            for size in range(2, min(m, len(exps)) + 1):
                for subset in combinations(range(len(exps)), size):
                    sets += 1
                    collide = 0
                    for a, b in combinations(subset, 2):
                        collide |= masks[a, b]
                    frac = Fraction(ks.t - collide.bit_count(), ks.t)
                    worst = min(worst, frac)
                    bad += frac < 1 - args.eps
            bad_total += bad
            print(f"m={m} n={n} t={ks.t} p={ks.p} sets={sets} worst fraction={worst} "
                  f"({float(worst):.3f}) below bound={bad}", flush=True)
    raise SystemExit(1 if bad_total else 0)


if __name__ == "__main__":
    main()
