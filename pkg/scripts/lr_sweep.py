"""Compare interpolated LR expansions with the triangular oracle over a code family.

    python3 scripts/lr_sweep.py --max-weight 5 --max-len 3

Prints one line per unordered pair: u, v, term count, agreement, seconds.
Pairs are processed cheapest first (by term count).
"""

from __future__ import annotations

import argparse
import time
from itertools import product

from schubinterp.combinatorics import canonical_code
from schubinterp.lr import lr_expand_product, lr_oracle_triangular, lr_term_count


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-weight", type=int, default=5, help="bound on weight(u) + weight(v)")
    parser.add_argument("--max-len", type=int, default=2, help="bound on code length")
    parser.add_argument("--max-terms", type=int, help="skip products with more Schubert terms")
    args = parser.parse_args()

    codes = sorted({canonical_code(c) for c in product(range(args.max_weight + 1), repeat=args.max_len)
                    if sum(c) <= args.max_weight})
    pairs = [(u, v) for u in codes for v in codes if u <= v and sum(u) + sum(v) <= args.max_weight]
    counted = sorted(((lr_term_count(u, v), u, v) for u, v in pairs))
    total, failures = 0.0, 0
    for m, u, v in counted:
        if args.max_terms is not None and m > args.max_terms:
            continue
        start = time.perf_counter()
        got = lr_expand_product(u, v, m)
        ok = got == lr_oracle_triangular(u, v) and all(c > 0 for c in got.terms.values())
        elapsed = time.perf_counter() - start
        total += elapsed
        failures += not ok
        print(f"{u} {v} m={m} {'ok' if ok else 'MISMATCH'} {elapsed:.2f}s (total {total:.1f}s)", flush=True)
    print(f"{len(counted)} pairs, {failures} failures")
    raise SystemExit(1 if failures else 0)


if __name__ == "__main__":
    main()
