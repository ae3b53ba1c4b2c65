"""Acceptance suite: every criterion runs exactly, one PASS/FAIL line each.

Run with ``pytest tests/test_acceptance.py -s`` or directly as a script.
Set ``SCHUB_ACCEPT_FULL=1`` to widen the LR family to codes of length 3
(slow: the largest products take tens of minutes on one core).
"""

from __future__ import annotations

import os
import random
import sys
import time
from fractions import Fraction
from itertools import combinations, permutations, product
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from oracles import lehmer_code  # noqa: E402

from schubinterp.arithmetization import arithmetization_eval  # noqa: E402
from schubinterp.combinatorics import (  # noqa: E402
    canonical_code, code_to_perm, embedding_size, is_antidominant, is_dominant, perm_length,
)
from schubinterp.interpolation import (  # noqa: E402
    BlackBox, Expansion, InterpolationConfig, InterpolationTrace, get_basis, interpolate, ks_set,
)
from schubinterp.lr import lr_expand_product, lr_oracle_triangular, lr_term_count  # noqa: E402
from schubinterp.schubert import (  # noqa: E402
    reverse_dominates, schubert_eval, schubert_expand_dd, schubert_expand_transition,
)
from schubinterp.schur import schur_expand  # noqa: E402
from schubinterp.skew import skew_embedding, skew_eval, skew_expand  # noqa: E402

FULL = os.environ.get("SCHUB_ACCEPT_FULL") == "1"


def codes(max_weight, max_len):
    return sorted({canonical_code(c) for c in product(range(max_weight + 1), repeat=max_len) if sum(c) <= max_weight})


CODES_W6_L4 = codes(6, 4)


# -- criteria ---------------------------------------------------------------------
# each returns (passed, detail)

def criterion_1():
    bad = [v for v in CODES_W6_L4 if schubert_expand_dd(v) != schubert_expand_transition(v)]
    return not bad, f"{len(CODES_W6_L4)} codes (weight <= 6, length <= 4), mismatches {bad[:3]}"


def criterion_2():
    violations = 0
    for v in CODES_W6_L4:
        f = schubert_expand_transition(v)
        padded = v + (0,) * (f.nvars - len(v))
        if f.coeff(padded) != 1:
            violations += 1
        violations += sum(1 for u in f.terms if not reverse_dominates(v, u))
    return violations == 0, f"{len(CODES_W6_L4)} codes, {violations} violations"


def criterion_3():
    anti = [v for v in codes(6, 6) if v and is_antidominant(v)]
    # divided differences, not the transition recursion, whose base case is Schur
    bad = [v for v in anti if schubert_expand_dd(v, len(v)) != schur_expand(tuple(reversed(v)), len(v))]
    return not bad, f"{len(anti)} anti-dominant codes (weight <= 6, length <= 6), mismatches {bad[:3]}"


def criterion_4():
    bad = []
    for sigma in permutations(range(1, 5)):
        v = lehmer_code(sigma)
        if skew_expand(v, (3, 2, 1)) != schubert_expand_transition(v).resize(3):
            bad.append(v)
    return not bad, f"24 permutations of S_4, mismatches {bad}"


def criterion_5():
    rng = random.Random(5)
    s3 = codes(3, 2)
    s3 = [c for c in s3 if embedding_size(c) <= 3]
    pairs = [(v, w) for v in s3 for w in s3
             if 0 <= perm_length(code_to_perm(w)) - perm_length(code_to_perm(v)) <= 2]
    checked, bad = 0, []
    for v, w in pairs:
        n = skew_embedding(v, w)
        for _ in range(3):
            point = tuple(rng.randint(0, 5) for _ in range(n - 1))
            checked += 1
            if arithmetization_eval(v, w, point) != skew_eval(v, w, point):
                bad.append((v, w, point))
    return checked >= 10 and not bad, f"{len(pairs)} pairs, {checked} instances, mismatches {bad[:3]}"


def _collision_masks(vectors, exps):
    masks = {}
    for a, b in combinations(range(len(exps)), 2):
        mask = 0
        for k, c in enumerate(vectors):
            if sum(x * y for x, y in zip(c, exps[a])) == sum(x * y for x, y in zip(c, exps[b])):
                mask |= 1 << k
        masks[a, b] = mask
    return masks


def criterion_6():
    counterexamples = 0
    sets_checked = 0
    for m in (1, 2, 3):
        for n in (1, 2, 3):
            ks = ks_set(m, n, Fraction(1, 3), 3)
            exps = list(product(range(4), repeat=n))
            masks = _collision_masks(ks.vectors, exps)
            # a vector is non-distinguishing for a set iff some pair in the set collides
            for size in range(1, min(m, len(exps)) + 1):
                for subset in combinations(range(len(exps)), size):
                    sets_checked += 1
                    bad = 0
                    for a, b in combinations(subset, 2):
                        bad |= masks[a, b]
                    if 3 * (ks.t - bad.bit_count()) < 2 * ks.t:
                        counterexamples += 1
    return counterexamples == 0, f"{sets_checked} exponent sets, {counterexamples} counterexamples"


def _random_expansion(rng, basis, max_terms=3, max_degree=4):
    n = rng.choice((1, 2, 3, 3, 3))
    pool = [c for c in codes(max_degree, n) if basis != "schur" or is_dominant(c)]
    labels = rng.sample(pool, rng.randint(1, min(max_terms, len(pool))))
    return n, Expansion(basis, {lab: rng.choice((-1, 1)) * rng.randint(1, 10**6) for lab in labels})


def _round_trip(expansion, n):
    basis = get_basis(expansion.basis, n)
    # the black box evaluates the monomial expansion, not the basis evaluator
    bb = BlackBox.from_polynomial(expansion.polynomial(basis))
    d = max(sum(lab) for lab in expansion.terms)
    return interpolate(bb, basis, n, d, len(expansion))


def criterion_7():
    failures, runs = [], 0
    for basis in ("monomial", "schur", "schubert"):
        rng = random.Random(f"round-trip-{basis}")
        for _ in range(100):
            n, e = _random_expansion(rng, basis)
            first, second = _round_trip(e, n).to_json(), _round_trip(e, n).to_json()
            runs += 1
            if first != e.to_json() or second != first:
                failures.append((basis, e.terms))
    # doubling the coefficient mass (up to 2^64) leaves the node count D unchanged
    basis = get_basis("schubert", 3)
    support = [(1, 0, 2), (0, 2, 1), (2, 1)]
    bounds = []
    for coeffs in ([2**62, -(2**62), 2**62], [2**63, -(2**63), 2**64]):
        e = Expansion("schubert", dict(zip(support, coeffs)))
        trace = InterpolationTrace()
        got = interpolate(BlackBox.from_polynomial(e.polynomial(basis)), basis, 3, 3, 3,
                          InterpolationConfig(early_exit=False), trace)
        if got != e:
            failures.append(("huge", e.terms))
        bounds.append(trace.degree_bounds)
    same_d = bounds[0] == bounds[1]
    return not failures and same_d, f"{runs} expansions x 2 runs, failures {failures[:2]}, D unchanged {same_d}"


def criterion_8():
    max_len = 3 if FULL else 2
    family = codes(5, max_len)
    pairs = [(u, v) for u in family for v in family if sum(u) + sum(v) <= 5]
    if FULL:
        pairs = [(u, v) for u, v in pairs if u <= v]  # the product is commutative
    bad = []
    for u, v in pairs:
        oracle = lr_oracle_triangular(u, v)
        got = lr_expand_product(u, v, lr_term_count(u, v))
        if got != oracle or any(c <= 0 for c in got.terms.values()):
            bad.append((u, v))
    identities = {
        ((1,), (1,), 1): {(2,): 1},
        ((0, 1), (0, 1), 4): {(0, 2): 1, (1, 1): 1},
        ((1,), (0, 1), 2): {(2,): 1, (1, 1): 1},
    }
    wrong = [k for k, want in identities.items() if lr_expand_product(*k).terms != want]
    return not bad and not wrong, (f"{len(pairs)} pairs (code length <= {max_len}), disagreements {bad[:3]}, "
                                   f"identity failures {wrong}")


def criterion_9():
    rng = random.Random(9)
    pool = CODES_W6_L4
    skew_pool = [c for c in codes(6, 3) if embedding_size(c) <= 4]
    bad = []
    for _ in range(200):
        v = rng.choice(pool)
        f = schubert_expand_transition(v)
        point = tuple(rng.randint(0, 20) for _ in range(f.nvars))
        if schubert_eval(v, point) != f.evaluate(point):
            bad.append(("schubert", v, point))
    for _ in range(200):
        v, w = rng.choice(skew_pool), rng.choice(skew_pool)
        f = skew_expand(v, w)
        point = tuple(rng.randint(0, 20) for _ in range(f.nvars))
        if skew_eval(v, w, point) != f.evaluate(point):
            bad.append(("skew", v, w, point))
    return not bad, f"200 schubert + 200 skew pairs, mismatches {bad[:3]}"


CRITERIA = [
    (1, "dual expansion equivalence", criterion_1),
    (2, "reverse dominance and unit leading coefficient", criterion_2),
    (3, "anti-dominant Schubert equals Schur", criterion_3),
    (4, "skew specialization over S_4", criterion_4),
    (5, "boolean-sum arithmetization", criterion_5),
    (6, "Klivans-Spielman distinguishing bound", criterion_6),
    (7, "interpolation round trip", criterion_7),
    (8, "generalized LR coefficients", criterion_8),
    (9, "evaluation consistency", criterion_9),
]


def run_criterion(number, name, fn):
    start = time.perf_counter()
    ok, detail = fn()
    status = "PASS" if ok else "FAIL"
    line = f"[{status}] criterion {number}: {name} ({time.perf_counter() - start:.1f}s) {detail}"
    return ok, line


@pytest.mark.parametrize("number,name,fn", CRITERIA, ids=[f"criterion_{n}" for n, _, _ in CRITERIA])
def test_criterion(number, name, fn, capsys):
    ok, line = run_criterion(number, name, fn)
    with capsys.disabled():
        print("\n" + line)
    assert ok, line


if __name__ == "__main__":
    results = [run_criterion(*c) for c in CRITERIA]
    for _, line in results:
        print(line, flush=True)
    sys.exit(0 if all(ok for ok, _ in results) else 1)
