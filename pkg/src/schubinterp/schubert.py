"""Schubert polynomials: expansion, evaluation and leading-term structure.

Two expansion routes are provided and checked against each other in the
tests: the transition recursion of Lascoux and Schutzenberger with a Schur
base case, and divided differences applied to the staircase monomial.
"""

from __future__ import annotations

import math
from collections.abc import Sequence
from dataclasses import dataclass
from functools import lru_cache

from ._bigint import bigint
from .combinatorics import (
    Code, apply_transposition, canonical_code, code_to_perm, embedding_size,
    is_antidominant, is_cover_transposition, pad_perm, perm_to_code,
)
from .schur import _schur_eval, schur_expand
from .sparse_poly import SparsePolynomial

__all__ = [
    "TransitionStep", "transition", "transition_cap", "schubert_expand_transition",
    "schubert_expand_dd", "schubert_expand", "schubert_eval", "reduced_word_to_staircase",
    "reverse_dominates", "suffix_sums", "k_bound",
]


@dataclass(frozen=True)
class TransitionStep:
    """One step ``Y_v = x_k Y_{vprime} + sum(Y_u for u in psi)``."""
    k: int
    vprime: Code
    psi: tuple[Code, ...]


@lru_cache(maxsize=4096)
def _transition(v: Code) -> TransitionStep:
    k = len(v)
    vprime = canonical_code(v[:-1] + (v[-1] - 1,))
    sigma = pad_perm(code_to_perm(vprime), max(k, embedding_size(vprime)))
    psi = tuple(
        perm_to_code(apply_transposition(sigma, i, k))
        for i in range(1, k)
        if is_cover_transposition(sigma, i, k)
    )
    return TransitionStep(k, vprime, psi)


def transition(v: Sequence[int]) -> TransitionStep:
    v = canonical_code(v)
    if not v:
        raise ValueError("transition is undefined for the zero code")
    return _transition(v)


def transition_cap(v: Sequence[int]) -> int:
    """Bound n*(w^2 + w) on chains of non-anti-dominant transition codes."""
    v = canonical_code(v)
    w = sum(v)
    return len(v) * (w * w + w)


def _antidominant_partition(v: Code) -> tuple[int, ...]:
    return canonical_code(tuple(reversed(v)))


def schubert_expand_transition(v: Sequence[int], nvars: int | None = None) -> SparsePolynomial:
    """Monomial expansion of ``Y_v`` by the transition recursion.

    The result lives in ``len(v)`` variables unless ``nvars`` is given.
    """
    v0 = canonical_code(v)
    n = len(v0)
    cap = transition_cap(v0)
    memo: dict[Code, SparsePolynomial] = {}

    def expand(u: Code, depth: int) -> SparsePolynomial:
        if u in memo:
            return memo[u]
        if is_antidominant(u):
            result = schur_expand(_antidominant_partition(u), len(u)).extend(n) if u else \
                SparsePolynomial.constant(1, n)
        else:
            if depth > cap:
                raise RuntimeError(f"transition chain from {v0} exceeded cap {cap}")
            step = _transition(u)
            xk = [0] * n
            xk[step.k - 1] = 1
            result = expand(step.vprime, depth + 1).shift(xk)
            for w in step.psi:
                result = result + expand(w, depth + 1)
        memo[u] = result
        return result

    poly = expand(v0, 0)
    return poly if nvars is None else poly.resize(nvars)


def reduced_word_to_staircase(v: Sequence[int]) -> tuple[int, list[int]]:
    """Adjacent swaps taking ``<v>`` up to the longest element of S_N.

    Returns ``(N, word)`` where each ``i`` in ``word`` raises the length by one.
    Strict code ascents are removed first (leftmost first), which reaches a
    dominant code quickly; afterwards the leftmost equal pair is raised so every
    remaining code stays dominant and its Schubert polynomial is a monomial.
    """
    v0 = canonical_code(v)
    n = embedding_size(v0)
    code = list(v0) + [0] * (n - len(v0))
    staircase = [n - 1 - i for i in range(n)]
    word = []
    while code != staircase:
        i = next((j for j in range(n - 1) if code[j] < code[j + 1]), None)
        if i is None:
            i = next(j for j in range(n - 1) if code[j] == code[j + 1])
        # ascent at i: new code swaps the entries and bumps the left one
        code[i], code[i + 1] = code[i + 1] + 1, code[i]
        word.append(i + 1)
    return n, word


def schubert_expand_dd(v: Sequence[int], nvars: int | None = None) -> SparsePolynomial:
    """Monomial expansion of ``Y_v`` by divided differences from the staircase."""
    v0 = canonical_code(v)
    n, word = reduced_word_to_staircase(v0)
    if n == 0:
        poly = SparsePolynomial.constant(1, 0)
    else:
        poly = SparsePolynomial.monomial(tuple(n - 1 - i for i in range(n)))
        for i in reversed(word):
            poly = poly.divided_difference(i)
    poly = poly.restrict(len(v0))
    return poly if nvars is None else poly.resize(nvars)


def schubert_expand(v: Sequence[int], nvars: int | None = None, method: str = "transition") -> SparsePolynomial:
    if method == "transition":
        return schubert_expand_transition(v, nvars)
    if method == "dd":
        return schubert_expand_dd(v, nvars)
    raise ValueError(f"unknown expansion method {method!r}")


@lru_cache(maxsize=4096)
def _eval_program(v: Code) -> tuple[tuple, ...]:
    """The transition recursion for ``v`` unrolled into a straight-line program.

    Slots are filled in order; a step is ``(0, partition, nvars)`` for an
    anti-dominant base case or ``(k, slot_of_vprime, slots_of_psi)``. The
    last slot holds ``Y_v``.
    """
    cap = transition_cap(v)
    slots: dict[Code, int] = {}
    steps: list[tuple] = []

    def visit(u: Code, depth: int) -> int:
        if u in slots:
            return slots[u]
        if is_antidominant(u):
            step = (0, _antidominant_partition(u), len(u))
        else:
            if depth > cap:
                raise RuntimeError(f"transition chain from {v} exceeded cap {cap}")
            t = _transition(u)
            step = (t.k, visit(t.vprime, depth + 1), tuple(visit(w, depth + 1) for w in t.psi))
        slots[u] = len(steps)
        steps.append(step)
        return slots[u]

    visit(v, 0)
    return tuple(steps)


def schubert_eval(v: Sequence[int], point: Sequence[int]) -> int:
    """``Y_v(point)`` by the memoized transition recursion at integer values."""
    v0 = canonical_code(v)
    point = tuple(point)
    if any(a < 0 for a in point):
        raise ValueError("Schubert evaluation is defined here on nonnegative points")
    if len(point) < len(v0):
        raise ValueError(f"Y_{v0} needs {len(v0)} coordinates, got {len(point)}")
    return int(_run_program(_eval_program(v0), tuple(bigint(a) for a in point)))


def _run_program(program: tuple[tuple, ...], point: tuple[int, ...]) -> int:
    values: list[int] = []
    for k, a, b in program:
        if k == 0:
            values.append(_schur_eval(a, point[:b]))
        else:
            x = point[k - 1] * values[a]
            for j in b:
                x += values[j]
            values.append(x)
    return values[-1]


def suffix_sums(u: Sequence[int], n: int) -> tuple[int, ...]:
    """``(u_n, u_n + u_{n-1}, ..., u_n + ... + u_1)`` after zero padding to ``n``."""
    u = tuple(u) + (0,) * (n - len(u))
    out, acc = [], 0
    for x in reversed(u):
        acc += x
        out.append(acc)
    return tuple(out)


def reverse_dominates(v: Sequence[int], u: Sequence[int]) -> bool:
    """``v`` dominates ``u`` reversely: suffix sums of v are >= those of u, equal in total."""
    n = max(len(v), len(u))
    sv, su = suffix_sums(v, n), suffix_sums(u, n)
    if not sv:
        return True
    return sv[-1] == su[-1] and all(a >= b for a, b in zip(sv, su))


def k_bound(v: Sequence[int], n: int) -> int:
    """Ceiling of ``n^(2n(w^2+w)) * sqrt(w!)``, w the weight of ``v``."""
    v = canonical_code(v)
    if n < len(v):
        raise ValueError(f"n={n} is smaller than the code length {len(v)}")
    w = sum(v)
    p = n ** (2 * n * (w * w + w))
    # ceil(p * sqrt(w!)) = ceil(sqrt(p^2 * w!))
    s = p * p * math.factorial(w)
    r = math.isqrt(s)
    return r if r * r == s else r + 1
