"""Skew Schubert polynomials from increasing chains in the labeled Bruhat order.

For a cover ``sigma < pi = sigma * tau_{st}`` there are ``t - s`` labeled edges
``(j, sigma(s))`` with ``s <= j < t``. A chain is increasing when its labels
increase lexicographically, and contributes ``x^d / x^{e(C)}`` where ``d`` is
the staircase ``(N-1, ..., 1)`` and ``e_j`` counts labels with first entry ``j``.
"""

from __future__ import annotations

from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from typing import NamedTuple

from .combinatorics import (
    Permutation, bruhat_covers, canonical_code, code_to_perm, embedding_size, pad_perm, perm_length,
)
from .sparse_poly import SparsePolynomial

__all__ = [
    "ChainLabel", "LabeledChain", "labeled_edges", "increasing_chains",
    "skew_embedding", "skew_expand", "skew_eval",
]


class ChainLabel(NamedTuple):
    j: int
    b: int


@dataclass(frozen=True)
class LabeledChain:
    start: Permutation
    labels: tuple[ChainLabel, ...]
    steps: tuple[tuple[int, int], ...]
    end: Permutation

    def __len__(self) -> int:
        return len(self.labels)

    def exponent(self, n: int) -> tuple[int, ...]:
        """``e(C)`` as a vector of length ``n - 1``."""
        e = [0] * max(n - 1, 0)
        for label in self.labels:
            e[label.j - 1] += 1
        return tuple(e)


def labeled_edges(sigma: Sequence[int], n: int) -> list[tuple[ChainLabel, Permutation, tuple[int, int]]]:
    """Outgoing labeled edges of ``sigma`` in S_n, sorted by label."""
    sigma = pad_perm(sigma, n)
    edges = []
    for s, t, pi in bruhat_covers(sigma, n):
        b = sigma[s - 1]
        for j in range(s, t):
            edges.append((ChainLabel(j, b), pi, (s, t)))
    edges.sort(key=lambda edge: (edge[0], edge[2]))
    return edges


def increasing_chains(sigma: Sequence[int], pi: Sequence[int], n: int) -> Iterator[LabeledChain]:
    """Depth-first enumeration of increasing chains from ``sigma`` to ``pi``."""
    start = pad_perm(sigma, n)
    target = pad_perm(pi, n)
    budget = perm_length(target) - perm_length(start)
    if budget < 0:
        return
    edge_cache: dict[Permutation, list] = {}

    def edges(p: Permutation) -> list:
        if p not in edge_cache:
            edge_cache[p] = labeled_edges(p, n)
        return edge_cache[p]

    labels: list[ChainLabel] = []
    steps: list[tuple[int, int]] = []

    def walk(current: Permutation, remaining: int) -> Iterator[LabeledChain]:
        if remaining == 0:
            if current == target:
                yield LabeledChain(start, tuple(labels), tuple(steps), current)
            return
        last = labels[-1] if labels else None
        for label, nxt, st in edges(current):
            if last is not None and label <= last:
                continue
            labels.append(label)
            steps.append(st)
            yield from walk(nxt, remaining - 1)
            labels.pop()
            steps.pop()

    yield from walk(start, budget)


def skew_embedding(v: Sequence[int], w: Sequence[int]) -> int:
    """Common N for the pair: max over both codes of (entry + index), at least 1."""
    return max(1, embedding_size(v), embedding_size(w))


def skew_expand(v: Sequence[int], w: Sequence[int]) -> SparsePolynomial:
    """``Y_{<w>/<v>}`` as a polynomial in ``N - 1`` variables."""
    v, w = canonical_code(v), canonical_code(w)
    n = skew_embedding(v, w)
    d = tuple(range(n - 1, 0, -1))
    terms: dict[tuple[int, ...], int] = {}
    for chain in increasing_chains(code_to_perm(v), code_to_perm(w), n):
        e = chain.exponent(n)
        exp = tuple(a - b for a, b in zip(d, e))
        terms[exp] = terms.get(exp, 0) + 1
    return SparsePolynomial(n - 1, terms)


def skew_eval(v: Sequence[int], w: Sequence[int], point: Sequence[int]) -> int:
    """Chain-by-chain value of ``Y_{<w>/<v>}``; each chain adds ``a^(d - e(C))``."""
    v, w = canonical_code(v), canonical_code(w)
    n = skew_embedding(v, w)
    if len(point) < n - 1:
        raise ValueError(f"need at least {n - 1} coordinates, got {len(point)}")
    if any(a < 0 for a in point):
        raise ValueError("skew evaluation expects nonnegative coordinates")
    d = tuple(range(n - 1, 0, -1))
    total = 0
    for chain in increasing_chains(code_to_perm(v), code_to_perm(w), n):
        e = chain.exponent(n)
        term = 1
        for a, di, ei in zip(point, d, e):
            # exponent d_i - e_i is nonnegative, so zero coordinates are fine
            term *= a ** (di - ei)
        total += term
    return total
