"""Codes, permutations and the Bruhat order.

A *code* is a tuple of nonnegative integers indexing a Schubert polynomial;
codes that differ only by trailing zeros are identified, and the canonical
form has none. A *permutation* is a tuple in one-line notation with values
``1..N``; a permutation is identified with its extensions by tail fixed points.

>>> code_to_perm((2, 0, 3))
(3, 1, 6, 2, 4, 5)
>>> perm_to_code((3, 1, 6, 2, 4, 5))
(2, 0, 3)
"""

from __future__ import annotations

from collections.abc import Sequence
from typing import NewType

__all__ = [
    "Code", "Permutation",
    "canonical_code", "canonical_perm", "pad_perm", "weight",
    "code_to_perm", "perm_to_code", "perm_length", "embedding_size",
    "apply_transposition", "bruhat_covers", "is_dominant", "is_antidominant",
    "parse_int_list", "format_int_list",
]

# exponent-like vector without trailing zeros
Code = NewType("Code", tuple[int, ...])

# one-line notation, values 1..N
Permutation = NewType("Permutation", tuple[int, ...])


def canonical_code(v: Sequence[int]) -> Code:
    v = tuple(int(x) for x in v)
    if any(x < 0 for x in v):
        raise ValueError(f"code entries must be nonnegative: {v}")
    end = len(v)
    while end and v[end - 1] == 0:
        end -= 1
    return Code(v[:end])


def _check_perm(sigma: Sequence[int]) -> tuple[int, ...]:
    sigma = tuple(int(x) for x in sigma)
    if sorted(sigma) != list(range(1, len(sigma) + 1)):
        raise ValueError(f"not a permutation of 1..{len(sigma)}: {sigma}")
    return sigma


def canonical_perm(sigma: Sequence[int]) -> Permutation:
    sigma = _check_perm(sigma)
    end = len(sigma)
    while end and sigma[end - 1] == end:
        end -= 1
    return Permutation(sigma[:end])


def pad_perm(sigma: Sequence[int], n: int) -> Permutation:
    """Extend ``sigma`` by tail fixed points to an element of S_n."""
    sigma = canonical_perm(sigma)
    if len(sigma) > n:
        raise ValueError(f"{sigma} does not embed in S_{n}")
    return Permutation(sigma + tuple(range(len(sigma) + 1, n + 1)))


def weight(v: Sequence[int]) -> int:
    return sum(v)


def embedding_size(v: Sequence[int]) -> int:
    """Smallest N with the permutation of ``v`` in S_N, i.e. max_i(v_i + i)."""
    v = canonical_code(v)
    return max((x + i for i, x in enumerate(v, start=1)), default=0)


def code_to_perm(v: Sequence[int]) -> Permutation:
    """The permutation whose Lehmer code is ``v``, as an element of S_N."""
    v = canonical_code(v)
    n = embedding_size(v)
    free = list(range(1, n + 1))
    images = [free.pop(x) for x in v]
    images.extend(free)
    return Permutation(tuple(images))


def perm_to_code(sigma: Sequence[int]) -> Code:
    sigma = _check_perm(sigma)
    n = len(sigma)
    return canonical_code(
        sum(1 for j in range(i + 1, n) if sigma[j] < sigma[i]) for i in range(n)
    )


def perm_length(sigma: Sequence[int]) -> int:
    """Number of inversions."""
    sigma = _check_perm(sigma)
    n = len(sigma)
    return sum(1 for i in range(n) for j in range(i + 1, n) if sigma[i] > sigma[j])


def apply_transposition(sigma: Sequence[int], i: int, k: int) -> Permutation:
    """``sigma * tau_{ik}``: swap positions ``i < k`` (1-based).

    ``sigma`` is padded with fixed points when ``k`` exceeds its length.
    """
    if not 1 <= i < k:
        raise ValueError(f"need 1 <= i < k, got i={i}, k={k}")
    sigma = _check_perm(sigma)
    if k > len(sigma):
        sigma = pad_perm(sigma, k)
    out = list(sigma)
    out[i - 1], out[k - 1] = out[k - 1], out[i - 1]
    return Permutation(tuple(out))


def is_cover_transposition(sigma: Sequence[int], i: int, k: int) -> bool:
    """Whether ``sigma * tau_{ik}`` covers ``sigma`` (1-based, i < k <= len)."""
    lo, hi = sigma[i - 1], sigma[k - 1]
    if lo > hi:
        return False
    return all(not lo < sigma[j - 1] < hi for j in range(i + 1, k))


def bruhat_covers(sigma: Sequence[int], n: int) -> list[tuple[int, int, Permutation]]:
    """All ``(i, k, pi)`` with ``pi = sigma * tau_{ik}`` covering ``sigma`` in S_n.

    Every transposition is tried and kept when the length goes up by exactly one.
    """
    sigma = pad_perm(sigma, n)
    base = perm_length(sigma)
    covers = []
    for i in range(1, n + 1):
        for k in range(i + 1, n + 1):
            pi = apply_transposition(sigma, i, k)
            if perm_length(pi) == base + 1:
                covers.append((i, k, pi))
    return covers


def is_dominant(v: Sequence[int]) -> bool:
    v = canonical_code(v)
    return all(a >= b for a, b in zip(v, v[1:]))


def is_antidominant(v: Sequence[int]) -> bool:
    v = canonical_code(v)
    return all(a <= b for a, b in zip(v, v[1:]))


def parse_int_list(text: str) -> tuple[int, ...]:
    """Parse ``"2,0,3"``; the empty string gives ``()``."""
    text = text.strip()
    if not text:
        return ()
    return tuple(int(part) for part in text.split(","))


def format_int_list(values: Sequence[int]) -> str:
    return ",".join(str(x) for x in values)
