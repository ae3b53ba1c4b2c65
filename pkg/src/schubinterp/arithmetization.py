"""Boolean-sum arithmetization of skew Schubert polynomials at tiny sizes.

The chain of length ``m`` from ``sigma`` to ``pi`` in S_N is encoded by 0-1
data: ``g`` and ``b`` (N x m, the two label coordinates, one column per edge)
and permutation matrices ``W_1..W_m`` with ``W[i][j] = 1`` iff the
permutation sends position ``i`` to value ``j``. The polynomial ``h_N`` is a
product of gadgets that vanish unless the data is an increasing chain, in
which case it equals the chain monomial. Summing ``h_N`` over every 0-1
assignment gives the skew Schubert polynomial.

Index conventions that differ from a literal transcription:

* the column gadget uses ``g[i][k] * g[j][k]`` (two rows of one column);
* the second label coordinate is checked as ``b[k][t]`` with ``k`` the value
  at the left swapped position;
* the first-coordinate range sum ``sum_{i <= s < j} g[s][t]`` sits inside the
  Bruhat-cover sum where ``i, j`` are bound.

The sum is evaluated block by block (each ``W_t``, then the ``g``/``b``
columns); a gadget is evaluated once all of its variables are bound and a
zero gadget skips the remaining sub-sum, which contributes exactly zero.
``prune=False`` evaluates every gadget on every assignment instead.
"""

from __future__ import annotations

from collections.abc import Callable, Sequence
from fractions import Fraction
from itertools import product

from .combinatorics import canonical_code, code_to_perm, pad_perm, perm_length
from .skew import skew_embedding

__all__ = ["arithmetization_eval", "MAX_N", "MAX_M"]

MAX_N = 3
MAX_M = 2

Matrix = tuple[tuple[int, ...], ...]
Column = tuple[int, ...]


def perm_matrix(sigma: Sequence[int]) -> Matrix:
    n = len(sigma)
    return tuple(tuple(1 if sigma[i] == j + 1 else 0 for j in range(n)) for i in range(n))


def _all_matrices(n: int) -> list[Matrix]:
    return [tuple(tuple(bits[r * n:(r + 1) * n]) for r in range(n)) for bits in product((0, 1), repeat=n * n)]


def _equal_gadget(x: Matrix, y: Matrix) -> int:
    # prod (1 - delta)(1 + delta): 1 if x == y entrywise on 0-1 data, else 0
    out = 1
    for row_x, row_y in zip(x, y):
        for a, b in zip(row_x, row_y):
            delta = a - b
            out *= (1 - delta) * (1 + delta)
    return out


def _swap_rows(w: Matrix, i: int, j: int) -> Matrix:
    rows = list(w)
    rows[i], rows[j] = rows[j], rows[i]
    return tuple(rows)


# -- gadgets ------------------------------------------------------------------

def h_permutation(w: Matrix) -> int:
    """Factor of h_2 for one ``W_t``: nonzero iff ``w`` is a permutation matrix."""
    n = len(w)
    out = 1
    for i in range(n):
        for j in range(n):
            for l in range(n):
                for k in range(n):
                    if (i == l) != (j == k):
                        out *= 1 - w[i][j] * w[l][k]
    for i in range(n):
        out *= sum(w[i])
    return out


def h_column(g_col: Column, b_col: Column) -> int:
    """Factors of h_3 and h_4 for one edge: each column has exactly one 1."""
    n = len(g_col)
    out = 1
    for i in range(n):
        for j in range(n):
            if i != j:
                out *= (1 - g_col[i] * g_col[j]) * (1 - b_col[i] * b_col[j])
    return out * sum(g_col) * sum(b_col)


def h_target(w_last: Matrix, v: Matrix) -> int:
    """h_5: the last permutation is the target."""
    return _equal_gadget(w_last, v)


def h_step(w_prev: Matrix, w_next: Matrix, g_col: Column, b_col: Column) -> int:
    """Factor of h_8 for one edge: a Bruhat cover carrying the right label."""
    n = len(w_prev)
    total = 0
    for i in range(n):
        for j in range(n):
            swapped = _swap_rows(w_prev, i, j)
            h6 = _equal_gadget(w_next, swapped)
            g_range = sum(g_col[s] for s in range(i, j))
            for k in range(n):
                for l in range(k + 1, n):
                    term = w_prev[i][k] * w_prev[j][l]
                    if not term:
                        continue
                    for a in range(i + 1, j):
                        for c in range(k + 1, l):
                            term *= 1 - w_prev[a][c]
                    total += term * h6 * b_col[k] * g_range
    return total


def h_order(g_t: Column, g_next: Column, b_t: Column, b_next: Column) -> int:
    """Factor of h_9: consecutive labels increase lexicographically."""
    n = len(g_t)
    total = 0
    for i in range(n):
        later = sum(g_next[j] for j in range(i + 1, n))
        tie = sum(b_t[k] * sum(b_next[l] for l in range(k, n)) for k in range(n))
        total += g_t[i] * (later + g_next[i] * tie)
    return total


def h_monomial(g_cols: Sequence[Column], point: Sequence[int]) -> Fraction:
    """h_1: ``prod x_i^(N-i) * prod_j sum_k g[k][j] / x_k`` over the rationals.

    The product over columns is expanded and each Laurent monomial is
    evaluated from its net exponents, so a zero coordinate only fails when
    its net exponent is negative.
    """
    n = len(point)
    total = Fraction(0)
    for picks in product(*[[k for k in range(n) if col[k]] for col in g_cols]):
        exps = [n - i for i in range(1, n + 1)]
        for k in picks:
            exps[k] -= 1
        term = Fraction(1)
        for a, e in zip(point, exps):
            if a == 0 and e < 0:
                raise ZeroDivisionError("negative power of a zero coordinate")
            term *= Fraction(a) ** e
        coeff = 1
        for col, k in zip(g_cols, picks):
            coeff *= col[k]
        total += coeff * term
    return total


# -- the boolean sum ------------------------------------------------------------

def arithmetization_eval(v: Sequence[int], w: Sequence[int], point: Sequence[int], prune: bool = True) -> int:
    """Sum of ``h_N`` over all 0-1 assignments; equals ``Y_{<w>/<v>}(point)``."""
    v, w = canonical_code(v), canonical_code(w)
    n = skew_embedding(v, w)
    sigma = pad_perm(code_to_perm(v), n)
    pi = pad_perm(code_to_perm(w), n)
    m = perm_length(pi) - perm_length(sigma)
    if n > MAX_N or m > MAX_M:
        raise ValueError(f"instance too large for the boolean sum: N={n}, m={m} (limits {MAX_N}, {MAX_M})")
    if m < 0:
        return 0
    if len(point) < n - 1:
        raise ValueError(f"need at least {n - 1} coordinates, got {len(point)}")
    if any(a < 0 for a in point):
        raise ValueError("expects nonnegative coordinates")
    point = tuple(point[:n]) + (1,) * max(0, n - len(point))

    w0, target = perm_matrix(sigma), perm_matrix(pi)
    if m == 0:
        total = h_target(w0, target) * h_monomial((), point)
        return _as_int(total)

    # blocks: W_1..W_m, then (g_t, b_t) for t = 1..m
    matrices = _all_matrices(n)
    columns = list(product((0, 1), repeat=n))
    col_pairs = [(g, b) for g in columns for b in columns]
    blocks: list[list] = [matrices] * m + [col_pairs] * m

    def ws(assign: list) -> list[Matrix]:
        return [w0] + assign[:m]

    # (last block index needed, gadget on the partial assignment)
    gadgets: list[tuple[int, Callable[[list], int]]] = []
    for t in range(m):
        gadgets.append((t, lambda a, t=t: h_permutation(a[t])))
    gadgets.append((m - 1, lambda a: h_target(a[m - 1], target)))
    for t in range(m):
        gadgets.append((m + t, lambda a, t=t: h_column(*a[m + t])))
        gadgets.append((m + t, lambda a, t=t: h_step(ws(a)[t], ws(a)[t + 1], *a[m + t])))
    for t in range(m - 1):
        gadgets.append((m + t + 1, lambda a, t=t: h_order(a[m + t][0], a[m + t + 1][0], a[m + t][1], a[m + t + 1][1])))

    by_block: dict[int, list] = {}
    for last, fn in gadgets:
        by_block.setdefault(last, []).append(fn)

    def leaf(assign: list) -> Fraction:
        return h_monomial([assign[m + t][0] for t in range(m)], point)

    total = Fraction(0)
    if prune:
        def walk(depth: int, assign: list, acc: int) -> None:
            nonlocal total
            if depth == len(blocks):
                total += acc * leaf(assign)
                return
            for choice in blocks[depth]:
                assign.append(choice)
                value = acc
                for fn in by_block.get(depth, ()):
                    value *= fn(assign)
                    if not value:
                        break
                if value:
                    walk(depth + 1, assign, value)
                assign.pop()

        walk(0, [], 1)
    else:
        for assign in product(*blocks):
            assign = list(assign)
            value = 1
            for _, fn in gadgets:
                value *= fn(assign)
            if value:
                # h_1 has x^-1 factors; only evaluated where the other gadgets are nonzero
                total += value * leaf(assign)
    return _as_int(total)


def _as_int(value: Fraction) -> int:
    if value.denominator != 1:
        raise ArithmeticError(f"boolean sum is not integral: {value}")
    return value.numerator
