"""Schur polynomials through the Jacobi-Trudi determinant.

``schur_eval`` works with integers only: complete homogeneous values come
from a dynamic program and the determinant from Bareiss elimination.
``schur_expand`` builds the same determinant symbolically and is used as an
independent check.
"""

from __future__ import annotations

from collections.abc import Sequence
from functools import lru_cache
from itertools import combinations_with_replacement

from ._bigint import bigint
from .combinatorics import canonical_code, is_dominant
from .sparse_poly import SparsePolynomial

__all__ = [
    "complete_homogeneous_eval", "complete_homogeneous_values", "complete_homogeneous_poly",
    "bareiss_determinant", "schur_eval", "schur_expand",
]


def complete_homogeneous_values(top: int, point: Sequence[int]) -> list[int]:
    """``[h_0(a), ..., h_top(a)]`` in O(top * len(a)) operations."""
    if top < 0:
        return []
    if len(point) == 1:
        a = point[0]
        return [a ** ell for ell in range(top + 1)]
    h = [1] + [0] * top
    for a in point:
        # h_l(a_1..a_j) = h_l(a_1..a_{j-1}) + a_j * h_{l-1}(a_1..a_j)
        for ell in range(1, top + 1):
            h[ell] += a * h[ell - 1]
    return h


def complete_homogeneous_eval(ell: int, point: Sequence[int]) -> int:
    if ell < 0:
        return 0
    return complete_homogeneous_values(ell, point)[ell]


def bareiss_determinant(matrix: Sequence[Sequence[int]]) -> int:
    """Exact integer determinant by fraction-free elimination."""
    m = [list(row) for row in matrix]
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if m[r][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        pivot = m[k][k]
        for i in range(k + 1, n):
            row_i, row_k = m[i], m[k]
            mik = row_i[k]
            for j in range(k + 1, n):
                # exact by Sylvester's identity
                row_i[j] = (row_i[j] * pivot - mik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def _check_partition(alpha: Sequence[int]) -> tuple[int, ...]:
    return _checked_partition(tuple(alpha))


@lru_cache(maxsize=4096)
def _checked_partition(alpha: tuple[int, ...]) -> tuple[int, ...]:
    alpha = canonical_code(alpha)
    if not is_dominant(alpha):
        raise ValueError(f"{alpha} is not a partition (dominant code)")
    return alpha


def schur_eval(alpha: Sequence[int], point: Sequence[int]) -> int:
    """``s_alpha(point)`` as ``det[h_{alpha_i - i + j}]``."""
    return int(_schur_eval(_check_partition(alpha), tuple(bigint(a) for a in point)))


def _schur_eval(alpha: tuple[int, ...], point: Sequence[int]) -> int:
    r = len(alpha)
    if r == 0:
        return 1
    if r == 1:
        return complete_homogeneous_values(alpha[0], point)[-1]
    h = complete_homogeneous_values(alpha[0] + r - 1, point)

    def entry(ell: int) -> int:
        return h[ell] if ell >= 0 else 0

    if r == 2:
        return h[alpha[0]] * h[alpha[1]] - h[alpha[0] + 1] * entry(alpha[1] - 1)
    matrix = [[entry(alpha[i] - i + j) for j in range(r)] for i in range(r)]
    return bareiss_determinant(matrix)


@lru_cache(maxsize=256)
def complete_homogeneous_poly(ell: int, k: int) -> SparsePolynomial:
    """``h_ell(x_1..x_k)`` with every monomial of degree ``ell``."""
    if ell < 0:
        return SparsePolynomial.zero(k)
    if ell == 0:
        return SparsePolynomial.constant(1, k)
    terms = {}
    for combo in combinations_with_replacement(range(k), ell):
        exp = [0] * k
        for i in combo:
            exp[i] += 1
        terms[tuple(exp)] = 1
    return SparsePolynomial(k, terms)


def _cofactor_det(matrix: list[list[SparsePolynomial]], nvars: int) -> SparsePolynomial:
    n = len(matrix)
    memo: dict[tuple[int, frozenset[int]], SparsePolynomial] = {}

    def minor(row: int, cols: frozenset[int]) -> SparsePolynomial:
        # expansion along `row` using the remaining columns in increasing order
        if row == n:
            return SparsePolynomial.constant(1, nvars)
        key = (row, cols)
        if key in memo:
            return memo[key]
        total = SparsePolynomial.zero(nvars)
        for pos, j in enumerate(sorted(cols)):
            entry = matrix[row][j]
            if entry.is_zero():
                continue
            sub = minor(row + 1, cols - {j})
            term = entry * sub
            total = total - term if pos % 2 else total + term
        memo[key] = total
        return total

    return minor(0, frozenset(range(n)))


def schur_expand(alpha: Sequence[int], k: int) -> SparsePolynomial:
    """Monomial expansion of ``s_alpha(x_1..x_k)`` by symbolic Jacobi-Trudi."""
    alpha = _check_partition(alpha)
    if k < len(alpha):
        raise ValueError(f"need at least {len(alpha)} variables for {alpha}, got {k}")
    r = len(alpha)
    matrix = [[complete_homogeneous_poly(alpha[i] - i + j, k) for j in range(r)] for i in range(r)]
    return _cofactor_det(matrix, k)
