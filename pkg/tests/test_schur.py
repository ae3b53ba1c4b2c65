import math

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from oracles import ssyt_monomials
from schubinterp.schur import bareiss_determinant, complete_homogeneous_eval, schur_eval, schur_expand
from schubinterp.sparse_poly import SparsePolynomial


def partitions(max_weight, max_len):
    def rec(remaining, cap, length):
        yield ()
        if length == 0:
            return
        for first in range(min(remaining, cap), 0, -1):
            for rest in rec(remaining - first, first, length - 1):
                yield (first,) + rest
    return sorted(set(rec(max_weight, max_weight, max_len)))


SMALL = [(alpha, k) for alpha in partitions(5, 3) for k in range(max(1, len(alpha)), 4)]


def test_complete_homogeneous_examples():
    assert complete_homogeneous_eval(0, (4, 5)) == 1
    assert complete_homogeneous_eval(2, (1, 1)) == 3
    assert complete_homogeneous_eval(2, (2, 3)) == 19
    assert complete_homogeneous_eval(-1, (2, 3)) == 0


def test_schur_eval_examples():
    assert schur_eval((), (9, 9)) == 1
    assert schur_eval((1, 1), (2, 3)) == 6
    assert schur_eval((2, 1), (1, 1)) == 2
    with pytest.raises(ValueError):
        schur_eval((1, 2), (1, 1))


def test_schur_expand_examples():
    assert schur_expand((1,), 2) == SparsePolynomial(2, {(1, 0): 1, (0, 1): 1})
    assert schur_expand((2, 1), 2) == SparsePolynomial(2, {(2, 1): 1, (1, 2): 1})
    assert schur_expand((1, 1), 2) == SparsePolynomial.monomial((1, 1))
    with pytest.raises(ValueError):
        schur_expand((1, 1, 1), 2)


@given(st.lists(st.lists(st.integers(-20, 20), min_size=4, max_size=4), min_size=4, max_size=4))
def test_bareiss_matches_sympy(rows):
    assert bareiss_determinant(rows) == int(sympy.Matrix(rows).det())


@pytest.mark.parametrize("alpha,k", SMALL)
def test_expand_matches_tableaux(alpha, k):
    assert schur_expand(alpha, k).terms == dict(ssyt_monomials(alpha, k))


@pytest.mark.parametrize("alpha,k", SMALL)
def test_expand_invariants(alpha, k):
    s = schur_expand(alpha, k)
    assert all(c > 0 for c in s.terms.values())
    bound = math.isqrt(math.factorial(sum(alpha)))
    # c <= sqrt(|alpha|!) for an integer c is c <= isqrt(|alpha|!)
    assert s.max_abs_coeff() <= bound
    assert s.is_homogeneous() and (s.is_zero() or s.degree() == sum(alpha))


@given(st.sampled_from(SMALL), st.lists(st.integers(0, 10), min_size=3, max_size=3))
def test_eval_matches_expand(alpha_k, point):
    alpha, k = alpha_k
    assert schur_expand(alpha, k).evaluate(point[:k]) == schur_eval(alpha, point[:k])
