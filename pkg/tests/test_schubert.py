from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import sympy_schubert
from schubinterp.combinatorics import (
    apply_transposition, canonical_code, code_to_perm, is_antidominant, pad_perm, perm_length,
)
from schubinterp.schubert import (
    k_bound, reduced_word_to_staircase, reverse_dominates, schubert_eval, schubert_expand,
    schubert_expand_dd, schubert_expand_transition, suffix_sums, transition, transition_cap,
)
from schubinterp.schur import schur_expand
from schubinterp.sparse_poly import SparsePolynomial

P = SparsePolynomial
CODES = sorted({canonical_code(c) for c in product(range(5), repeat=3) if sum(c) <= 4})
codes = st.sampled_from(CODES)


def test_transition_examples():
    t = transition((0, 1))
    assert (t.k, t.vprime, t.psi) == (2, (), ((1,),))
    t = transition((1, 1))
    assert (t.k, t.vprime, t.psi) == (2, (1,), ())
    t = transition((2,))
    assert (t.k, t.vprime, t.psi) == (1, (1,), ())
    with pytest.raises(ValueError):
        transition(())


@pytest.mark.parametrize("v", [c for c in CODES if c])
def test_transition_postconditions(v):
    t = transition(v)
    assert t.k == len(v)
    assert t.vprime == canonical_code(v[:-1] + (v[-1] - 1,))
    n = max(len(c) for c in (v, t.vprime) + t.psi) + sum(v) + 2
    base = pad_perm(code_to_perm(t.vprime), n)
    for u in t.psi:
        assert sum(u) == sum(v)
        assert any(pad_perm(code_to_perm(u), n) == apply_transposition(base, i, t.k) for i in range(1, t.k))


def test_expand_examples():
    assert schubert_expand_transition((0, 2)) == P(2, {(2, 0): 1, (1, 1): 1, (0, 2): 1})
    assert schubert_expand_transition((1, 1)) == P.monomial((1, 1))
    assert schubert_expand_transition((2, 1)) == P.monomial((2, 1))
    assert schubert_expand_dd((1, 1)) == P.monomial((1, 1))
    assert schubert_expand_dd((1,)) == P.monomial((1,))
    assert schubert_expand_dd((0, 1)) == P(2, {(1, 0): 1, (0, 1): 1})
    assert schubert_expand_transition(()) == P.constant(1, 0)
    assert schubert_expand((0, 1), 3, "dd") == P(3, {(1, 0, 0): 1, (0, 1, 0): 1})
    with pytest.raises(ValueError):
        schubert_expand((1,), method="pipe")


def test_eval_examples():
    assert schubert_eval((1,), (5, 7)) == 5
    assert schubert_eval((0, 2), (1, 1, 1)) == 3
    assert schubert_eval((2, 0, 3), (1, 1, 1)) == sum(schubert_expand_transition((2, 0, 3)).terms.values())
    with pytest.raises(ValueError):
        schubert_eval((0, 1), (3,))
    with pytest.raises(ValueError):
        schubert_eval((1,), (-1,))


def test_reverse_dominance_examples():
    assert reverse_dominates((0, 1), (1, 0))
    assert not reverse_dominates((1, 0), (0, 1))
    assert reverse_dominates((2, 0, 3), (2, 0, 3))
    assert suffix_sums((2, 0, 3), 4) == (0, 3, 3, 5)


def test_k_bound_examples():
    assert k_bound((1,), 2) == 256
    assert k_bound((0,), 1) == 1
    # ceil(2^24 * sqrt 2)
    assert k_bound((1, 1), 2) == 23726567
    with pytest.raises(ValueError):
        k_bound((0, 1), 1)


def test_reduced_word_is_reduced():
    for v in CODES:
        n, word = reduced_word_to_staircase(v)
        sigma = list(pad_perm(code_to_perm(v), n))
        for i in word:
            before = perm_length(sigma)
            sigma[i - 1], sigma[i] = sigma[i], sigma[i - 1]
            assert perm_length(sigma) == before + 1
        assert sigma == list(range(n, 0, -1))


@pytest.mark.parametrize("v", [(2, 0, 3), (0, 1, 2), (1, 0, 2), (0, 0, 3), (1, 2), (0, 2, 1, 1)])
def test_transition_matches_sympy(v):
    assert schubert_expand_transition(v).terms == sympy_schubert(v, len(v))


@pytest.mark.parametrize("v", CODES)
def test_invariants(v):
    f = schubert_expand_transition(v)
    assert f == schubert_expand_dd(v)
    assert f.is_homogeneous() and (f.degree() == sum(v) or not v)
    assert f.used_variables() <= set(range(1, len(v) + 1))
    assert f.coeff(tuple(v) + (0,) * (f.nvars - len(v))) == 1
    assert all(reverse_dominates(v, u) for u in f.terms)
    assert f.max_abs_coeff() <= k_bound(v, max(1, len(v)))
    if v and is_antidominant(v):
        assert f == schur_expand(tuple(reversed(v)), len(v))


@given(codes, st.lists(st.integers(0, 20), min_size=3, max_size=3))
def test_eval_matches_expansion(v, point):
    assert schubert_eval(v, point) == schubert_expand_transition(v, 3).evaluate(point)


def test_transition_cap_formula():
    assert transition_cap((2, 0, 3)) == 3 * (25 + 5)
    assert transition_cap(()) == 0
