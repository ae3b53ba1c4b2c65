from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from schubinterp.combinatorics import canonical_code, code_to_perm, embedding_size, perm_length, perm_to_code
from schubinterp.schubert import schubert_expand_transition
from schubinterp.skew import ChainLabel, increasing_chains, labeled_edges, skew_eval, skew_expand
from schubinterp.sparse_poly import SparsePolynomial

P = SparsePolynomial
CODES_W4 = sorted({canonical_code(c) for c in product(range(5), repeat=4) if sum(c) <= 4})


def staircase(n):
    return tuple(range(n - 1, 0, -1))


def test_labeled_edges_examples():
    edges = {(label, pi) for label, pi, _ in labeled_edges((1, 2, 3), 3)}
    assert edges == {(ChainLabel(1, 1), (2, 1, 3)), (ChainLabel(2, 2), (1, 3, 2))}
    assert labeled_edges((3, 2, 1), 3) == []
    edges = {(label, pi) for label, pi, _ in labeled_edges((2, 1, 3), 3)}
    assert edges == {
        (ChainLabel(1, 2), (3, 1, 2)), (ChainLabel(2, 2), (3, 1, 2)), (ChainLabel(2, 1), (2, 3, 1)),
    }


def test_increasing_chains_examples():
    chains = list(increasing_chains((2, 1, 3), (2, 1, 3), 3))
    assert len(chains) == 1 and len(chains[0]) == 0
    assert len(list(increasing_chains((1, 2, 3), (3, 2, 1), 3))) == 1
    (chain,) = increasing_chains((2, 3, 1), (3, 2, 1), 3)
    assert chain.exponent(3) == (1, 0)


def test_skew_expand_examples():
    assert skew_expand((2, 1), (2, 1)) == P.monomial((2, 1))
    assert skew_expand((), (2, 1)) == P.constant(1, 2)
    assert skew_expand((1,), (2, 1)) == P.monomial((1, 0))
    assert skew_expand((1, 1), (2, 1)) == P.monomial((1, 1))


def test_skew_eval_examples():
    assert skew_eval((1,), (2, 1), (4, 9)) == 4
    assert skew_eval((2, 1), (2, 1), (2, 3)) == 12
    assert skew_eval((1, 1), (2, 1), (2, 3)) == 6
    with pytest.raises(ValueError):
        skew_eval((1,), (2, 1), (4,))


@pytest.mark.parametrize("v", CODES_W4)
def test_specialization_to_schubert(v):
    n = max(1, embedding_size(v))
    longest = perm_to_code(tuple(range(n, 0, -1)))
    f = skew_expand(v, longest)
    assert f.restrict(len(v)) == schubert_expand_transition(v)
    # nothing outside x_1..x_len(v)
    assert f == schubert_expand_transition(v).extend(n - 1)


@pytest.mark.parametrize("v,w", [(v, w) for v in CODES_W4 for w in CODES_W4
                                  if embedding_size(v) <= 4 and embedding_size(w) <= 4 and sum(w) - sum(v) in (1, 2)])
def test_homogeneity_and_positivity(v, w):
    f = skew_expand(v, w)
    n = max(1, embedding_size(v), embedding_size(w))
    m = sum(w) - sum(v)
    assert all(c > 0 for c in f.terms.values())
    assert f.is_zero() or (f.is_homogeneous() and f.degree() == n * (n - 1) // 2 - m)
    for chain in increasing_chains(code_to_perm(v), code_to_perm(w), n):
        assert len(chain) == m
        assert all(a < b for a, b in zip(chain.labels, chain.labels[1:]))


@given(st.sampled_from(CODES_W4), st.sampled_from(CODES_W4), st.lists(st.integers(0, 20), min_size=7, max_size=7))
def test_eval_matches_expansion(v, w, point):
    f = skew_expand(v, w)
    assert skew_eval(v, w, point) == f.evaluate(point[:f.nvars])


def test_chain_steps_are_covers():
    for chain in increasing_chains((1, 2, 3, 4), (4, 3, 2, 1), 4):
        sigma = list(chain.start)
        for s, t in chain.steps:
            before = perm_length(sigma)
            sigma[s - 1], sigma[t - 1] = sigma[t - 1], sigma[s - 1]
            assert perm_length(sigma) == before + 1
        assert tuple(sigma) == chain.end
