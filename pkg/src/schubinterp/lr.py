"""Generalized Littlewood-Richardson coefficients.

``lr_expand_product`` treats ``a -> Y_u(a) * Y_v(a)`` as a black box and
interpolates it in the Schubert basis. ``lr_oracle_triangular`` gets the same
numbers without interpolation by peeling off leading terms of the expanded
product, and serves as the independent check.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence

from .combinatorics import canonical_code
from .interpolation import (
    BlackBox, Expansion, InterpolationConfig, NoMajorityError, interpolate, schubert_basis,
)
from .schubert import schubert_eval, schubert_expand_transition, suffix_sums

__all__ = ["product_nvars", "lr_expand_product", "lr_oracle_triangular", "lr_term_count"]

log = logging.getLogger(__name__)


def product_nvars(u: Sequence[int], v: Sequence[int]) -> int:
    """Variables needed by ``Y_u * Y_v``: both factors live in ``x_1..x_n``."""
    return max(1, len(canonical_code(u)), len(canonical_code(v)))


def lr_expand_product(u: Sequence[int], v: Sequence[int], m_bound: int,
                      config: InterpolationConfig | None = None) -> Expansion:
    """Schubert expansion of ``Y_u * Y_v`` from evaluations only.

    Starts from the smallest variable count holding both factors and, if the
    interpolation finds no majority, retries with one more variable at a time
    up to ``weight(u) + weight(v)`` extra variables.
    """
    u, v = canonical_code(u), canonical_code(v)
    d = sum(u) + sum(v)
    n0 = product_nvars(u, v)
    last_error: NoMajorityError | None = None
    for n in range(n0, n0 + d + 1):
        bb = BlackBox(n, lambda a: schubert_eval(u, a) * schubert_eval(v, a))
        try:
            return interpolate(bb, schubert_basis(n), n, d, m_bound, config)
        except NoMajorityError as exc:
            log.info("no majority with n=%d, growing", n)
            last_error = exc
    assert last_error is not None
    raise last_error


def lr_oracle_triangular(u: Sequence[int], v: Sequence[int]) -> Expansion:
    """Schubert expansion of ``Y_u * Y_v`` by repeated leading-term subtraction.

    The exponent with the lexicographically largest suffix-sum vector is
    always the leading exponent of a Schubert term with exactly that
    coefficient, since every monomial of ``Y_w`` is reverse dominated by ``w``.
    """
    u, v = canonical_code(u), canonical_code(v)
    n = product_nvars(u, v)
    rest = schubert_expand_transition(u, n) * schubert_expand_transition(v, n)
    limit = len(rest)
    terms = {}
    steps = 0
    while not rest.is_zero():
        steps += 1
        if steps > limit:
            raise RuntimeError("triangular peeling did not terminate")
        w = max(rest.terms, key=lambda e: suffix_sums(e, n))
        c = rest.terms[w]
        label = canonical_code(w)
        terms[label] = c
        rest = rest - schubert_expand_transition(label, n).scale(c)
    return Expansion("schubert", terms)


def lr_term_count(u: Sequence[int], v: Sequence[int]) -> int:
    """Number of Schubert terms in ``Y_u * Y_v``, for use as ``m_bound``."""
    return max(1, len(lr_oracle_triangular(u, v)))
