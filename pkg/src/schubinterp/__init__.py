"""Exact Schubert polynomials and deterministic sparse interpolation.

Schubert and skew Schubert polynomials are expanded and evaluated over the
integers, and black-box polynomials are interpolated in the monomial, Schur
or Schubert basis by a majority vote over Klivans-Spielman test vectors.
"""

from .combinatorics import code_to_perm, perm_to_code
from .interpolation import (
    BlackBox, Expansion, InterpolationConfig, NoMajorityError, PromiseViolation,
    get_basis, interpolate, ks_set,
)
from .lr import lr_expand_product, lr_oracle_triangular
from .schubert import schubert_eval, schubert_expand, schubert_expand_dd, schubert_expand_transition
from .schur import schur_eval, schur_expand
from .skew import skew_eval, skew_expand
from .sparse_poly import SparsePolynomial

__version__ = "0.1.0"

__all__ = [
    "BlackBox", "Expansion", "InterpolationConfig", "NoMajorityError", "PromiseViolation",
    "SparsePolynomial", "code_to_perm", "get_basis", "interpolate", "ks_set",
    "lr_expand_product", "lr_oracle_triangular", "perm_to_code", "schubert_eval",
    "schubert_expand", "schubert_expand_dd", "schubert_expand_transition", "schur_eval",
    "schur_expand", "skew_eval", "skew_expand",
]
