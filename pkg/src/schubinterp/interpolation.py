"""Deterministic sparse interpolation in an interpolation-friendly basis.

A basis is described by a 0-1 matrix ``A`` and a leading-exponent map such
that, for every positive integer vector ``c``, the linear form ``<A c, .>``
is uniquely maximized on the support of each basis element at its leading
exponent. For every vector ``c`` of a Klivans-Spielman set the black box is
restricted to the curve ``x_i = y^(d_i)`` (``d = A c``), the univariate
polynomial is interpolated, and its top term identifies one basis element.
A second curve ``x_i = p_i y^(d_i)`` recovers the exponent from the ratio of
top coefficients. Subtracting that element and repeating gives one candidate
expansion per vector; the strict majority is returned.
"""

from __future__ import annotations

import json
import math
import os
from collections.abc import Callable, Mapping, Sequence
from concurrent.futures import ThreadPoolExecutor
from operator import sub
from dataclasses import dataclass, field
from fractions import Fraction

from ._bigint import bigint
from .combinatorics import Code, canonical_code, is_dominant
from .schubert import k_bound, schubert_eval, schubert_expand_transition
from .schur import schur_eval, schur_expand
from .sparse_poly import SparsePolynomial

__all__ = [
    "PromiseViolation", "NoMajorityError", "NonDistinguishingVector",
    "KSSet", "ks_set", "next_prime", "first_primes",
    "newton_coefficients", "newton_coefficient_at", "univariate_interpolate",
    "BasisDescriptor", "monomial_basis", "schur_basis", "schubert_basis", "get_basis",
    "Expansion", "BlackBox", "InterpolationConfig", "InterpolationTrace",
    "phi_point", "phi_eval", "extract_leading", "interpolate",
]


class PromiseViolation(Exception):
    """The input does not satisfy the stated degree/sparsity promise."""


class NoMajorityError(PromiseViolation):
    pass


class NonDistinguishingVector(Exception):
    """Malformed data from one test vector; that vector's vote is dropped."""


# -- Klivans-Spielman vectors ------------------------------------------------------

def _is_prime(q: int) -> bool:
    if q < 2:
        return False
    if q % 2 == 0:
        return q == 2
    f = 3
    while f * f <= q:
        if q % f == 0:
            return False
        f += 2
    return True


def next_prime(x: int) -> int:
    """Smallest prime strictly larger than ``x``."""
    q = x + 1
    while not _is_prime(q):
        q += 1
    return q


def first_primes(n: int) -> tuple[int, ...]:
    out: list[int] = []
    q = 1
    while len(out) < n:
        q = next_prime(q)
        out.append(q)
    return tuple(out)


@dataclass(frozen=True)
class KSSet:
    m: int
    n: int
    epsilon: Fraction
    d_param: int
    t: int
    p: int
    vectors: tuple[tuple[int, ...], ...]


def ks_set(m: int, n: int, epsilon: Fraction | str | float, d_param: int) -> KSSet:
    """``t = ceil(m^2 n / eps)`` vectors ``c^(k)_i = k^(i-1) mod p``, p the least prime > max(t, d_param)."""
    eps = Fraction(epsilon).limit_denominator(10**9) if isinstance(epsilon, float) else Fraction(epsilon)
    if m < 1 or n < 1 or d_param < 1:
        raise ValueError("m, n and d_param must be positive")
    if not 0 < eps < 1:
        raise ValueError("epsilon must lie strictly between 0 and 1")
    t = math.ceil(Fraction(m * m * n) / eps)
    p = next_prime(max(t, d_param))
    vectors = tuple(tuple(pow(k, i, p) for i in range(n)) for k in range(1, t + 1))
    return KSSet(m, n, eps, d_param, t, p, vectors)


# -- univariate interpolation -------------------------------------------------------

def newton_coefficients(values: Sequence[int]) -> list[int]:
    """Newton coefficients at nodes ``1, 2, ..., len(values)``.

    ``g(y) = sum_j c_j (y-1)(y-2)...(y-j)`` with ``c_j = Delta^j g(1) / j!``.
    The falling-factorial basis is unitriangular over the integers, so ``g``
    has integer coefficients iff every ``c_j`` is an integer; a nonzero
    remainder raises. Trailing zero coefficients are dropped: once a level of
    the difference table vanishes, so do all later ones.
    """
    level = [bigint(v) for v in values]
    diffs = []
    while level and any(level):
        diffs.append(level[0])
        level = list(map(sub, level[1:], level[:-1]))
    out = []
    fact = 1
    for j, delta in enumerate(diffs):
        if j:
            fact *= j
        q, r = divmod(delta, fact)
        if r:
            raise PromiseViolation(f"non-integral coefficient at Newton index {j}")
        out.append(int(q))
    return out


def _newton_to_monomial(newton: Sequence[int]) -> list[int]:
    # Horner in the nested form c_0 + (y-1)(c_1 + (y-2)(c_2 + ...))
    n = len(newton)
    poly = [0] * n
    for j in range(n - 1, -1, -1):
        # poly <- poly * (y - (j+1)) + c_j
        shifted = [0] + poly[:-1]
        node = j + 1
        poly = [s - node * p for s, p in zip(shifted, poly)]
        poly[0] += newton[j]
    return poly


def univariate_interpolate(evaluator: Callable[[int], int], degree_bound: int) -> list[int]:
    """Coefficients ``[b_0, ..., b_D]`` of an integer polynomial of degree <= D."""
    if degree_bound < 0:
        raise ValueError("degree bound must be nonnegative")
    values = [evaluator(y) for y in range(1, degree_bound + 2)]
    newton = newton_coefficients(values)
    return _newton_to_monomial(newton + [0] * (degree_bound + 1 - len(newton)))


def _top_term(newton: Sequence[int]) -> tuple[int, int] | None:
    # the falling-factorial basis is monic, so the last nonzero Newton
    # coefficient is the leading coefficient and its index the degree
    for j in range(len(newton) - 1, -1, -1):
        if newton[j]:
            return j, newton[j]
    return None


def _top_of_dense(coeffs: Sequence[int]) -> tuple[int, int] | None:
    for j in range(len(coeffs) - 1, -1, -1):
        if coeffs[j]:
            return j, coeffs[j]
    return None


# -- bases ------------------------------------------------------------------------

def _ones_matrix(n: int, keep: Callable[[int, int], bool]) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(1 if keep(i, j) else 0 for j in range(n)) for i in range(n))


@dataclass(frozen=True)
class BasisDescriptor:
    """An interpolation-friendly basis of polynomials in ``n`` variables."""
    name: str
    n: int
    transform: tuple[tuple[int, ...], ...]
    label_to_leading: Callable[[Code], tuple[int, ...]]
    leading_to_label: Callable[[Sequence[int]], Code | None]
    eval_oracle: Callable[[Code, Sequence[int]], int]
    expand_oracle: Callable[[Code], SparsePolynomial]
    bound: Callable[[Code, int], int]

    def apply_transform(self, c: Sequence[int]) -> tuple[int, ...]:
        return tuple(sum(a * x for a, x in zip(row, c)) for row in self.transform)


def _padded(label: Sequence[int], n: int) -> tuple[int, ...]:
    label = canonical_code(label)
    if len(label) > n:
        raise ValueError(f"label {label} needs more than {n} variables")
    return tuple(label) + (0,) * (n - len(label))


def monomial_basis(n: int) -> BasisDescriptor:
    def evaluate(label: Code, point: Sequence[int]) -> int:
        out = 1
        for a, e in zip(point, _padded(label, n)):
            out *= a ** e
        return out

    return BasisDescriptor(
        name="monomial",
        n=n,
        transform=_ones_matrix(n, lambda i, j: i == j),
        label_to_leading=lambda label: _padded(label, n),
        leading_to_label=canonical_code,
        eval_oracle=evaluate,
        expand_oracle=lambda label: SparsePolynomial.monomial(_padded(label, n)),
        bound=lambda label, n_: 1,
    )


def _schur_label(e: Sequence[int]) -> Code | None:
    return canonical_code(e) if is_dominant(e) else None


def schur_basis(n: int) -> BasisDescriptor:
    """Schur polynomials in ``n`` variables; ``A`` is upper triangular ones."""
    def bound(label: Code, n_: int) -> int:
        f = math.factorial(sum(label))
        r = math.isqrt(f)
        return r if r * r == f else r + 1

    return BasisDescriptor(
        name="schur",
        n=n,
        transform=_ones_matrix(n, lambda i, j: i <= j),
        label_to_leading=lambda label: _padded(label, n),
        leading_to_label=_schur_label,
        eval_oracle=lambda label, point: schur_eval(label, point),
        expand_oracle=lambda label: schur_expand(label, n),
        bound=bound,
    )


def schubert_basis(n: int) -> BasisDescriptor:
    """Schubert polynomials in ``n`` variables; ``A`` is lower triangular ones."""
    return BasisDescriptor(
        name="schubert",
        n=n,
        transform=_ones_matrix(n, lambda i, j: i >= j),
        label_to_leading=lambda label: _padded(label, n),
        leading_to_label=canonical_code,
        eval_oracle=lambda label, point: schubert_eval(label, point),
        expand_oracle=lambda label: schubert_expand_transition(label, n),
        bound=k_bound,
    )


_BASES = {"monomial": monomial_basis, "schur": schur_basis, "schubert": schubert_basis}


def get_basis(name: str, n: int) -> BasisDescriptor:
    try:
        return _BASES[name](n)
    except KeyError:
        raise ValueError(f"unknown basis {name!r}; choose from {sorted(_BASES)}") from None


# -- expansions and black boxes -------------------------------------------------------

@dataclass
class Expansion:
    """``sum a_label * t_label`` in a named basis."""
    basis: str
    terms: dict[Code, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        acc: dict[Code, int] = {}
        for label, c in dict(self.terms).items():
            label = canonical_code(label)
            acc[label] = acc.get(label, 0) + int(c)
        self.terms = {k: v for k, v in acc.items() if v}

    def key(self) -> tuple:
        return (self.basis, tuple(sorted(self.terms.items())))

    def __len__(self) -> int:
        return len(self.terms)

    def polynomial(self, basis: BasisDescriptor) -> SparsePolynomial:
        if basis.name != self.basis:
            raise ValueError(f"expansion is in the {self.basis} basis, not {basis.name}")
        total = SparsePolynomial.zero(basis.n)
        for label, c in self.terms.items():
            total = total + basis.expand_oracle(label).scale(c)
        return total

    def evaluate(self, basis: BasisDescriptor, point: Sequence[int]) -> int:
        return sum(c * basis.eval_oracle(label, point) for label, c in self.terms.items())

    def to_json_obj(self) -> dict:
        return {
            "basis": self.basis,
            "terms": [{"label": list(label), "coeff": str(c)} for label, c in sorted(self.terms.items())],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json_obj(cls, obj: Mapping) -> Expansion:
        terms: dict[Code, int] = {}
        for t in obj["terms"]:
            if not isinstance(t["coeff"], str):
                raise ValueError("coefficients must be decimal strings")
            label = canonical_code(t["label"])
            terms[label] = terms.get(label, 0) + int(t["coeff"])
        return cls(str(obj["basis"]), terms)

    @classmethod
    def from_json(cls, text: str) -> Expansion:
        return cls.from_json_obj(json.loads(text))


@dataclass(frozen=True)
class BlackBox:
    """Exact, deterministic evaluation access to a polynomial in ``nvars`` variables."""
    nvars: int
    eval: Callable[[Sequence[int]], int]

    def __call__(self, point: Sequence[int]) -> int:
        return self.eval(point)

    @classmethod
    def from_polynomial(cls, f: SparsePolynomial) -> BlackBox:
        return cls(f.nvars, f.evaluate)

    @classmethod
    def from_expansion(cls, expansion: Expansion, basis: BasisDescriptor) -> BlackBox:
        return cls.from_polynomial(expansion.polynomial(basis))


# -- the two curve maps and leading-term extraction -------------------------------

def phi_point(d_vec: Sequence[int], y: int, primes: Sequence[int] | None = None) -> tuple[int, ...]:
    """``(y^d_1, ..., y^d_n)`` or ``(p_1 y^d_1, ...)``, as GMP integers when available."""
    y = bigint(y)
    if primes is None:
        return tuple(y ** d for d in d_vec)
    return tuple(p * y ** d for p, d in zip(primes, d_vec))


def phi_eval(bb: BlackBox, partial: Expansion, basis: BasisDescriptor, d_vec: Sequence[int], y: int,
             primes: Sequence[int] | None = None) -> int:
    """``(bb - partial)`` at ``(y^d_1, ..., y^d_n)``, or at ``(p_1 y^d_1, ...)`` with primes."""
    if y < 1:
        raise ValueError("y must be positive")
    point = phi_point(d_vec, y, primes)
    return bb(point) - partial.evaluate(basis, point)


def extract_leading(g: Sequence[int], gprime: Sequence[int], primes: Sequence[int],
                    d_vec: Sequence[int]) -> tuple[tuple[int, ...], int]:
    """Exponent and coefficient of the top term from the two dense interpolants."""
    top = _top_of_dense(g)
    top_prime = _top_of_dense(gprime)
    if top is None:
        raise ValueError("g is the zero polynomial")
    if top_prime is None or top_prime[0] != top[0]:
        raise NonDistinguishingVector("top degrees of g and g' differ")
    return _exponent_from_ratio(top[0], top[1], top_prime[1], primes, d_vec), top[1]


def _exponent_from_ratio(k: int, b: int, b_prime: int, primes: Sequence[int],
                         d_vec: Sequence[int]) -> tuple[int, ...]:
    ratio, r = divmod(b_prime, b)
    if r or ratio <= 0:
        raise NonDistinguishingVector(f"{b_prime}/{b} is not a positive integer")
    exp = []
    for p in primes:
        e = 0
        while ratio % p == 0:
            ratio //= p
            e += 1
        exp.append(e)
    if ratio != 1:
        raise NonDistinguishingVector("coefficient ratio is not a product of the auxiliary primes")
    if sum(a * e for a, e in zip(d_vec, exp)) != k:
        raise NonDistinguishingVector("recovered exponent does not match the top degree")
    return tuple(exp)


# -- the main algorithm -----------------------------------------------------------

def _default_threads() -> int:
    try:
        return max(0, int(os.environ.get("SCHUB_THREADS", "0")))
    except ValueError:
        return 0


@dataclass
class InterpolationConfig:
    epsilon: Fraction = Fraction(1, 3)
    early_exit: bool = True
    threads: int = field(default_factory=_default_threads)


@dataclass
class InterpolationTrace:
    """Diagnostics filled in by ``interpolate`` when passed in."""
    ks: KSSet | None = None
    degree_bounds: list[int] = field(default_factory=list)
    vectors_tried: int = 0
    discarded: int = 0
    votes: int = 0


def newton_coefficient_at(values: Sequence[int], k: int) -> int:
    """``Delta^k g(1) / k!`` from ``g(1), ..., g(k+1)``, the k-th Newton coefficient.

    When ``deg g <= k`` this is the coefficient of ``y^k`` in ``g``.
    """
    if len(values) < k + 1:
        raise ValueError(f"need {k + 1} values, got {len(values)}")
    total = bigint(0)
    binom = 1
    for i in range(k + 1):
        # binom = C(k, i)
        term = binom * bigint(values[i])
        total += term if (k - i) % 2 == 0 else -term
        binom = binom * (k - i) // (i + 1)
    q, r = divmod(total, math.factorial(k))
    if r:
        raise PromiseViolation(f"non-integral coefficient at Newton index {k}")
    return int(q)


def _run_vector(bb: BlackBox, basis: BasisDescriptor, c: Sequence[int], d: int, m: int,
                primes: Sequence[int]) -> tuple[Expansion | None, int]:
    d_vec = basis.apply_transform(c)
    bound = d * max(d_vec) if d_vec else 0
    points = [phi_point(d_vec, y) for y in range(1, bound + 2)]
    # g(y) = bb(phi(y)) - partial(phi(y)); the partial part is updated term by term
    vals = [bb(pt) for pt in points]
    points_p: list[tuple[int, ...]] = []
    vals_p: list[int] = []
    found: dict[Code, int] = {}
    for step in range(m + 1):
        top = _top_term(newton_coefficients(vals))
        if top is None:
            break
        if step == m:
            # a nonzero remainder after m terms: the sparsity promise fails here
            return None, bound
        k, b = top
        if not points_p:
            points_p = [phi_point(d_vec, y, primes) for y in range(1, k + 2)]
            vals_p = [bb(pt) for pt in points_p]
        # only the y^k coefficient of g' is needed; on a distinguishing
        # vector deg g' = k, so it is the k-th Newton coefficient
        b_prime = newton_coefficient_at(vals_p, k)
        try:
            exp = _exponent_from_ratio(k, b, b_prime, primes, d_vec)
        except NonDistinguishingVector:
            return None, bound
        label = basis.leading_to_label(exp)
        if label is None or label in found:
            return None, bound
        found[label] = b
        # the new basis element has degree exactly k on both curves (its leading
        # exponent is the unique maximizer), so after the subtraction g and g'
        # have degree <= k and nodes 1..k+1 determine them
        vals = [v - b * basis.eval_oracle(label, pt) for v, pt in zip(vals[:k + 1], points)]
        vals_p = [v - b * basis.eval_oracle(label, pt) for v, pt in zip(vals_p[:k + 1], points_p)]
    return Expansion(basis.name, found), bound


def interpolate(bb: BlackBox, basis: BasisDescriptor, n: int, d: int, m: int,
                config: InterpolationConfig | None = None, trace: InterpolationTrace | None = None) -> Expansion:
    """Expansion of the black-box polynomial in ``basis``.

    Promise: degree at most ``d`` and at most ``m`` basis terms. Each test
    vector yields a candidate; the first candidate reaching a strict majority
    of the whole set is returned, which is the same as tallying every vector.
    """
    config = config or InterpolationConfig()
    if bb.nvars != n or basis.n != n:
        raise ValueError(f"dimension mismatch: black box {bb.nvars}, basis {basis.n}, n={n}")
    if d < 0 or m < 1:
        raise ValueError("need d >= 0 and m >= 1")
    ks = ks_set(m, n, config.epsilon, max(1, n * d))
    primes = first_primes(n)
    if trace is not None:
        trace.ks = ks
    needed = ks.t // 2 + 1
    tally: dict[tuple, int] = {}
    first_seen: dict[tuple, Expansion] = {}

    def record(result: tuple[Expansion | None, int]) -> Expansion | None:
        cand, bound = result
        if trace is not None:
            trace.vectors_tried += 1
            trace.degree_bounds.append(bound)
        if cand is None:
            if trace is not None:
                trace.discarded += 1
            return None
        key = cand.key()
        tally[key] = tally.get(key, 0) + 1
        first_seen.setdefault(key, cand)
        if trace is not None:
            trace.votes = tally[key]
        if tally[key] >= needed and config.early_exit:
            return cand
        return None

    vectors = ks.vectors
    if config.threads > 1:
        with ThreadPoolExecutor(max_workers=config.threads) as pool:
            for start in range(0, len(vectors), config.threads):
                batch = vectors[start:start + config.threads]
                results = pool.map(lambda c: _run_vector(bb, basis, c, d, m, primes), batch)
                for res in results:
                    winner = record(res)
                    if winner is not None:
                        return winner
    else:
        for c in vectors:
            winner = record(_run_vector(bb, basis, c, d, m, primes))
            if winner is not None:
                return winner

    best = max(tally.items(), key=lambda kv: kv[1], default=None)
    if best is not None and best[1] >= needed:
        if trace is not None:
            trace.votes = best[1]
        return first_seen[best[0]]
    raise NoMajorityError(
        f"no candidate expansion reached {needed} of {ks.t} votes; the degree or sparsity promise may be violated"
    )
