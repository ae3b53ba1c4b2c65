"""Exact sparse multivariate polynomials over the integers.

Terms live in a dict from exponent tuples to nonzero Python ints, so
coefficients never overflow. Instances are treated as immutable values.
"""

from __future__ import annotations

import json
from collections.abc import Iterable, Mapping, Sequence

__all__ = [
    "SparsePolynomial", "add", "sub", "mul", "scale", "evaluate", "coeff",
    "divided_difference", "exact_divide_by_difference",
]

Exponent = tuple[int, ...]


class SparsePolynomial:
    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[Sequence[int], int] | Iterable[tuple[Sequence[int], int]] = ()):
        if nvars < 0:
            raise ValueError("nvars must be nonnegative")
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Exponent, int] = {}
        for exp, c in items:
            exp = tuple(int(e) for e in exp)
            if len(exp) != nvars:
                raise ValueError(f"exponent {exp} has length {len(exp)}, expected {nvars}")
            if any(e < 0 for e in exp):
                raise ValueError(f"negative exponent {exp}")
            acc[exp] = acc.get(exp, 0) + int(c)
        self.nvars = nvars
        self.terms = {e: c for e, c in acc.items() if c}

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> SparsePolynomial:
        return cls(nvars)

    @classmethod
    def constant(cls, c: int, nvars: int) -> SparsePolynomial:
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def monomial(cls, exp: Sequence[int], c: int = 1) -> SparsePolynomial:
        return cls(len(exp), {tuple(exp): c})

    @classmethod
    def variable(cls, i: int, nvars: int) -> SparsePolynomial:
        """The variable ``x_i`` (1-based)."""
        if not 1 <= i <= nvars:
            raise ValueError(f"variable index {i} out of range 1..{nvars}")
        exp = [0] * nvars
        exp[i - 1] = 1
        return cls(nvars, {tuple(exp): 1})

    @classmethod
    def _raw(cls, nvars: int, terms: dict[Exponent, int]) -> SparsePolynomial:
        # trusted fast path: terms already canonical
        obj = cls.__new__(cls)
        obj.nvars = nvars
        obj.terms = terms
        return obj

    # -- basic protocol -------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SparsePolynomial):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.nvars, frozenset(self.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __repr__(self) -> str:
        return f"SparsePolynomial({self.nvars}, {self.sorted_terms()!r})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for exp, c in reversed(self.sorted_terms()):
            mono = "*".join(
                f"x{i}" if e == 1 else f"x{i}^{e}"
                for i, e in enumerate(exp, start=1) if e
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def sorted_terms(self) -> list[tuple[Exponent, int]]:
        """Terms in lexicographic order of exponents."""
        return sorted(self.terms.items())

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def used_variables(self) -> set[int]:
        return {i + 1 for e in self.terms for i, x in enumerate(e) if x}

    def max_abs_coeff(self) -> int:
        return max((abs(c) for c in self.terms.values()), default=0)

    # -- change of ambient ring -----------------------------------------

    def extend(self, nvars: int) -> SparsePolynomial:
        """Same polynomial viewed in more variables."""
        if nvars < self.nvars:
            raise ValueError("extend cannot drop variables; use restrict")
        pad = (0,) * (nvars - self.nvars)
        return SparsePolynomial._raw(nvars, {e + pad: c for e, c in self.terms.items()})

    def restrict(self, nvars: int) -> SparsePolynomial:
        """Drop trailing variables, which must not occur."""
        if nvars > self.nvars:
            return self.extend(nvars)
        for e in self.terms:
            if any(e[nvars:]):
                raise ValueError(f"variable beyond x{nvars} occurs in {e}")
        return SparsePolynomial._raw(nvars, {e[:nvars]: c for e, c in self.terms.items()})

    def resize(self, nvars: int) -> SparsePolynomial:
        return self.extend(nvars) if nvars >= self.nvars else self.restrict(nvars)

    # -- ring operations ------------------------------------------------

    def _check(self, other: SparsePolynomial) -> None:
        if self.nvars != other.nvars:
            raise ValueError(f"nvars mismatch: {self.nvars} vs {other.nvars}")

    def __add__(self, other: SparsePolynomial) -> SparsePolynomial:
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return SparsePolynomial._raw(self.nvars, out)

    def __neg__(self) -> SparsePolynomial:
        return SparsePolynomial._raw(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: SparsePolynomial) -> SparsePolynomial:
        return self + (-other)

    def __mul__(self, other: SparsePolynomial | int) -> SparsePolynomial:
        if isinstance(other, int):
            return self.scale(other)
        self._check(other)
        out: dict[Exponent, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return SparsePolynomial._raw(self.nvars, {e: c for e, c in out.items() if c})

    def __rmul__(self, other: int) -> SparsePolynomial:
        return self.scale(other)

    def __pow__(self, k: int) -> SparsePolynomial:
        result = SparsePolynomial.constant(1, self.nvars)
        for _ in range(k):
            result = result * self
        return result

    def scale(self, c: int) -> SparsePolynomial:
        if not c:
            return SparsePolynomial._raw(self.nvars, {})
        return SparsePolynomial._raw(self.nvars, {e: c * v for e, v in self.terms.items()})

    def shift(self, exp: Sequence[int]) -> SparsePolynomial:
        """Multiply by the monomial ``x^exp``."""
        exp = tuple(exp)
        if len(exp) != self.nvars:
            raise ValueError("exponent length mismatch")
        return SparsePolynomial._raw(
            self.nvars, {tuple(a + b for a, b in zip(e, exp)): c for e, c in self.terms.items()}
        )

    # -- queries --------------------------------------------------------

    def coeff(self, exp: Sequence[int]) -> int:
        exp = tuple(exp)
        if len(exp) != self.nvars:
            raise ValueError(f"exponent {exp} has wrong length for {self.nvars} variables")
        return self.terms.get(exp, 0)

    def evaluate(self, point: Sequence[int]) -> int:
        if len(point) != self.nvars:
            raise ValueError(f"point has {len(point)} coordinates, expected {self.nvars}")
        total = 0
        for exp, c in self.terms.items():
            term = c
            for a, e in zip(point, exp):
                if e:
                    term *= a ** e
            total += term
        return int(total)

    def swap_variables(self, i: int) -> SparsePolynomial:
        """``f`` with ``x_i`` and ``x_{i+1}`` exchanged."""
        i -= 1
        out = {}
        for e, c in self.terms.items():
            e2 = list(e)
            e2[i], e2[i + 1] = e2[i + 1], e2[i]
            out[tuple(e2)] = c
        return SparsePolynomial._raw(self.nvars, out)

    def divided_difference(self, i: int) -> SparsePolynomial:
        if not 1 <= i < self.nvars:
            raise ValueError(f"divided difference index {i} out of range 1..{self.nvars - 1}")
        return exact_divide_by_difference(self - self.swap_variables(i), i)

    # -- serialization --------------------------------------------------

    def to_json_obj(self) -> dict:
        return {
            "nvars": self.nvars,
            "terms": [{"exp": list(e), "coeff": str(c)} for e, c in self.sorted_terms()],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json_obj(cls, obj: Mapping) -> SparsePolynomial:
        nvars = int(obj["nvars"])
        terms = []
        for t in obj["terms"]:
            coeff = t["coeff"]
            if not isinstance(coeff, str):
                raise ValueError("coefficients must be decimal strings")
            terms.append((t["exp"], int(coeff)))
        return cls(nvars, terms)

    @classmethod
    def from_json(cls, text: str) -> SparsePolynomial:
        return cls.from_json_obj(json.loads(text))


def exact_divide_by_difference(f: SparsePolynomial, i: int) -> SparsePolynomial:
    """Quotient of ``f`` by ``x_i - x_{i+1}``; raises if the division is inexact.

    Long division in ``x_i``: each step cancels a term of top ``x_i``-degree.
    """
    i0 = i - 1
    rem = dict(f.terms)
    quotient: dict[Exponent, int] = {}
    while rem:
        exp = max(rem, key=lambda e: (e[i0], e))
        c = rem.pop(exp)
        if exp[i0] == 0:
            raise ArithmeticError(f"nonzero remainder dividing by x{i} - x{i + 1}")
        q = list(exp)
        q[i0] -= 1
        q = tuple(q)
        quotient[q] = quotient.get(q, 0) + c
        # remainder -= c * x^q * (x_i - x_{i+1}); the x_i part cancels exp
        nxt = list(q)
        nxt[i0 + 1] += 1
        nxt = tuple(nxt)
        s = rem.get(nxt, 0) + c
        if s:
            rem[nxt] = s
        else:
            rem.pop(nxt, None)
    return SparsePolynomial._raw(f.nvars, {e: c for e, c in quotient.items() if c})


def add(f: SparsePolynomial, g: SparsePolynomial) -> SparsePolynomial:
    return f + g


def sub(f: SparsePolynomial, g: SparsePolynomial) -> SparsePolynomial:
    return f - g


def mul(f: SparsePolynomial, g: SparsePolynomial) -> SparsePolynomial:
    return f * g


def scale(f: SparsePolynomial, c: int) -> SparsePolynomial:
    return f.scale(c)


def evaluate(f: SparsePolynomial, point: Sequence[int]) -> int:
    return f.evaluate(point)


def coeff(f: SparsePolynomial, exp: Sequence[int]) -> int:
    return f.coeff(exp)


def divided_difference(f: SparsePolynomial, i: int) -> SparsePolynomial:
    """``(f - f^{s_i}) / (x_i - x_{i+1})``, computed by exact division."""
    return f.divided_difference(i)
