"""GMP integers when available, plain ``int`` otherwise.

Values along the interpolation curves have thousands of bits; CPython's
schoolbook division makes fraction-free elimination on them slow.
"""

try:
    from gmpy2 import mpz as bigint
except ImportError:  # pragma: no cover
    bigint = int

__all__ = ["bigint"]
