"""k-Fibonacci numbers and their convolutions.

F_{k,0} = 0, F_{k,1} = 1, F_{k,n+1} = k F_{k,n} + F_{k,n-1}; k=1 gives the
Fibonacci numbers, k=2 the Pell numbers.  The r-fold convolved numbers are
the coefficients of (1 - k x - x^2)^(-r) and can be computed three
independent ways (series expansion, nested convolution sums, a binomial
closed form), which the test suite plays against each other.
"""

from __future__ import annotations

from functools import cache
from math import comb, factorial, prod

from .series import Series, one, poly

__all__ = [
    "IndexMismatch",
    "binom",
    "catalan",
    "convolved_binomial",
    "convolved_gf",
    "convolved_sum",
    "kfib",
    "multinom",
]


class IndexMismatch(ValueError):
    """Multinomial parts that do not sum to the top index."""


def _check_k(k: int):
    if k < 1:
        raise ValueError("k must be a positive integer, got %r" % (k,))


def kfib(k: int, n: int) -> int:
    """The k-Fibonacci number F_{k,n}."""
    _check_k(k)
    if n < 0:
        raise ValueError("n must be nonnegative, got %r" % (n,))
    a, b = 0, 1
    for _ in range(n):
        a, b = b, k * b + a
    return a


def convolved_gf(k: int, r: int, order: int) -> Series:
    """(1 - k x - x^2)^(-r) as a series; its coefficient of x^j is the
    r-fold convolved number F^(r)_{k,j+1}.  r = 0 gives the series 1."""
    _check_k(k)
    if r < 0:
        raise ValueError("convolution order r must be nonnegative")
    if r == 0:
        return one(order)
    return poly([1, -k, -1], order).inverse() ** r


@cache
def convolved_sum(k: int, m: int, r: int) -> int:
    """F^(r)_{k,m+1} as the sum over weak compositions m_1+...+m_r = m of
    prod_i F_{k,m_i+1}, evaluated by peeling off the first part."""
    _check_k(k)
    if m < 0:
        return 0
    if r == 0:
        return 1 if m == 0 else 0
    if r == 1:
        return kfib(k, m + 1)
    return sum(
        kfib(k, j + 1) * convolved_sum(k, m - j, r - 1) for j in range(m + 1)
    )


@cache
def convolved_binomial(k: int, j: int, r: int) -> int:
    """Binomial closed form for F^(r)_{k,j+1}:
    sum_{l=0}^{floor(j/2)} C(j+r-l-1, j-l) C(j-l, l) k^(j-2l)."""
    _check_k(k)
    if j < 0:
        return 0
    if r == 0:
        return 1 if j == 0 else 0
    return sum(
        comb(j + r - l - 1, j - l) * comb(j - l, l) * k ** (j - 2 * l)
        for l in range(j // 2 + 1)
    )


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def binom(n: int, j: int) -> int:
    """C(n, j), zero outside 0 <= j <= n."""
    if j < 0 or j > n:
        return 0
    return comb(n, j)


def multinom(n: int, parts) -> int:
    """Multinomial coefficient n! / prod(p!); parts must sum to n."""
    parts = tuple(parts)
    if any(p < 0 for p in parts) or sum(parts) != n:
        raise IndexMismatch(
            "parts %r do not form a weak composition of %d" % (parts, n)
        )
    return factorial(n) // prod(factorial(p) for p in parts)
