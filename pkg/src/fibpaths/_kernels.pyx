# cython: language_level=3
"""Compiled series kernels.

Same contracts as fibpaths._kernels_py.  Each operand is put over a single
common denominator so the inner loops run on machine/big integers, with one
Fraction normalization per output coefficient instead of one gcd per
elementary operation.
"""

from fractions import Fraction

from math import gcd


cdef tuple _scale(a):
    """Return (nums, den) with a[i] == nums[i]/den and den the lcm."""
    cdef Py_ssize_t i, n = len(a)
    den = 1
    for i in range(n):
        d = a[i].denominator
        if d != 1:
            den = den // gcd(den, d) * d
    nums = [0] * n
    for i in range(n):
        f = a[i]
        if den == 1:
            nums[i] = f.numerator
        else:
            nums[i] = f.numerator * (den // f.denominator)
    return nums, den


def mul(a, b, Py_ssize_t m):
    """First m coefficients of the Cauchy product a*b."""
    if m <= 0:
        return []
    A, da = _scale(a)
    B, db = _scale(b)
    cdef Py_ssize_t la = len(A), lb = len(B), n, i, lo, hi
    den = da * db
    out = []
    for n in range(m):
        acc = 0
        lo = n - lb + 1
        if lo < 0:
            lo = 0
        hi = la - 1
        if n < hi:
            hi = n
        for i in range(lo, hi + 1):
            x = A[i]
            if x:
                y = B[n - i]
                if y:
                    acc += x * y
        out.append(Fraction(acc, den))
    return out


def inv(a, Py_ssize_t m):
    """First m coefficients of the reciprocal of a; requires a[0] != 0.

    With a_i = A_i/da, the integer sequence c_0 = 1,
    c_n = -sum_{i=1..n} A_i A_0^(i-1) c_{n-i} satisfies
    b_n = da c_n / A_0^(n+1).
    """
    if m <= 0:
        return []
    A, da = _scale(a)
    cdef Py_ssize_t la = len(A), n, i, top
    a0 = A[0]
    c = [1]
    for n in range(1, m):
        acc = 0
        p = 1
        top = la - 1
        if n < top:
            top = n
        for i in range(1, top + 1):
            x = A[i]
            if x:
                acc += x * p * c[n - i]
            p = p * a0
        c.append(-acc)
    out = []
    pw = a0
    for n in range(m):
        out.append(Fraction(da * c[n], pw))
        pw = pw * a0
    return out


def sqrt(a, Py_ssize_t m):
    """First m coefficients of the square root of a; requires a[0] == 1.

    With a_i = A_i/da (so A_0 == da), the integer sequence t_0 = 1,
    t_n = 4^(n-1) da^(n-1) A_n - sum_{i=1..n-1} t_i t_{n-i} satisfies
    b_n = t_n / (2^(2n-1) da^n).
    """
    if m <= 0:
        return []
    A, da = _scale(a)
    cdef Py_ssize_t la = len(A), n, i
    t = [1]
    q = 1
    fourda = 4 * da
    for n in range(1, m):
        acc = (A[n] * q) if n < la else 0
        q = q * fourda
        for i in range(1, (n - 1) // 2 + 1):
            acc -= 2 * t[i] * t[n - i]
        if n % 2 == 0:
            h = t[n // 2]
            acc -= h * h
        t.append(acc)
    out = [Fraction(1)]
    denpow = da
    two_pow = 2  # 2^(2n-1), kept as a Python int (a C shift would overflow)
    for n in range(1, m):
        out.append(Fraction(t[n], two_pow * denpow))
        denpow = denpow * da
        two_pow = two_pow * 4
    return out
