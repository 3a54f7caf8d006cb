"""Shared helpers for the test suite."""

from fractions import Fraction


def ints(series):
    """Coefficients of a series as plain ints; fails if any is non-integral."""
    cs = series.coefficients()
    assert all(c.denominator == 1 for c in cs), "non-integral coefficient in %r" % (series,)
    return [int(c) for c in cs]


def fracs(values):
    return [Fraction(v) for v in values]


def long_division(num, den, m):
    """First m coefficients of num/den by schoolbook long division.

    Independent oracle for the reciprocal/division kernels: keeps a running
    remainder, emits r[0]/den[0], subtracts, shifts.  num and den are
    coefficient lists, den[0] != 0.
    """
    num = [Fraction(c) for c in num]
    den = [Fraction(c) for c in den]
    rem = num + [Fraction(0)] * max(0, m - len(num))
    out = []
    for _ in range(m):
        q = rem[0] / den[0]
        out.append(q)
        for i, d in enumerate(den):
            if i < len(rem):
                rem[i] -= q * d
        rem = rem[1:] + [Fraction(0)]
    return out
