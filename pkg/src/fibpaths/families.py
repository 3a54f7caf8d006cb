"""The four path families, each countable by five independent methods.

Family kinds (paths take steps U, D and weighted horizontal runs, see
fibpaths.brute):

    fib           excursions staying weakly above the axis
    grand         excursions allowed below the axis
    prefix        meanders staying weakly above the axis
    grand-prefix  unconstrained meanders

Methods:

    closed     closed radical generating functions
    cf         depth-truncated continued fractions / meander sums
    automaton  linear solve of the depth-truncated chain automaton
    formula    coefficient sums over convolved k-Fibonacci numbers
    brute      exhaustive path enumeration (budgeted)

All five agree exactly wherever they are defined; `verify_methods` plays
them against each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import automata, brute, contfrac
from .brute import CONSTRAINTS, FAMILIES
from .kfib import binom, catalan, convolved_binomial, kfib, multinom
from .series import Series, default_order, poly

__all__ = [
    "FAMILIES",
    "METHODS",
    "MethodUnavailable",
    "NonIntegralResult",
    "PathCountReport",
    "coeff_fib",
    "coeff_grand",
    "coeff_prefix",
    "default_depth",
    "gf",
    "horizontal_weight",
    "sequence",
    "verify_methods",
]

METHODS = ("closed", "cf", "automaton", "formula", "brute")


class MethodUnavailable(ValueError):
    """Requested method has no published route for this family."""


class NonIntegralResult(ArithmeticError):
    """A path count came out non-integral; the computation is inconsistent."""


def _check_family(family):
    if family not in CONSTRAINTS:
        raise ValueError("unknown family %r (one of %s)" % (family, ", ".join(FAMILIES)))


def _check_k(k):
    if not isinstance(k, int) or k < 1:
        raise ValueError("k must be a positive integer, got %r" % (k,))


def horizontal_weight(k: int, order: int) -> Series:
    """Loop weight z/(1 - kz - z^2): a run of length l in k of the F_{k,l}
    colors."""
    return poly([0, 1], order) / poly([1, -k, -1], order)


def _level(k: int, order: int) -> contfrac.CFLevel:
    step = poly([0, 1], order)
    h = horizontal_weight(k, order)
    return contfrac.CFLevel(step, step, h, step, step, h)


def default_depth(family: str, order: int, method: str) -> int:
    """Truncation depth that keeps the result exact through `order`.

    The CF evaluators are relative to each base level, so ceil(order/2)+1
    levels always suffice.  The automaton truncates the chain absolutely;
    with every state final the all-up walk escapes a depth-s chain after s
    steps, so the meander families need depth = order there.
    """
    half = (order + 1) // 2 + 1
    if method == "automaton" and CONSTRAINTS[family][1] is False:
        return order
    return half


def gf(family: str, k: int, order: int | None = None, method: str = "closed",
       depth: int | None = None) -> Series:
    """Generating function of the family, exact through `order`
    (default: series.default_order()).  `depth` overrides the truncation
    depth of the cf and automaton methods."""
    _check_family(family)
    _check_k(k)
    n = default_order() if order is None else order
    if n < 0:
        raise ValueError("order must be nonnegative")
    if depth is not None and depth < 0:
        raise ValueError("depth must be nonnegative")
    if method == "closed":
        out = _closed(family, k, n)
    elif method == "cf":
        out = _cf(family, k, n, depth)
    elif method == "automaton":
        out = _automaton(family, k, n, depth)
    elif method == "formula":
        out = Series([_formula_coeff(family, k, t) for t in range(n + 1)])
    elif method == "brute":
        out = Series([brute.count_paths(family, k, t, memo=True) for t in range(n + 1)])
    else:
        raise ValueError("unknown method %r (one of %s)" % (method, ", ".join(METHODS)))
    if not out.is_integral():
        raise NonIntegralResult(
            "%s/%s GF for k=%d has non-integral coefficients" % (family, method, k)
        )
    return out


def _closed(family: str, k: int, order: int) -> Series:
    w = order + 2
    step = poly([0, 1], w)
    h = horizontal_weight(k, w)
    if family == "fib":
        return contfrac.excursion_closed(step, step, h, order)
    if family == "grand":
        return contfrac.grand_excursion_closed(step, step, h, order)
    if family == "prefix":
        return contfrac.meander_closed(step, step, h, order)
    return contfrac.grand_meander_closed(step, step, h, order)


def _cf(family: str, k: int, order: int, depth: int | None) -> Series:
    s = default_depth(family, order, "cf") if depth is None else depth
    level = _level(k, order)
    if family == "fib":
        return contfrac.excursion_cf([level] * (s + 1), s, order)
    if family == "grand":
        return contfrac.grand_excursion_cf([level] * (s + 1), s, order)
    levels = [level] * (order + s + 2)
    if family == "prefix":
        return contfrac.meander_cf(levels, s, order)
    return contfrac.grand_meander_cf(levels, s, order)


def _automaton(family: str, k: int, order: int, depth: int | None) -> Series:
    s = default_depth(family, order, "automaton") if depth is None else depth
    nonneg, end_zero = CONSTRAINTS[family]
    spec = automata.ChainSpec(
        kind="linear" if nonneg else "bilinear",
        depth=s,
        levels=[_level(k, order)] * (s + 1),
        all_final=not end_zero,
    )
    return automata.solve(automata.build_chain(spec), order)


# -- coefficient-sum formulas -------------------------------------------------


def coeff_fib(k: int, t: int) -> int:
    """[z^t] of the fib family: sum over n returning pairs and m runs of
    C(m+2n, m) Catalan(n) F^(m)_{k, t-2n-m+1}."""
    _check_k(k)
    total = 0
    for n in range(t // 2 + 1):
        cn = catalan(n)
        for m in range(t - 2 * n + 1):
            c = convolved_binomial(k, t - 2 * n - m, m)
            if c:
                total += cn * binom(m + 2 * n, m) * c
    return total


def coeff_grand(k: int, t: int) -> int:
    """[z^t] of the grand family; t = 0 is 1 by convention (empty path)."""
    _check_k(k)
    if t == 0:
        return 1
    total = Fraction(kfib(k + 1, t))
    for n in range(1, t // 2 + 1):
        for m in range((t - 2 * n) // 2 + 1):
            base = Fraction(2**n * n, n + 2 * m) * binom(n + 2 * m, m)
            for l in range(t - 2 * n - 2 * m + 1):
                c = convolved_binomial(k, t - 2 * n - 2 * m - l, l)
                if c:
                    total += base * binom(l + 2 * n + 2 * m, l) * c
    if total.denominator != 1:
        raise NonIntegralResult("grand coefficient k=%d t=%d is %s" % (k, t, total))
    return int(total)


def coeff_prefix(k: int, t: int) -> int:
    """[z^t] of the prefix family, a ballot-style triple sum."""
    _check_k(k)
    total = Fraction(0)
    for n in range(t + 1):
        for m in range((t - n) // 2 + 1):
            pref = Fraction(n + 1, n + m + 1)
            for l in range(t - n - 2 * m + 1):
                c = convolved_binomial(k, t - n - 2 * m - l, l)
                if c:
                    total += pref * multinom(n + 2 * m + l, (m, l, m + n)) * c
    if total.denominator != 1:
        raise NonIntegralResult("prefix coefficient k=%d t=%d is %s" % (k, t, total))
    return int(total)


def _formula_coeff(family: str, k: int, t: int) -> int:
    if family == "fib":
        return coeff_fib(k, t)
    if family == "grand":
        return coeff_grand(k, t)
    if family == "prefix":
        return coeff_prefix(k, t)
    raise MethodUnavailable(
        "no coefficient-sum formula for the grand-prefix family; "
        "use closed, cf, automaton or brute"
    )


# -- reports ------------------------------------------------------------------


@dataclass(frozen=True)
class PathCountReport:
    """Counts of one family for n = 0..n_max by one method."""

    family: str
    k: int
    method: str
    counts: tuple

    def __post_init__(self):
        object.__setattr__(self, "counts", tuple(self.counts))

    @property
    def n_max(self) -> int:
        return len(self.counts) - 1

    def to_json_dict(self) -> dict:
        # counts as decimal strings: they outgrow doubles quickly
        return {
            "family": self.family,
            "k": self.k,
            "method": self.method,
            "n_max": self.n_max,
            "counts": [str(c) for c in self.counts],
        }


def sequence(family: str, k: int, n_max: int, method: str = "closed",
             depth: int | None = None) -> PathCountReport:
    """Counts for n = 0..n_max as a report; every count is checked to be a
    nonnegative integer before anything is emitted."""
    series = gf(family, k, n_max, method, depth)
    counts = []
    for t in range(n_max + 1):
        c = series.coefficient(t)
        if c < 0:
            raise NonIntegralResult(
                "%s/%s count for k=%d, n=%d is negative: %s" % (family, method, k, t, c)
            )
        counts.append(int(c))
    return PathCountReport(family, k, method, tuple(counts))


def verify_methods(family: str, k: int, n_max: int, brute_max: int = 10,
                   depth: int | None = None) -> list[tuple]:
    """Cross-check every applicable method against the closed form.

    Returns mismatch tuples (family, k, n, method_a, method_b, value_a,
    value_b); empty means full agreement.
    """
    _check_family(family)
    _check_k(k)
    reference = sequence(family, k, n_max, "closed").counts
    mismatches = []
    others = ["cf", "automaton"]
    if family != "grand-prefix":
        others.append("formula")
    for method in others:
        got = sequence(family, k, n_max, method, depth).counts
        for n in range(n_max + 1):
            if got[n] != reference[n]:
                mismatches.append(
                    (family, k, n, "closed", method, reference[n], got[n])
                )
                break
    top = min(brute_max, n_max)
    for n in range(top + 1):
        got_n = brute.count_paths(family, k, n, memo=True)
        if got_n != reference[n]:
            mismatches.append((family, k, n, "closed", "brute", reference[n], got_n))
            break
    return mismatches
