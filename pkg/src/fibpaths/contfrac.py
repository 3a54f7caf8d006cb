"""Continued fractions and closed forms for weighted Motzkin-like chains.

A chain is a sequence of levels; level i carries an up-step weight f_i, a
down-step weight g_i (for the step from level i+1 back to i) and a loop
weight h_i, each a series of valuation >= 1.  Two-sided chains additionally
carry mirror weights f'_i, g'_i, h'_i for the levels below the axis.

Excursions are walks that start and end at level 0; meanders may end
anywhere; the "grand" variants may also go below level 0.  Each generating
function is available both as a depth-truncated continued fraction /
truncated sum and, for constant weights, as a closed radical form.  A chain
truncated at depth s keeps the boundary loop and back-edge; since every
truncated piece below is an excursion relative to its own base level, all
the evaluators here are exact through z^(2s) when the step weights have
valuation 1.
"""

from __future__ import annotations

from dataclasses import dataclass

from .series import Series, one

__all__ = [
    "CFLevel",
    "constant_levels",
    "excursion_cf",
    "excursion_closed",
    "grand_excursion_cf",
    "grand_excursion_closed",
    "grand_meander_cf",
    "grand_meander_closed",
    "meander_cf",
    "meander_closed",
]


@dataclass(frozen=True)
class CFLevel:
    """Weights at one chain level; primed entries are the mirror weights of
    two-sided chains (None for one-sided use)."""

    f: Series
    g: Series
    h: Series
    fp: Series | None = None
    gp: Series | None = None
    hp: Series | None = None


def constant_levels(f, g, h, count, fp=None, gp=None, hp=None):
    """`count` copies of one level; enough for evaluation depth count-1."""
    return [CFLevel(f, g, h, fp, gp, hp)] * count


def _check_weight(w, what):
    if w.valuation() == 0:
        raise ValueError("%s must have valuation >= 1" % what)


def _check_levels(levels, depth, primed=False):
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    if len(levels) <= depth:
        raise ValueError(
            "need %d levels for depth %d, got %d" % (depth + 1, depth, len(levels))
        )
    for i, lvl in enumerate(levels[: depth + 1]):
        _check_weight(lvl.f, "f[%d]" % i)
        _check_weight(lvl.g, "g[%d]" % i)
        _check_weight(lvl.h, "h[%d]" % i)
        if primed:
            if lvl.fp is None or lvl.gp is None or (i > 0 and lvl.hp is None):
                raise ValueError("two-sided evaluation needs primed weights")
            _check_weight(lvl.fp, "f'[%d]" % i)
            _check_weight(lvl.gp, "g'[%d]" % i)
            if i > 0:
                _check_weight(lvl.hp, "h'[%d]" % i)


def _mirror(levels, keep_root_loop=True):
    """The chain seen by a walk below the axis: f -> g', g -> f', loops h';
    the level-0 loop is shared between the two sides."""
    out = []
    for i, lvl in enumerate(levels):
        h = lvl.h if (i == 0 and keep_root_loop) else lvl.hp
        out.append(CFLevel(lvl.gp, lvl.fp, h))
    return out


def excursion_cf(levels, depth: int, order: int) -> Series:
    """Excursion GF of the chain truncated at `depth`, by the continued
    fraction E_i = 1/(1 - h_i - f_i g_i E_{i+1}) with tail E_s = 1/(1-h_s).

    Exact through z^(2*depth) when the step weights have valuation 1.
    """
    _check_levels(levels, depth)
    unit = one(order)
    e = (unit - levels[depth].h).inverse()
    for i in range(depth - 1, -1, -1):
        lvl = levels[i]
        e = (unit - lvl.h - lvl.f * lvl.g * e).inverse()
    return e


def grand_excursion_cf(levels, depth: int, order: int) -> Series:
    """Excursion GF of the two-sided chain truncated at levels +-depth:
    1/(1 - h_0 - f_0 g_0 E_1 - f'_0 g'_0 E'_1)."""
    _check_levels(levels, depth, primed=True)
    unit = one(order)
    if depth == 0:
        return (unit - levels[0].h).inverse()
    lvl0 = levels[0]
    up = excursion_cf(levels[1:], depth - 1, order)
    down = excursion_cf(_mirror(levels[1:], keep_root_loop=False), depth - 1, order)
    return (
        unit - lvl0.h - lvl0.f * lvl0.g * up - lvl0.fp * lvl0.gp * down
    ).inverse()


def meander_cf(levels, depth: int, order: int) -> Series:
    """Meander GF as the truncated sum over the final level j of
    (prod_{i<j} f_i E_i) E_j, each E truncated at relative depth `depth`.

    The prefactor gains valuation with every up step, so the sum is finite.
    Each E_j is truncated relative to its own base level j, so the sum is
    exact through z^(2*depth) for valuation-1 step weights.
    """
    _check_levels(levels, depth)
    cache: dict = {}

    def tail(j):
        key = tuple(id(lvl) for lvl in levels[j : j + depth + 1])
        got = cache.get(key)
        if got is None:
            got = cache[key] = excursion_cf(levels[j:], depth, order)
        return got

    total = Series([0] * (order + 1))
    prefix = one(order)
    j = 0
    while prefix.valuation() <= order:
        if j + depth >= len(levels):
            raise ValueError(
                "need at least %d levels for order %d at depth %d"
                % (order + depth + 2, order, depth)
            )
        e = tail(j)
        total = total + prefix * e
        prefix = prefix * levels[j].f * e
        j += 1
    return total


def grand_meander_cf(levels, depth: int, order: int) -> Series:
    """Meander GF of the two-sided chain, assembled from the one-sided
    excursion and meander GFs of the chain and its mirror:

        (E' G + E G' - E E') / (E + E' - E E' (1 - h_0))

    The shared factors account for the interleaving of the above-axis and
    below-axis portions through the level-0 loop.
    """
    _check_levels(levels, depth, primed=True)
    mirrored = _mirror(levels)
    e = excursion_cf(levels, depth, order)
    ep = excursion_cf(mirrored, depth, order)
    g = meander_cf(levels, depth, order)
    gp = meander_cf(mirrored, depth, order)
    h0 = levels[0].h
    num = ep * g + e * gp - e * ep
    den = e + ep - e * ep * (one(order) - h0)
    return num / den


# -- closed forms for constant weights ---------------------------------------


def _truncated(f, g, h, w):
    try:
        return f.truncate(w), g.truncate(w), h.truncate(w)
    except Exception:
        raise ValueError(
            "closed form needs weight series of order >= %d, got %d/%d/%d"
            % (w, f.order, g.order, h.order)
        ) from None


def excursion_closed(f, g, h, order: int) -> Series:
    """(1 - h - sqrt((1-h)^2 - 4fg)) / (2fg) for constant level weights.

    The division cancels z^valuation(fg), so f, g, h must carry
    order + valuation(fg) coefficients.
    """
    _check_weight(f, "f")
    _check_weight(g, "g")
    _check_weight(h, "h")
    fg = f * g
    if fg.is_zero():
        # chain without up/down excursions: loops only
        return (1 - h.truncate(order)).inverse()
    w = order + fg.valuation()
    f, g, h = _truncated(f, g, h, w)
    omh = 1 - h
    root = (omh * omh - 4 * (f * g)).sqrt()
    return ((omh - root) / (2 * (f * g))).truncate(order)


def grand_excursion_closed(f, g, h, order: int) -> Series:
    """1 / sqrt((1-h)^2 - 4fg) for constant two-sided weights."""
    _check_weight(f, "f")
    _check_weight(g, "g")
    _check_weight(h, "h")
    f, g, h = _truncated(f, g, h, order)
    omh = 1 - h
    return (omh * omh - 4 * (f * g)).sqrt().inverse()


def meander_closed(f, g, h, order: int) -> Series:
    """(1 - 2f - h - sqrt((1-h)^2 - 4fg)) / (2f (f+g+h-1)) for constant
    level weights; f, g, h must carry order + valuation(f) coefficients."""
    _check_weight(f, "f")
    _check_weight(g, "g")
    _check_weight(h, "h")
    if f.is_zero():
        return (1 - h.truncate(order)).inverse()
    w = order + f.valuation()
    f, g, h = _truncated(f, g, h, w)
    omh = 1 - h
    root = (omh * omh - 4 * (f * g)).sqrt()
    num = 1 - 2 * f - h - root
    den = 2 * f * (f + g + h - 1)
    return (num / den).truncate(order)


def grand_meander_closed(f, g, h, order: int) -> Series:
    """1 / (1 - f - g - h) for constant two-sided weights: every step
    sequence is admissible, weighted per step."""
    _check_weight(f, "f")
    _check_weight(g, "g")
    _check_weight(h, "h")
    f, g, h = _truncated(f, g, h, order)
    return (1 - f - g - h).inverse()
