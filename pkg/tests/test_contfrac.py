"""Continued-fraction evaluators and closed forms.

The independent oracle here is `unit_paths`, a tiny direct enumerator of
single-color U/D/H paths (no series machinery at all); the frozen lists
were produced with it.
"""

import pytest

from fibpaths.contfrac import (
    CFLevel,
    constant_levels,
    excursion_cf,
    excursion_closed,
    grand_excursion_cf,
    grand_excursion_closed,
    grand_meander_cf,
    grand_meander_closed,
    meander_cf,
    meander_closed,
)
from fibpaths.series import one, poly, zero

from helpers import ints


def unit_paths(n, nonneg, end_zero, with_h=True):
    """Count length-n paths over steps U, D (and H if with_h), one color."""

    def walk(rem, y):
        if rem == 0:
            return 1 if (y == 0 or not end_zero) else 0
        total = walk(rem - 1, y + 1)
        if y > 0 or not nonneg:
            total += walk(rem - 1, y - 1)
        if with_h:
            total += walk(rem - 1, y)
        return total

    return walk(n, 0)


def unit_levels(order, count, with_h=True, two_sided=False):
    step = poly([0, 1], order)
    h = poly([0, 1], order) if with_h else zero(order)
    if two_sided:
        return constant_levels(step, step, h, count, step, step, h)
    return constant_levels(step, step, h, count)


def kfib_levels(k, order, count, two_sided=False):
    step = poly([0, 1], order)
    h = poly([0, 1], order) / poly([1, -k, -1], order)
    if two_sided:
        return constant_levels(step, step, h, count, step, step, h)
    return constant_levels(step, step, h, count)


def test_excursion_cf_depth_zero_is_loop_series():
    levels = unit_levels(8, 1)
    assert excursion_cf(levels, 0, 8) == poly([1, -1], 8).inverse()


def test_excursion_cf_motzkin():
    got = excursion_cf(unit_levels(9, 6), 5, 9)
    assert ints(got) == [1, 1, 2, 4, 9, 21, 51, 127, 323, 835]
    assert ints(got)[:7] == [unit_paths(n, True, True) for n in range(7)]


def test_excursion_cf_table_row():
    got = excursion_cf(kfib_levels(2, 8, 7), 6, 8)
    assert ints(got) == [1, 1, 4, 13, 47, 168, 610, 2226, 8185]


def test_excursion_cf_depth_stability():
    # depths s and s+1 agree through z^(2s); the first escape of the
    # truncated chain is the length-(2s+2) full climb
    for s in (1, 2, 3):
        order = 2 * s + 2
        lo = excursion_cf(unit_levels(order, s + 1), s, order)
        hi = excursion_cf(unit_levels(order, s + 2), s + 1, order)
        assert lo.truncate(2 * s + 1) == hi.truncate(2 * s + 1)
        assert lo.coefficient(2 * s + 2) != hi.coefficient(2 * s + 2)


def test_excursion_cf_needs_enough_levels():
    with pytest.raises(ValueError):
        excursion_cf(unit_levels(6, 2), 2, 6)


def test_excursion_cf_rejects_constant_term_weights():
    bad = constant_levels(poly([1, 1], 6), poly([0, 1], 6), zero(6), 2)
    with pytest.raises(ValueError):
        excursion_cf(bad, 1, 6)


def test_excursion_closed_motzkin():
    step = poly([0, 1], 10)
    got = excursion_closed(step, step, step, 8)
    assert ints(got) == [1, 1, 2, 4, 9, 21, 51, 127, 323]


def test_excursion_closed_dyck():
    # no loops: Catalan numbers interleaved with zeros
    step = poly([0, 1], 10)
    got = excursion_closed(step, step, zero(10), 8)
    assert ints(got) == [1, 0, 1, 0, 2, 0, 5, 0, 14]
    assert ints(got) == [unit_paths(n, True, True, with_h=False) for n in range(9)]


def test_excursion_closed_matches_cf():
    for k in (1, 2, 3):
        order = 12
        closed = excursion_closed(
            poly([0, 1], order + 2),
            poly([0, 1], order + 2),
            poly([0, 1], order + 2) / poly([1, -k, -1], order + 2),
            order,
        )
        cf = excursion_cf(kfib_levels(k, order, 8), 7, order)
        assert closed == cf


def test_excursion_closed_functional_equation():
    # fg B^2 - (1-h) B + 1 = 0
    order = 16
    f = poly([0, 1], order + 2)
    g = poly([0, 2], order + 2)
    h = poly([0, 1, 1], order + 2)
    b = excursion_closed(f, g, h, order)
    residual = f * g * b * b - (1 - h) * b + one(order)
    assert residual == zero(order)


def test_grand_excursion_closed_central_trinomial():
    step = poly([0, 1], 8)
    got = grand_excursion_closed(step, step, step, 6)
    assert ints(got) == [1, 1, 3, 7, 19, 51, 141]
    assert ints(got) == [unit_paths(n, False, True) for n in range(7)]


def test_grand_excursion_closed_central_binomial():
    step = poly([0, 1], 8)
    got = grand_excursion_closed(step, step, zero(8), 6)
    assert ints(got) == [1, 0, 2, 0, 6, 0, 20]


def test_grand_excursion_closed_table_row():
    step = poly([0, 1], 6)
    h = poly([0, 1], 6) / poly([1, -1, -1], 6)
    assert ints(grand_excursion_closed(step, step, h, 4)) == [1, 1, 4, 11, 36]


def test_grand_excursion_closed_squared_identity():
    # ((1-h)^2 - 4fg) Bb^2 = 1
    order = 14
    f = poly([0, 1], order)
    g = poly([0, 1, 3], order)
    h = poly([0, 2], order)
    bb = grand_excursion_closed(f, g, h, order)
    rad = (1 - h) * (1 - h) - 4 * (f * g)
    assert rad * bb * bb == one(order)


def test_grand_excursion_cf_matches_closed():
    order = 12
    step = poly([0, 1], order)
    levels = unit_levels(order, 8, two_sided=True)
    cf = grand_excursion_cf(levels, 7, order)
    closed = grand_excursion_closed(step, step, step, order)
    assert cf == closed


def test_grand_excursion_cf_table_row():
    got = grand_excursion_cf(kfib_levels(2, 8, 7, two_sided=True), 6, 8)
    assert ints(got) == [1, 1, 5, 16, 63, 237, 920, 3573, 14005]


def test_grand_excursion_cf_zeroed_mirror_reduces_to_one_sided():
    order = 10
    step = poly([0, 1], order)
    h = poly([0, 1], order)
    levels = constant_levels(step, step, h, 7, zero(order), zero(order), zero(order))
    assert grand_excursion_cf(levels, 6, order) == excursion_cf(levels, 6, order)


def test_meander_closed_motzkin_prefixes():
    step = poly([0, 1], 9)
    got = meander_closed(step, step, step, 8)
    assert ints(got) == [1, 2, 5, 13, 35, 96, 267, 750, 2123]
    assert ints(got) == [unit_paths(n, True, False) for n in range(9)]


def test_meander_closed_dyck_prefixes():
    step = poly([0, 1], 9)
    got = meander_closed(step, step, zero(9), 8)
    assert ints(got) == [unit_paths(n, True, False, with_h=False) for n in range(9)]


def test_meander_closed_table_row():
    step = poly([0, 1], 7)
    h = poly([0, 1], 7) / poly([1, -1, -1], 7)
    assert ints(meander_closed(step, step, h, 6)) == [1, 2, 6, 19, 62, 205, 684]


def test_meander_cf_matches_closed():
    for k in (1, 3):
        order = 12
        closed = meander_closed(
            poly([0, 1], order + 1),
            poly([0, 1], order + 1),
            poly([0, 1], order + 1) / poly([1, -k, -1], order + 1),
            order,
        )
        cf = meander_cf(kfib_levels(k, order, order + 9), 7, order)
        assert cf == closed


def test_meander_cf_depth_stability():
    for s in (1, 2):
        order = 2 * s + 2
        lo = meander_cf(unit_levels(order, order + s + 2), s, order)
        hi = meander_cf(unit_levels(order, order + s + 3), s + 1, order)
        assert lo.truncate(2 * s) == hi.truncate(2 * s)


def test_grand_meander_closed_step_sequences():
    # f = g = z, h = 0: every +-1 step sequence is admissible
    step = poly([0, 1], 6)
    assert ints(grand_meander_closed(step, step, zero(6), 5)) == [1, 2, 4, 8, 16, 32]
    # with unit loops: all three-letter sequences
    assert ints(grand_meander_closed(step, step, step, 5)) == [
        3**n for n in range(6)
    ]


def test_grand_meander_closed_table_row():
    step = poly([0, 1], 6)
    h = poly([0, 1], 6) / poly([1, -1, -1], 6)
    assert ints(grand_meander_closed(step, step, h, 5)) == [1, 3, 10, 35, 124, 441]


def test_grand_meander_cf_matches_closed_symmetric():
    order = 10
    step = poly([0, 1], order)
    levels = unit_levels(order, order + 7, two_sided=True)
    cf = grand_meander_cf(levels, 5, order)
    assert cf == grand_meander_closed(step, step, step, order)
    assert ints(cf) == [unit_paths(n, False, False) for n in range(order + 1)]


def test_grand_meander_cf_asymmetric_against_enumeration():
    # unequal up/down/mirror weights: compare the quotient assembly with a
    # direct weighted enumeration of signed unit-step paths
    order = 8
    up, down, loop = 1, 2, 1  # weights above the axis
    upm, downm, loopm = 3, 1, 2  # weights below the axis (mirror)

    def walk(rem, y):
        if rem == 0:
            return 1
        total = 0
        # up step from level y
        total += (up if y >= 0 else upm) * walk(rem - 1, y + 1)
        # down step from level y
        total += (down if y >= 1 else downm) * walk(rem - 1, y - 1)
        # loop at level y
        total += (loop if y >= 0 else loopm) * walk(rem - 1, y)
        return total

    step = poly([0, 1], order)
    levels = constant_levels(
        up * step, down * step, loop * step, order + 7,
        fp=upm * step, gp=downm * step, hp=loopm * step,
    )
    got = grand_meander_cf(levels, 5, order)
    assert ints(got) == [walk(n, 0) for n in range(order + 1)]
