import itertools
from fractions import Fraction as F

import pytest

from uuset.intervals import Interval, IntervalSet, parse_interval_set
from uuset.real import (
    AMBIENT,
    Side,
    a_row,
    block,
    block_of_point,
    endpoint,
    gluing_check,
    missing_real,
    real_schedule,
    real_steps,
    section_real,
    transport,
    transport_inverse,
)
from uuset.sequences import SeqSpec
from uuset.unit import section_unit
from uuset.verify import check_missing_family, real_witness

P = SeqSpec.parse


def test_block_examples():
    b = block(Side.NEG, 0)
    assert b.base == Interval(F(-1), False, F(-1, 2), True)
    assert (b.base_row, b.copy_row_offset, b.offset, b.scale) == (0, 1, -1, F(1, 2))
    b = block(Side.POS, 0)
    assert b.base == Interval(F(1, 2), True, F(1), False)
    assert (b.base_row, b.copy_row_offset, b.offset, b.scale) == (1, 2, 1, F(-1, 2))
    b = block(Side.NEG, 1)
    assert b.base == Interval(F(-1, 2), False, F(-1, 3), True)
    assert (b.base_row, b.copy_row_offset) == (2, 3)


def test_block_map_covers_closure_of_base():
    for side in Side:
        for n in range(8):
            b = block(side, n)
            image = IntervalSet.of(Interval.closed(0, 1)).affine(b.offset, b.scale)
            assert image == IntervalSet.of(b.base.closure())
            assert b.embed(0) not in b.base and b.embed(1) in b.base


@pytest.mark.parametrize("p, side, n", [(F(-1, 3), Side.NEG, 1), (F(1, 3), Side.POS, 1), (F(-9, 10), Side.NEG, 0), (F(1, 2), Side.POS, 0)])
def test_block_of_point(p, side, n):
    assert block_of_point(p) == block(side, n)


def test_block_of_point_zero_and_range():
    assert block_of_point(0) is None
    for bad in (F(-1), F(1), F(3, 2)):
        with pytest.raises(ValueError):
            block_of_point(bad)


def test_tiling():
    neg = IntervalSet(block(Side.NEG, n).base for n in range(12))
    pos = IntervalSet(block(Side.POS, n).base for n in range(12))
    assert neg == IntervalSet.of(Interval(F(-1), False, F(-1, 13), True))
    assert pos == IntervalSet.of(Interval(F(1, 13), True, F(1), False))
    bases = [block(s, n).base for s in Side for n in range(12)]
    for a, b in itertools.combinations(bases, 2):
        assert a.intersect(b) is None


@pytest.mark.parametrize(
    "r, row",
    [
        (0, "(-1,-1/2]"),
        (1, "[-3/4,-1/2] U [1/2,1)"),
        (2, "(-1,-7/8] U [-5/8,-1/3] U [1/2,3/4]"),
    ],
)
def test_a_row_examples(r, row):
    assert a_row(r) == parse_interval_set(row)


@pytest.mark.parametrize("n", range(7))
def test_copy_offset_row_piece(n):
    piece = block(Side.NEG, n).row(2 * n + 1)
    assert piece == IntervalSet.of(Interval.closed(F(-(2 * n + 3), 2 * (n + 1) * (n + 2)), F(-1, n + 2)))


@pytest.mark.parametrize("copy_stage", [0, 5])
def test_rows_relatively_closed(copy_stage):
    for r in range(11):
        assert a_row(r, copy_stage).is_closed_within(AMBIENT)
        extra = IntervalSet.points(e.point for e in real_schedule(10) if e.row == r)
        assert (a_row(r, copy_stage) | extra).is_closed_within(AMBIENT)


def test_gluing():
    assert gluing_check(1, 4) and gluing_check(3, 6) and gluing_check(1, 0)
    assert all(gluing_check(n, 8) for n in range(1, 7))
    # the half-open base strip of NEG-1 is glued at -1/2 by the closed piece of NEG-0
    assert F(-1, 2) in a_row(2)
    assert not IntervalSet.of(block(Side.NEG, 1).base).is_closed_within(AMBIENT)


def test_endpoints():
    assert [endpoint(k) for k in range(6)] == [F(-1, 2), F(1, 2), F(-1, 3), F(1, 3), F(-1, 4), F(1, 4)]
    for k in range(9):
        assert section_real(endpoint(k), 12) == set(range(k, 12))


def test_missing_real():
    assert missing_real(0) == P("10;1")
    assert missing_real(1) == P("010;1")
    assert missing_real(2) == P("0010;1")


def test_missing_real_never_realized():
    assert check_missing_family() is None


def test_missing_real_needs_enough_depth():
    # a depth-10 truncation cannot separate 511/512 from missing_real(1)
    assert section_real(F(511, 512), 10) == {1, 3, 4, 5, 6, 7, 8, 9}
    assert 10 not in section_real(F(511, 512), 11)


def test_schedule_first_steps():
    steps = real_steps(3)
    assert [(s.point, s.rows) for s in steps] == [(F(-1, 3), (0,)), (F(-1, 4), (2, 3)), (F(1, 3), (1,))]
    assert [str(s.target) for s in steps] == ["10;1", "00;1", "010;1"]
    assert [str(s.lost) for s in steps] == ["00;1", "0000;1", "000;1"]
    assert [(e.point, e.row) for e in real_schedule(3)] == [(F(-1, 3), 0), (F(-1, 4), 2), (F(-1, 4), 3), (F(1, 3), 1)]


@pytest.mark.parametrize(
    "p, depth, stage, rows",
    [(F(-1, 3), 5, 0, {2, 3, 4}), (F(-1, 3), 5, 1, {0, 2, 3, 4}), (0, 8, 0, set())],
)
def test_section_examples(p, depth, stage, rows):
    assert section_real(p, depth, stage) == rows


def bits(rows, depth):
    return "".join("1" if n in rows else "0" for n in range(depth))


def test_patch_soundness():
    steps = real_steps(20)
    assert len({s.endpoint_index for s in steps}) == 20
    assert min(s.endpoint_index for s in steps) >= 2
    assert len({s.target for s in steps}) == 20
    for m, st in enumerate(steps):
        d = st.endpoint_index + 3
        assert bits(section_real(st.point, d, m), d) == st.lost.word(d)
        assert bits(section_real(st.point, d, m + 1), d) == st.target.word(d)
        if 2 * m + 1 < len(steps):
            assert steps[2 * m + 1].target == st.lost


def test_sections_agree_with_rows():
    pts = [F(i, 96) for i in range(-95, 96)] + [endpoint(k) for k in range(10)]
    for c in (0, 3):
        for p in pts:
            assert section_real(p, 9, 0, c) == {r for r in range(9) if p in a_row(r, c)}


def test_section_is_block_prefix_plus_unit_code():
    b = block(Side.POS, 2)
    t = F(5, 13)
    assert section_real(b.embed(t), 12) == {5} | {6 + j for j in section_unit(t, 6)}


def test_coverage_of_words():
    for w in map("".join, itertools.product("01", repeat=7)):
        p = real_witness(w)
        assert bits(section_real(p, 7, 3), 7) == w
    assert section_real(0, 20) == set()


@pytest.mark.parametrize("p, y", [(0, 0), (F(1, 2), 1), (F(-2, 3), -2)])
def test_transport(p, y):
    assert transport(p) == y
    assert transport_inverse(y) == p


def test_transport_monotone_bijective():
    grid = [F(2 * i - 1000, 1001) for i in range(1001)]
    images = [transport(p) for p in grid]
    assert all(a < b for a, b in zip(images, images[1:]))
    assert all(transport(transport_inverse(y)) == y for y in images)
    with pytest.raises(ValueError):
        transport(1)
