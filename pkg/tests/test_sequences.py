import itertools
from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import chain, in_every_cell, nested_empty_all_ones
from uuset.dyadic import code_of_point
from uuset.sequences import (
    InfiniteZeros,
    SeqClass,
    SeqSpec,
    classify,
    limit_point,
    period_map,
    spec_bit,
    spec_equal,
    spec_flip,
    spec_last_zero,
)
from uuset.unit import section_unit

P = SeqSpec.parse


def test_spec_bit():
    assert spec_bit(P("10;1"), 3) == 1
    assert spec_bit(P(";0"), 7) == 0
    assert spec_bit(P("0010;1"), 3) == 0


def test_canonical_form():
    assert P("1;01") == P("10;10")
    assert str(P("1;01")) == ";10"
    assert str(P("0011;11")) == "00;1"
    assert str(P(";0101")) == ";01"
    with pytest.raises(ValueError):
        P("01")
    with pytest.raises(ValueError):
        P("2;1")


def test_spec_equal():
    assert spec_equal(SeqSpec("1", "01"), SeqSpec("10", "10"))
    assert not spec_equal(P("00;1"), P("0;1"))
    assert not spec_equal(P("0010;1"), P("00;1"))


def _raw(text):
    # bypass canonicalization to exercise spec_equal on raw presentations
    s = SeqSpec("", "0")
    prefix, tail = text.split(";")
    object.__setattr__(s, "prefix", prefix)
    object.__setattr__(s, "tail", tail)
    return s


@given(st.text("01", max_size=5), st.text("01", min_size=1, max_size=4), st.text("01", max_size=5), st.text("01", min_size=1, max_size=4))
def test_canonical_equality_matches_symbolwise(p1, t1, p2, t2):
    a, b = _raw(f"{p1};{t1}"), _raw(f"{p2};{t2}")
    assert spec_equal(a, b) == (SeqSpec(p1, t1) == SeqSpec(p2, t2))
    assert SeqSpec(p1, t1).word(20) == a.word(20)


def test_spec_flip():
    assert spec_flip(P("00;1"), 3) == P("0010;1")
    assert spec_flip(P("0010;1"), 5) == P("001010;1")
    assert spec_flip(P(";0"), 0) == P("1;0")
    assert spec_flip(P(";01"), 6) == SeqSpec("0101011", "10")


@given(st.text("01", max_size=6), st.text("01", min_size=1, max_size=3), st.integers(0, 15))
def test_flip_changes_exactly_one_bit(prefix, tail, n):
    s = SeqSpec(prefix, tail)
    f = spec_flip(s, n)
    diff = [i for i in range(30) if s.bit(i) != f.bit(i)]
    assert diff == [n]


def test_last_zero():
    assert spec_last_zero(P("10;1")) == 1
    assert spec_last_zero(P(";1")) is None
    with pytest.raises(InfiniteZeros):
        spec_last_zero(P(";01"))


@pytest.mark.parametrize(
    "spec, cls",
    [
        ("00;1", SeqClass.MISSING_UNIT),
        ("10;1", SeqClass.REALIZED_ENDPOINT),
        (";01", SeqClass.INFINITELY_MANY_ZEROS),
        (";1", SeqClass.REALIZED_ENDPOINT),
        ("0;1", SeqClass.REALIZED_ENDPOINT),
        ("11000;1", SeqClass.MISSING_UNIT),
    ],
)
def test_classify(spec, cls):
    assert classify(P(spec)) is cls


@pytest.mark.parametrize(
    "spec, point",
    [(";0", F(1, 3)), ("00;1", None), ("10;1", F(1, 2)), ("0010;1", F(3, 8)), (";1", F(1)), ("0;1", F(0))],
)
def test_limit_point_examples(spec, point):
    s = P(spec)
    assert limit_point(s) == point
    if point is not None:
        # oracle: the point sits in 64 nested cells, whose widths reach 2**-64
        assert in_every_cell(point, s.word(64))
    else:
        assert nested_empty_all_ones(s.prefix)


def test_one_third_has_empty_section():
    assert section_unit(F(1, 3), 12) == frozenset()


def all_specs(max_prefix, max_tail):
    for n in range(max_prefix + 1):
        for p in itertools.product("01", repeat=n):
            for m in range(1, max_tail + 1):
                for t in itertools.product("01", repeat=m):
                    yield SeqSpec("".join(p), "".join(t))


def test_limit_points_against_nested_cells():
    for s in set(all_specs(4, 3)):
        p = limit_point(s)
        if p is None:
            continue
        assert in_every_cell(p, s.word(48)), s
        deep = chain(s.word(48))[-1].interval.closure()
        assert p in deep


def test_fixed_point_and_injectivity():
    seen = {}
    for s in set(all_specs(5, 4)):
        p = limit_point(s)
        if p is None:
            continue
        off, sc = period_map(s)
        assert off + sc * p == p
        assert seen.setdefault(p, s) == s, (s, seen[p])


def test_emptiness_matches_brute_force_and_class():
    for n in range(0, 7):
        for bits in itertools.product("01", repeat=n):
            s = SeqSpec("".join(bits), "1")
            empty = limit_point(s) is None
            assert empty == nested_empty_all_ones("".join(bits)), s
            assert empty == (classify(s) is SeqClass.MISSING_UNIT), s


@given(st.text("01", max_size=6), st.text("01", min_size=1, max_size=4))
def test_round_trip(prefix, tail):
    s = SeqSpec(prefix, tail)
    p = limit_point(s)
    if p is not None:
        assert code_of_point(p, 14) == s.word(14)


def test_serialization():
    assert str(P("0010;1")) == "0010;1"
    assert str(P(";0")) == ";0"
    with pytest.raises(ValueError):
        P("00 1")
