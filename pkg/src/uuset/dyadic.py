"""Labelled dyadic subdivision of [0, 1].

Every finite binary word ``x`` names a cell ``A_x`` of width ``2**-len(x)``.
Each cell splits at its midpoint into a ``0`` child and a ``1`` child; which
one goes left is decided by the parity of the parent's position on its level:

* even parent: ``x+"1"`` is the left half ``<a, fa, m, closed]`` and ``x+"0"``
  the right half ``(m, open, b, fb>``;
* odd parent (and the root): ``x+"0"`` is the left half ``<a, fa, m, open)``
  and ``x+"1"`` the right half ``[m, closed, b, fb>``.

The midpoint always goes to the ``1`` child, every level is a partition of
[0, 1], and from level 2 on the brackets repeat with period 4 along a level:
``[.,.]``, ``(.,.)``, ``[.,.)``, ``[.,.]``.

Labels are plain bit strings such as ``"0010"``; the root is ``""``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator

from .intervals import Interval, RationalLike, format_rational, rational

Label = str

ROOT: Label = ""


def check_label(x: Label) -> Label:
    if any(c not in "01" for c in x):
        raise ValueError(f"label must be a binary word, got {x!r}")
    return x


@dataclass(frozen=True)
class Cell:
    label: Label
    interval: Interval
    position: int

    @property
    def level(self) -> int:
        return len(self.label)

    @property
    def odd(self) -> bool:
        """Parity used for splitting; the root splits like an odd cell."""
        return self.level == 0 or self.position % 2 == 1

    def child(self, bit: str) -> Cell:
        iv = self.interval
        m = (iv.lo + iv.hi) / 2
        if self.odd:
            left_bit = "0"
            left = Interval(iv.lo, iv.lo_closed, m, False)
            right = Interval(m, True, iv.hi, iv.hi_closed)
        else:
            left_bit = "1"
            left = Interval(iv.lo, iv.lo_closed, m, True)
            right = Interval(m, False, iv.hi, iv.hi_closed)
        if bit == left_bit:
            return Cell(self.label + bit, left, 2 * self.position)
        return Cell(self.label + bit, right, 2 * self.position + 1)

    def children(self) -> tuple[Cell, Cell]:
        return self.child("0"), self.child("1")

    def to_json(self) -> dict:
        return {"label": self.label, "position": self.position, "interval": self.interval.to_json()}


ROOT_CELL = Cell(ROOT, Interval.closed(0, 1), 0)


@lru_cache(maxsize=1 << 16)
def cell(x: Label) -> Cell:
    check_label(x)
    if not x:
        return ROOT_CELL
    return cell(x[:-1]).child(x[-1])


def position(x: Label) -> int:
    return cell(x).position


def closure_interval(x: Label) -> Interval:
    """The closed dyadic interval ``[pos/2**n, (pos+1)/2**n]`` under ``cell(x)``."""
    n = len(check_label(x))
    pos = position(x)
    return Interval.closed(Fraction(pos, 2**n), Fraction(pos + 1, 2**n))


def cells_at_level(n: int) -> Iterator[Cell]:
    """All ``2**n`` cells of level ``n``, left to right."""
    level = [ROOT_CELL]
    for _ in range(n):
        nxt: list[Cell] = []
        for c in level:
            a, b = c.children()
            nxt.extend(sorted((a, b), key=lambda k: k.position))
        level = nxt
    return iter(level)


def code_of_point(p: RationalLike, depth: int) -> Label:
    """The length-``depth`` word whose cell contains ``p``."""
    p = rational(p)
    if not 0 <= p <= 1:
        raise ValueError(f"point {format_rational(p)} lies outside [0, 1]")
    c = ROOT_CELL
    for _ in range(depth):
        zero, one = c.children()
        c = zero if p in zero.interval else one
    return c.label


def next_parity(odd: bool, bit: str) -> tuple[bool, bool]:
    """One subdivision step as a two-state machine.

    Returns ``(goes_right, child_odd)``: a ``1`` keeps the side equal to the
    parent's parity, a ``0`` flips it, and the child's parity is its side.
    """
    right = odd if bit == "1" else not odd
    return right, right
