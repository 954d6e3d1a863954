"""Brute-force oracles shared by the test modules.

Nothing here calls the fast paths it is used to check (closed-form row
membership, affine fixed points, the schedule bookkeeping).
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from uuset.dyadic import ROOT_CELL, Cell
from uuset.intervals import Interval, IntervalSet


def chain(bits: str) -> list[Cell]:
    """Cells along ``bits``, root first, built by repeated halving."""
    cells = [ROOT_CELL]
    for b in bits:
        cells.append(cells[-1].child(b))
    return cells


def in_every_cell(p: Fraction, bits: str) -> bool:
    return all(p in c.interval for c in chain(bits))


def nested_empty_all_ones(prefix: str, depth: int = 40) -> bool:
    """Emptiness of ``⋂ cell`` for ``prefix 1^ω`` by exhaustive endpoint testing.

    With an all-ones tail the closures collapse onto one endpoint of the
    depth-``depth`` cell; the full intersection is nonempty iff some endpoint
    of that cell lies in every cell of the chain, including a deeper one.
    """
    word = (prefix + "1" * depth)[:depth]
    deep = (prefix + "1" * (depth + 20))[: depth + 20]
    acc = IntervalSet.of(ROOT_CELL.interval)
    for c in chain(word)[1:]:
        acc = acc & IntervalSet.of(c.interval)
    (iv,) = acc.parts
    return not any(in_every_cell(e, deep) for e in (iv.lo, iv.hi))


def brute_rows_at(p: Fraction, depth: int) -> set[int]:
    """Rows of W containing ``p``, by testing every closed ``x+"1"`` cell."""
    out = set()
    for n in range(depth):
        for bits in itertools.product("01", repeat=n):
            c = chain("".join(bits) + "1")[-1]
            if p in c.interval.closure():
                out.add(n)
                break
    return out


def closure_of_parts(parts: list[Interval]) -> IntervalSet:
    return IntervalSet(iv.closure() for iv in parts)
