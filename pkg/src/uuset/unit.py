"""The closed set W ⊆ [0,1]×ω and its staged patches U_0 ⊆ U_1 ⊆ ….

Row ``n`` of W is the union of the closed cells ``A_{x+"1"}`` over all words
``x`` of length ``n``; the section of W at a point is then its code.  Codes
of the form ``u 0 0 1 1 1 …`` have empty cell intersections and are missing;
:func:`unit_schedule` adds them back one point at a time, each addition
trading a fresh target for a lost sequence that is itself re-targeted later.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .dyadic import cells_at_level
from .intervals import Interval, IntervalSet, RationalLike, format_rational, rational
from .sequences import SeqClass, SeqSpec, classify, limit_point, spec_flip, spec_last_zero

UNIT = Interval.closed(0, 1)


@dataclass(frozen=True)
class PatchEvent:
    """One added point ``(point, row)``: the section at ``point`` moves from ``lost`` to ``target``."""

    point: Fraction
    row: int
    target: SeqSpec
    lost: SeqSpec

    def to_json(self) -> dict:
        return {
            "point": format_rational(self.point),
            "row": self.row,
            "target": str(self.target),
            "lost": str(self.lost),
        }

    @classmethod
    def from_json(cls, data: dict) -> PatchEvent:
        return cls(
            rational(data["point"]), int(data["row"]), SeqSpec.parse(data["target"]), SeqSpec.parse(data["lost"])
        )


def row_formula(n: int) -> IntervalSet:
    if n == 0:
        return IntervalSet.of(Interval.closed(Fraction(1, 2), 1))
    d = 2 ** (n + 1)
    parts = [Interval.closed(0, Fraction(1, d)), Interval.closed(Fraction(d - 1, d), 1)]
    parts += [Interval.closed(Fraction(4 * k - 1, d), Fraction(4 * k + 1, d)) for k in range(1, 2 ** (n - 1))]
    return IntervalSet(parts)


_row_formula_cached = lru_cache(maxsize=64)(row_formula)


@lru_cache(maxsize=64)
def row_constructive(n: int) -> IntervalSet:
    return IntervalSet(c.interval.closure() for c in cells_at_level(n + 1) if c.label.endswith("1"))


def row_contains(n: int, p: Fraction) -> bool:
    """Membership ``p ∈ row n`` without materializing the row.

    Level ``n+1`` closures at positions ``≡ 0, 3 (mod 4)`` make up the row
    (for ``n = 0`` only position 1, the cell ``[1/2, 1]``).
    """
    scaled = p * 2 ** (n + 1)
    j = scaled.numerator // scaled.denominator
    last = 2 ** (n + 1) - 1
    candidates = {min(j, last)}
    if scaled.denominator == 1 and j > 0:
        candidates.add(j - 1)
    if n == 0:
        return 1 in candidates
    return any(i % 4 in (0, 3) for i in candidates)


def missing_unit(i: int) -> SeqSpec:
    """The ``i``-th word ``u 0 0 1^ω``, listed by ``len(u)`` and then by ``u`` in binary."""
    length = 0
    while i >= 2**length:
        i -= 2**length
        length += 1
    u = format(i, f"0{length}b") if length else ""
    return SeqSpec(u + "00", "1")


def _patch(target: SeqSpec) -> PatchEvent:
    k = spec_last_zero(target)
    assert k is not None, f"target {target} has no zero to anchor a patch"
    lost = spec_flip(target, k + 2)
    point = limit_point(lost)
    assert point is not None, f"lost sequence {lost} has an empty cell intersection"
    return PatchEvent(point, k + 2, target, lost)


@lru_cache(maxsize=8)
def _schedule(m: int) -> tuple[PatchEvent, ...]:
    events: list[PatchEvent] = []
    pending: deque[SeqSpec] = deque()
    seen: set[SeqSpec] = set()
    points: set[Fraction] = set()
    fresh = 0
    for step in range(m):
        if step % 2 == 0 or not pending:
            target = missing_unit(fresh)
            fresh += 1
        else:
            target = pending.popleft()
        ev = _patch(target)
        assert classify(ev.lost) is not SeqClass.MISSING_UNIT, f"lost {ev.lost} is itself missing"
        assert ev.lost not in seen and ev.lost != ev.target, f"lost {ev.lost} repeats an earlier sequence"
        assert ev.point not in points, f"patch point {ev.point} reused"
        seen.update((ev.target, ev.lost))
        points.add(ev.point)
        pending.append(ev.lost)
        events.append(ev)
    return tuple(events)


def unit_schedule(m: int) -> list[PatchEvent]:
    """First ``m`` patch events, alternating fresh missing targets with the oldest lost one."""
    if m < 0:
        raise ValueError("schedule length must be non-negative")
    return list(_schedule(m))


def unit_row(n: int, stage: int = 0) -> IntervalSet:
    """Row ``n`` of ``U_{stage-1}``: the W row plus the patch points assigned to it."""
    extra = [ev.point for ev in unit_schedule(stage) if ev.row == n]
    return _row_formula_cached(n) | IntervalSet.points(extra)


def section_unit(p: RationalLike, depth: int, stage: int = 0) -> frozenset[int]:
    p = rational(p)
    if not 0 <= p <= 1:
        raise ValueError(f"point {format_rational(p)} lies outside [0, 1]")
    rows = {n for n in range(depth) if row_contains(n, p)}
    rows.update(ev.row for ev in unit_schedule(stage) if ev.point == p and ev.row < depth)
    return frozenset(rows)
