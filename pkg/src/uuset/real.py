"""The closed set A ⊆ (-1,1)×ω and its staged patches V_0 ⊆ V_1 ⊆ ….

(-1, 0) is tiled by blocks ``(-1/(n+1), -1/(n+2)]`` and (0, 1) by blocks
``[1/(n+2), 1/(n+1))``.  A negative block carries a base strip in row ``2n``
and an affine copy of the unit construction starting at row ``2n+1``; a
positive block carries its strip in row ``2n+1`` and a mirrored copy starting
at row ``2n+2``.  In both cases the copy's ``t = 0`` end sits on the block's
excluded endpoint, so each block loses exactly one section, and those lost
sections are patched back at the blocks' included endpoints.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .intervals import Interval, IntervalSet, RationalLike, format_rational, rational
from .sequences import SeqSpec, spec_last_zero
from .unit import PatchEvent, section_unit, unit_row

AMBIENT = Interval.open(-1, 1)


class Side(enum.Enum):
    NEG = "NEG"
    POS = "POS"


@dataclass(frozen=True)
class Block:
    side: Side
    index: int
    base: Interval
    base_row: int
    copy_row_offset: int
    offset: Fraction
    scale: Fraction

    def embed(self, t: RationalLike) -> Fraction:
        return self.offset + self.scale * rational(t)

    def pull_back(self, p: RationalLike) -> Fraction:
        return (rational(p) - self.offset) / self.scale

    def copy_row(self, j: int, copy_stage: int = 0) -> IntervalSet:
        """Image of unit row ``j`` inside this block's base."""
        return unit_row(j, copy_stage).affine(self.offset, self.scale) & IntervalSet.of(self.base)

    def row(self, r: int, copy_stage: int = 0) -> IntervalSet:
        """This block's whole contribution to row ``r``."""
        out = IntervalSet.of(self.base) if r == self.base_row else IntervalSet()
        if r >= self.copy_row_offset:
            out = out | self.copy_row(r - self.copy_row_offset, copy_stage)
        return out

    def to_json(self) -> dict:
        return {
            "side": self.side.value,
            "index": self.index,
            "base": self.base.to_json(),
            "base_row": self.base_row,
            "copy_row_offset": self.copy_row_offset,
            "map": {"c": format_rational(self.offset), "s": format_rational(self.scale)},
        }


@lru_cache(maxsize=256)
def block(side: Side, n: int) -> Block:
    if n < 0:
        raise ValueError("block index must be non-negative")
    near, far = Fraction(1, n + 1), Fraction(1, n + 2)
    width = Fraction(1, (n + 1) * (n + 2))
    if side is Side.NEG:
        return Block(side, n, Interval(-near, False, -far, True), 2 * n, 2 * n + 1, -near, width)
    return Block(side, n, Interval(far, True, near, False), 2 * n + 1, 2 * n + 2, near, -width)


def _check_ambient(p: Fraction) -> None:
    if p not in AMBIENT:
        raise ValueError(f"point {format_rational(p)} lies outside (-1, 1)")


def block_of_point(p: RationalLike) -> Block | None:
    p = rational(p)
    _check_ambient(p)
    if p == 0:
        return None
    q = 1 / abs(p)
    # n + 1 < q <= n + 2
    n = -(-q.numerator // q.denominator) - 2
    return block(Side.NEG if p < 0 else Side.POS, n)


def blocks_for_row(r: int) -> list[Block]:
    """Every block contributing to row ``r`` (base row or copy rows at most ``r``)."""
    out = [block(Side.NEG, n) for n in range(r // 2 + 1)]
    out += [block(Side.POS, n) for n in range((r + 1) // 2) if 2 * n + 1 <= r]
    return out


@lru_cache(maxsize=512)
def a_row(r: int, copy_stage: int = 0) -> IntervalSet:
    row = IntervalSet()
    for b in blocks_for_row(r):
        row = row | b.row(r, copy_stage)
    return row & IntervalSet.of(AMBIENT)


def _adjoining_part(row: IntervalSet, p: Fraction) -> Interval | None:
    return next((iv for iv in row if p in iv), None)


def gluing_check(n: int, kmax: int, copy_stage: int = 0) -> bool:
    """Half-open pieces of block ``n`` that touch ``∓1/(n+1)`` are completed by block ``n-1``.

    For each row ``2n + k`` (``k <= kmax``; the positive side is shifted by
    one row) every piece of block ``n`` whose open end is the excluded
    endpoint must sit inside a part of the assembled row that contains that
    endpoint and extends past it.  Only blocks ``n-1`` and ``n`` reach that
    endpoint, so the row is assembled from those two alone.
    """
    if n < 1:
        raise ValueError("gluing is only defined for blocks n >= 1")
    for side in Side:
        b, prev = block(side, n), block(side, n - 1)
        edge = b.offset
        for k in range(kmax + 1):
            r = b.base_row + k
            own = b.row(r, copy_stage)
            full = own | prev.row(r, copy_stage)
            for piece in own:
                opens_at_edge = (
                    (piece.lo == edge and not piece.lo_closed)
                    if side is Side.NEG
                    else (piece.hi == edge and not piece.hi_closed)
                )
                if not opens_at_edge:
                    continue
                host = _adjoining_part(full, edge)
                if host is None or not (host.lo < edge < host.hi):
                    return False
    return True


def endpoint(k: int) -> Fraction:
    """``e_{2n} = -1/(n+2)`` and ``e_{2n+1} = 1/(n+2)``; their sections are ``0^k 1^ω``."""
    if k < 0:
        raise ValueError("endpoint index must be non-negative")
    n, odd = divmod(k, 2)
    return Fraction(1 if odd else -1, n + 2)


def missing_real(n: int) -> SeqSpec:
    return SeqSpec("0" * n + "10", "1")


@dataclass(frozen=True)
class RealStep:
    """One step of the real schedule: rows added at a single block endpoint."""

    endpoint_index: int
    point: Fraction
    rows: tuple[int, ...]
    target: SeqSpec
    lost: SeqSpec

    def events(self) -> list[PatchEvent]:
        return [PatchEvent(self.point, r, self.target, self.lost) for r in self.rows]

    def to_json(self) -> dict:
        return {
            "endpoint": self.endpoint_index,
            "point": format_rational(self.point),
            "rows": list(self.rows),
            "target": str(self.target),
            "lost": str(self.lost),
        }


@lru_cache(maxsize=8)
def _real_steps(m: int) -> tuple[RealStep, ...]:
    steps: list[RealStep] = []
    used: set[int] = set()
    pending: deque[int] = deque()  # j for a lost 0^j 1^ω
    fresh = 0
    for step in range(m):
        if step % 2 == 0 or not pending:
            target = missing_real(fresh)
            fresh += 1
            lowest = spec_last_zero(target) + 1
        else:
            j = pending.popleft()
            target = SeqSpec("0" * j, "1")
            lowest = j + 2
        k = lowest
        while k in used:
            k += 1
        assert k >= 2 and k not in used, f"endpoint {k} not available"
        used.add(k)
        rows = tuple(r for r in range(k) if target.bit(r) == 1)
        lost = SeqSpec("0" * k, "1")
        pending.append(k)
        steps.append(RealStep(k, endpoint(k), rows, target, lost))
    return tuple(steps)


def real_steps(m: int) -> list[RealStep]:
    if m < 0:
        raise ValueError("schedule length must be non-negative")
    return list(_real_steps(m))


def real_schedule(m: int) -> list[PatchEvent]:
    """First ``m`` steps of the real schedule, flattened to one event per added row."""
    return [ev for st in real_steps(m) for ev in st.events()]


def section_real(p: RationalLike, depth: int, stage: int = 0, copy_stage: int = 0) -> frozenset[int]:
    p = rational(p)
    _check_ambient(p)
    rows: set[int] = set()
    b = block_of_point(p)
    if b is not None:
        if b.base_row < depth:
            rows.add(b.base_row)
        if depth > b.copy_row_offset:
            t = b.pull_back(p)
            rows.update(b.copy_row_offset + j for j in section_unit(t, depth - b.copy_row_offset, copy_stage))
    for st in real_steps(stage):
        if st.point == p:
            rows.update(r for r in st.rows if r < depth)
    return frozenset(rows)


def transport(p: RationalLike) -> Fraction:
    """Homeomorphism ``(-1, 1) -> R``, ``p -> p / (1 - |p|)``."""
    p = rational(p)
    _check_ambient(p)
    return p / (1 - abs(p))


def transport_inverse(y: RationalLike) -> Fraction:
    y = rational(y)
    return y / (1 + abs(y))
