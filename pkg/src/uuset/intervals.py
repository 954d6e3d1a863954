"""Exact interval algebra over the rationals.

An :class:`Interval` carries rational endpoints and independent open/closed
flags; a single point is the degenerate closed interval ``[p, p]``.  An
:class:`IntervalSet` is a finite union of intervals kept in canonical form:
parts sorted, pairwise disjoint, and maximally merged.  Two sets are equal as
point-sets exactly when their canonical parts are equal, so ``==`` on
:class:`IntervalSet` is set equality.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Union

RationalLike = Union[Fraction, int, str]

_RATIONAL_RE = re.compile(r"^\s*(-?\d+)(?:\s*/\s*(\d+))?\s*$")


def rational(value: RationalLike) -> Fraction:
    """Coerce ``value`` to a :class:`Fraction`.

    Strings must be integers or ``p/q``; decimals and floats are refused so
    that no binary rounding can sneak into an endpoint.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        m = _RATIONAL_RE.match(value.replace("−", "-"))
        if m is None:
            raise ValueError(f"malformed rational {value!r}")
        den = int(m.group(2)) if m.group(2) is not None else 1
        if den == 0:
            raise ValueError(f"zero denominator in {value!r}")
        return Fraction(int(m.group(1)), den)
    raise TypeError(f"cannot treat {type(value).__name__} as an exact rational")


def format_rational(q: Fraction) -> str:
    """Lowest-terms ``p/q`` text, always with an explicit denominator."""
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def _short(q: Fraction) -> str:
    return str(q)


@dataclass(frozen=True)
class Interval:
    lo: Fraction
    lo_closed: bool
    hi: Fraction
    hi_closed: bool

    def __post_init__(self) -> None:
        object.__setattr__(self, "lo", rational(self.lo))
        object.__setattr__(self, "hi", rational(self.hi))
        if self.lo > self.hi:
            raise ValueError(f"interval with lo {self.lo} > hi {self.hi}")
        if self.lo == self.hi and not (self.lo_closed and self.hi_closed):
            raise ValueError(f"empty degenerate interval at {self.lo}")

    @classmethod
    def closed(cls, lo: RationalLike, hi: RationalLike) -> Interval:
        return cls(rational(lo), True, rational(hi), True)

    @classmethod
    def open(cls, lo: RationalLike, hi: RationalLike) -> Interval:
        return cls(rational(lo), False, rational(hi), False)

    @classmethod
    def point(cls, p: RationalLike) -> Interval:
        p = rational(p)
        return cls(p, True, p, True)

    @property
    def is_point(self) -> bool:
        return self.lo == self.hi

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def __contains__(self, p: object) -> bool:
        if not isinstance(p, (Fraction, int)):
            return False
        if p < self.lo or p > self.hi:
            return False
        if p == self.lo and not self.lo_closed:
            return False
        if p == self.hi and not self.hi_closed:
            return False
        return True

    def closure(self) -> Interval:
        return Interval(self.lo, True, self.hi, True)

    def intersect(self, other: Interval) -> Interval | None:
        if self.lo > other.lo:
            lo, lo_closed = self.lo, self.lo_closed
        elif self.lo < other.lo:
            lo, lo_closed = other.lo, other.lo_closed
        else:
            lo, lo_closed = self.lo, self.lo_closed and other.lo_closed
        if self.hi < other.hi:
            hi, hi_closed = self.hi, self.hi_closed
        elif self.hi > other.hi:
            hi, hi_closed = other.hi, other.hi_closed
        else:
            hi, hi_closed = self.hi, self.hi_closed and other.hi_closed
        if lo < hi or (lo == hi and lo_closed and hi_closed):
            return Interval(lo, lo_closed, hi, hi_closed)
        return None

    def affine(self, offset: Fraction, scale: Fraction) -> Interval:
        """Image under ``t -> offset + scale * t``; negative scales swap ends."""
        if scale == 0:
            raise ValueError("affine image needs a nonzero scale")
        a, b = offset + scale * self.lo, offset + scale * self.hi
        if scale > 0:
            return Interval(a, self.lo_closed, b, self.hi_closed)
        return Interval(b, self.hi_closed, a, self.lo_closed)

    def __str__(self) -> str:
        if self.is_point:
            return "{" + _short(self.lo) + "}"
        left = "[" if self.lo_closed else "("
        right = "]" if self.hi_closed else ")"
        return f"{left}{_short(self.lo)}, {_short(self.hi)}{right}"

    def to_json(self) -> dict:
        return {
            "lo": format_rational(self.lo),
            "lo_closed": self.lo_closed,
            "hi": format_rational(self.hi),
            "hi_closed": self.hi_closed,
        }

    @classmethod
    def from_json(cls, data: dict) -> Interval:
        return cls(
            rational(data["lo"]), bool(data["lo_closed"]), rational(data["hi"]), bool(data["hi_closed"])
        )


def iv_make(lo: RationalLike, lo_closed: bool, hi: RationalLike, hi_closed: bool) -> Interval:
    return Interval(rational(lo), lo_closed, rational(hi), hi_closed)


def _sort_key(iv: Interval) -> tuple:
    # closed lower ends sort first at a shared lo
    return (iv.lo, not iv.lo_closed, iv.hi, iv.hi_closed)


def _touches(a: Interval, b: Interval) -> bool:
    """Whether ``b`` (with ``b.lo >= a.lo``) overlaps or abuts ``a`` without a gap."""
    if b.lo < a.hi:
        return True
    return b.lo == a.hi and (a.hi_closed or b.lo_closed)


def _normalize(parts: Iterable[Interval]) -> tuple[Interval, ...]:
    ordered = sorted(parts, key=_sort_key)
    out: list[Interval] = []
    for iv in ordered:
        if out and _touches(out[-1], iv):
            last = out[-1]
            if iv.hi > last.hi:
                hi, hi_closed = iv.hi, iv.hi_closed
            elif iv.hi < last.hi:
                hi, hi_closed = last.hi, last.hi_closed
            else:
                hi, hi_closed = last.hi, last.hi_closed or iv.hi_closed
            out[-1] = Interval(last.lo, last.lo_closed, hi, hi_closed)
        else:
            out.append(iv)
    return tuple(out)


class IntervalSet:
    """Canonical finite union of intervals and isolated points."""

    __slots__ = ("_parts",)

    def __init__(self, parts: Iterable[Interval] = ()) -> None:
        self._parts = _normalize(parts)

    @classmethod
    def of(cls, *parts: Interval) -> IntervalSet:
        return cls(parts)

    @classmethod
    def points(cls, pts: Iterable[RationalLike]) -> IntervalSet:
        return cls(Interval.point(p) for p in pts)

    @property
    def parts(self) -> tuple[Interval, ...]:
        return self._parts

    def __iter__(self) -> Iterator[Interval]:
        return iter(self._parts)

    def __len__(self) -> int:
        return len(self._parts)

    def __bool__(self) -> bool:
        return bool(self._parts)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntervalSet):
            return NotImplemented
        return self._parts == other._parts

    def __hash__(self) -> int:
        return hash(self._parts)

    def __repr__(self) -> str:
        return f"IntervalSet({self})"

    def __str__(self) -> str:
        if not self._parts:
            return "∅"
        return " ∪ ".join(str(p) for p in self._parts)

    def __contains__(self, p: object) -> bool:
        if not isinstance(p, (Fraction, int)):
            return False
        # binary search on lo; at most two parts can share a boundary value
        lo, hi = 0, len(self._parts)
        while lo < hi:
            mid = (lo + hi) // 2
            if self._parts[mid].lo <= p:
                lo = mid + 1
            else:
                hi = mid
        return any(p in self._parts[i] for i in (lo - 1, lo - 2) if 0 <= i < len(self._parts))

    def __or__(self, other: IntervalSet) -> IntervalSet:
        return IntervalSet(self._parts + other._parts)

    def __and__(self, other: IntervalSet) -> IntervalSet:
        out: list[Interval] = []
        i = j = 0
        a, b = self._parts, other._parts
        while i < len(a) and j < len(b):
            hit = a[i].intersect(b[j])
            if hit is not None:
                out.append(hit)
            # advance whichever part ends first (the closed one outlives an open tie)
            if (a[i].hi, a[i].hi_closed) < (b[j].hi, b[j].hi_closed):
                i += 1
            else:
                j += 1
        return IntervalSet(out)

    def union(self, other: IntervalSet) -> IntervalSet:
        return self | other

    def intersect(self, other: IntervalSet) -> IntervalSet:
        return self & other

    def closure(self) -> IntervalSet:
        return IntervalSet(p.closure() for p in self._parts)

    def issubset(self, other: IntervalSet) -> bool:
        return (self & other) == self

    def affine(self, offset: RationalLike, scale: RationalLike) -> IntervalSet:
        offset, scale = rational(offset), rational(scale)
        return IntervalSet(p.affine(offset, scale) for p in self._parts)

    def is_closed_within(self, ambient: Interval) -> bool:
        """Relative closedness: ``closure(self) & ambient == self``."""
        amb = IntervalSet.of(ambient)
        if not self.issubset(amb):
            raise ValueError(f"{self} is not contained in {ambient}")
        return (self.closure() & amb) == self

    def boundary_points(self) -> list[Fraction]:
        pts: list[Fraction] = []
        for p in self._parts:
            pts.append(p.lo)
            if p.hi != p.lo:
                pts.append(p.hi)
        return pts

    def to_json(self) -> list[dict]:
        return [p.to_json() for p in self._parts]

    @classmethod
    def from_json(cls, data: list[dict]) -> IntervalSet:
        return cls(Interval.from_json(d) for d in data)


EMPTY = IntervalSet()


def is_union(a: IntervalSet, b: IntervalSet) -> IntervalSet:
    return a | b


def is_intersect(a: IntervalSet, b: IntervalSet) -> IntervalSet:
    return a & b


def is_contains(s: IntervalSet, p: RationalLike) -> bool:
    return rational(p) in s


def is_closure(s: IntervalSet) -> IntervalSet:
    return s.closure()


def is_closed_within(s: IntervalSet, ambient: Interval) -> bool:
    return s.is_closed_within(ambient)


_PART_RE = re.compile(r"\s*([\[(])\s*([^,\])]+?)\s*,\s*([^,\])]+?)\s*([\])])\s*|\s*\{\s*([^}]+?)\s*\}\s*")


def parse_interval_set(text: str) -> IntervalSet:
    """Parse ``"[0,1/8] U (3/8,1/2) U {5/8}"``; ``"∅"`` or ``""`` is empty.

    Either ``U`` or ``∪`` separates parts.
    """
    text = text.strip().replace("−", "-")
    if text in ("", "∅", "{}"):
        return EMPTY
    parts: list[Interval] = []
    for chunk in re.split(r"∪|\bU\b", text):
        m = _PART_RE.fullmatch(chunk)
        if m is None:
            raise ValueError(f"malformed interval {chunk.strip()!r}")
        if m.group(5) is not None:
            parts.append(Interval.point(rational(m.group(5))))
        else:
            parts.append(
                Interval(rational(m.group(2)), m.group(1) == "[", rational(m.group(3)), m.group(4) == "]")
            )
    return IntervalSet(parts)
