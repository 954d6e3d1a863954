"""Eventually periodic binary sequences and their coding points.

A :class:`SeqSpec` is ``prefix`` followed by ``tail`` repeated forever, stored
in canonical form (primitive tail, shortest prefix) so that dataclass
equality coincides with equality of the infinite words.

:func:`limit_point` computes the point ``a`` with ``{a} = ⋂ cell(s|n)``
exactly, or ``None`` when the nested cells have empty intersection.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from . import dyadic
from .dyadic import Cell, ROOT_CELL

_SPEC_RE = re.compile(r"^([01]*);([01]+)$")


def _primitive_root(w: str) -> str:
    n = len(w)
    for d in range(1, n + 1):
        if n % d == 0 and w[:d] * (n // d) == w:
            return w[:d]
    return w


@dataclass(frozen=True)
class SeqSpec:
    prefix: str
    tail: str

    def __post_init__(self) -> None:
        if any(c not in "01" for c in self.prefix + self.tail):
            raise ValueError(f"non-binary sequence spec {self.prefix!r};{self.tail!r}")
        if not self.tail:
            raise ValueError("tail must be a nonempty word")
        prefix, tail = self.prefix, _primitive_root(self.tail)
        # roll the tail backwards over matching prefix symbols
        while prefix and prefix[-1] == tail[-1]:
            prefix = prefix[:-1]
            tail = tail[-1] + tail[:-1]
        object.__setattr__(self, "prefix", prefix)
        object.__setattr__(self, "tail", tail)

    @classmethod
    def parse(cls, text: str) -> SeqSpec:
        m = _SPEC_RE.match(text.strip())
        if m is None:
            raise ValueError(f"malformed sequence spec {text!r}; expected 'prefix;tail'")
        return cls(m.group(1), m.group(2))

    @property
    def period(self) -> int:
        return len(self.tail)

    def bit(self, n: int) -> int:
        if n < 0:
            raise IndexError(n)
        if n < len(self.prefix):
            return int(self.prefix[n])
        return int(self.tail[(n - len(self.prefix)) % len(self.tail)])

    def word(self, n: int) -> str:
        """The first ``n`` symbols."""
        return "".join(str(self.bit(i)) for i in range(n))

    def __str__(self) -> str:
        return f"{self.prefix};{self.tail}"


def spec_bit(s: SeqSpec, n: int) -> int:
    return s.bit(n)


def spec_equal(a: SeqSpec, b: SeqSpec) -> bool:
    """Compare symbol by symbol over a window that decides equality."""
    horizon = max(len(a.prefix), len(b.prefix)) + lcm(a.period, b.period)
    return a.word(horizon) == b.word(horizon)


def spec_flip(s: SeqSpec, n: int) -> SeqSpec:
    head = s.word(max(n + 1, len(s.prefix)))
    flipped = head[:n] + ("1" if head[n] == "0" else "0") + head[n + 1 :]
    # re-anchor the tail at the end of the extended head
    shift = (len(head) - len(s.prefix)) % s.period
    return SeqSpec(flipped, s.tail[shift:] + s.tail[:shift])


class InfiniteZeros(ValueError):
    """The sequence has zeros in its periodic tail, so no last zero exists."""


def spec_last_zero(s: SeqSpec) -> int | None:
    if "0" in s.tail:
        raise InfiniteZeros(str(s))
    k = s.prefix.rfind("0")
    return None if k < 0 else k


class SeqClass(enum.Enum):
    INFINITELY_MANY_ZEROS = "infinitely_many_zeros"
    REALIZED_ENDPOINT = "realized_endpoint"
    MISSING_UNIT = "missing_unit"


def classify(s: SeqSpec) -> SeqClass:
    try:
        k = spec_last_zero(s)
    except InfiniteZeros:
        return SeqClass.INFINITELY_MANY_ZEROS
    if k is not None and k >= 1 and s.bit(k - 1) == 0:
        return SeqClass.MISSING_UNIT
    return SeqClass.REALIZED_ENDPOINT


def walk(word: str, start: Cell = ROOT_CELL) -> Cell:
    c = start
    for b in word:
        c = c.child(b)
    return c


def _cycle(s: SeqSpec, odd: bool) -> tuple[str, int]:
    """Digits (left=0 / right=1) of one full cycle of the tail from parity ``odd``.

    A tail with an odd number of zeros flips the parity once per pass, so the
    walk only repeats after two passes.
    """
    sides = []
    state = odd
    reps = 1 if s.tail.count("0") % 2 == 0 else 2
    for b in s.tail * reps:
        right, state = dyadic.next_parity(state, b)
        sides.append("1" if right else "0")
    return "".join(sides), len(s.tail) * reps


def period_map(s: SeqSpec) -> tuple[Fraction, Fraction]:
    """The affine contraction ``x -> offset + scale*x`` for one tail cycle.

    It carries the cell reached after the prefix onto the cell reached one
    cycle later; the coding point is its fixed point.
    """
    c = walk(s.prefix)
    digits, length = _cycle(s, c.odd)
    width = c.interval.width
    scale = Fraction(1, 2**length)
    # local coordinate u -> (D + u)/2**L, expressed in global coordinates
    d = Fraction(int(digits, 2), 2**length)
    offset = c.interval.lo + width * d - scale * c.interval.lo
    return offset, scale


def limit_point(s: SeqSpec) -> Fraction | None:
    """The unique point of ``⋂_n cell(s|n)``, or ``None`` if that set is empty."""
    offset, scale = period_map(s)
    p = offset / (1 - scale)
    # the closures shrink to p; p survives only if every cell keeps it
    c = ROOT_CELL
    if p not in c.interval:
        return None
    for i in range(len(s.prefix) + 3 * _cycle(s, True)[1]):
        c = c.child(str(s.bit(i)))
        if p not in c.interval:
            return None
    return p
