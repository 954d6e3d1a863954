"""Finite-stage verification suites for both constructions.

Each check returns ``None`` on success or an exact witness string describing
the first counterexample.  :func:`run_verify` assembles a
:class:`VerifyReport`; parameters that would make a check exponential are
clamped and the effective values are recorded with the check.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Iterator

from . import dyadic, real, unit
from .intervals import Interval, IntervalSet, format_rational
from .sequences import SeqClass, SeqSpec, _primitive_root, classify, limit_point, period_map, spec_equal, spec_flip

Witness = str | None

LEVEL_CAP = 12
SEED = 20121


@dataclass
class Check:
    name: str
    params: dict
    passed: bool
    witness: Witness = None

    def to_json(self) -> dict:
        out = {"name": self.name, "params": self.params, "passed": self.passed}
        if self.witness is not None:
            out["witness"] = self.witness
        return out


@dataclass
class VerifyReport:
    space: str
    depth: int
    stage: int
    copy_stage: int
    checks: list[Check] = field(default_factory=list)

    @property
    def overall(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json(self) -> dict:
        return {
            "space": self.space,
            "depth": self.depth,
            "stage": self.stage,
            "copy_stage": self.copy_stage,
            "overall": "pass" if self.overall else "fail",
            "checks": [c.to_json() for c in self.checks],
        }

    def to_text(self) -> str:
        lines = []
        for c in self.checks:
            params = " ".join(f"{k}={v}" for k, v in c.params.items())
            line = f"{'PASS' if c.passed else 'FAIL'}  {c.name}  {params}".rstrip()
            if c.witness is not None:
                line += f"  witness: {c.witness}"
            lines.append(line)
        lines.append(f"overall: {'pass' if self.overall else 'fail'} ({len(self.checks)} checks)")
        return "\n".join(lines)


def _first(failures: Iterable[Witness]) -> Witness:
    return next((w for w in failures if w is not None), None)


def _fmt_rows(rows: Iterable[int]) -> str:
    return "{" + ",".join(str(r) for r in sorted(rows)) + "}"


def _bits(rows: Iterable[int], depth: int) -> str:
    s = set(rows)
    return "".join("1" if n in s else "0" for n in range(depth))


# ---------------------------------------------------------------- interval algebra


def random_set(rng: random.Random, lo: int = 0, hi: int = 8, den: int = 8, max_parts: int = 3) -> IntervalSet:
    parts = []
    for _ in range(rng.randint(0, max_parts)):
        a, b = sorted(rng.randint(lo, hi) for _ in range(2))
        if a == b:
            parts.append(Interval.point(Fraction(a, den)))
        else:
            parts.append(Interval(Fraction(a, den), rng.random() < 0.5, Fraction(b, den), rng.random() < 0.5))
    return IntervalSet(parts)


def probe_points(*sets: IntervalSet) -> list[Fraction]:
    """Every endpoint plus a midpoint in each gap between consecutive endpoints."""
    ends = sorted({q for s in sets for q in s.boundary_points()})
    if not ends:
        return [Fraction(0)]
    mids = [(a + b) / 2 for a, b in zip(ends, ends[1:])]
    return sorted(set(ends + mids + [ends[0] - 1, ends[-1] + 1]))


def same_points(a: IntervalSet, b: IntervalSet) -> bool:
    return all((p in a) == (p in b) for p in probe_points(a, b))


def check_canonical(samples: int = 200) -> Witness:
    rng = random.Random(SEED)
    for _ in range(samples):
        a, b = random_set(rng), random_set(rng)
        if IntervalSet(a.parts) != a:
            return f"normalize not idempotent on {a}"
        if (a == b) != same_points(a, b):
            return f"equality disagrees with membership on {a} vs {b}"
    return None


def check_algebra_laws(samples: int = 200) -> Witness:
    rng = random.Random(SEED + 1)
    for _ in range(samples):
        a, b, c = (random_set(rng) for _ in range(3))
        if a | b != b | a or a & b != b & a:
            return f"commutativity fails on {a}, {b}"
        if (a | b) | c != a | (b | c) or (a & b) & c != a & (b & c):
            return f"associativity fails on {a}, {b}, {c}"
        if a & (b | c) != (a & b) | (a & c):
            return f"distributivity fails on {a}, {b}, {c}"
        if not same_points(a | b, a | b) or not all(
            (p in a | b) == (p in a or p in b) and (p in a & b) == (p in a and p in b) for p in probe_points(a, b)
        ):
            return f"union/intersection membership wrong on {a}, {b}"
        if a.closure().closure() != a.closure():
            return f"closure not idempotent on {a}"
        if (a | b).closure() != a.closure() | b.closure():
            return f"closure not additive on {a}, {b}"
        if not (a & b).closure().issubset(a.closure()):
            return f"closure not monotone on {a & b} within {a}"
    return None


def is_limit_of(s: IntervalSet, p: Fraction) -> bool:
    """Whether some part of ``s`` has ``p`` as an endpoint of positive length."""
    return any(not iv.is_point and p in (iv.lo, iv.hi) for iv in s)


def check_closed_within_rule(samples: int = 200) -> Witness:
    rng = random.Random(SEED + 2)
    ambient = Interval(Fraction(0), False, Fraction(1), True)
    for _ in range(samples):
        s = random_set(rng) & IntervalSet.of(ambient)
        rule = all(p in s for p in s.boundary_points() if p in ambient and is_limit_of(s, p))
        if s.is_closed_within(ambient) != rule:
            return f"closed_within disagrees with endpoint rule on {s}"
    return None


# ---------------------------------------------------------------- dyadic scheme


def check_partition(levels: int) -> Witness:
    whole = IntervalSet.of(Interval.closed(0, 1))
    for n in range(levels + 1):
        cells = sorted(dyadic.cells_at_level(n), key=lambda c: c.interval.lo)
        for a, b in zip(cells, cells[1:]):
            if a.interval.intersect(b.interval) is not None:
                return f"level {n}: {a.label} and {b.label} overlap"
        if IntervalSet(c.interval for c in cells) != whole:
            return f"level {n}: cells do not cover [0,1]"
    return None


def words(max_len: int, min_len: int = 0) -> Iterator[str]:
    for n in range(min_len, max_len + 1):
        for bits in itertools.product("01", repeat=n):
            yield "".join(bits)


def check_siblings(max_len: int) -> Witness:
    for w in words(max_len):
        if dyadic.cell(w + "0").interval.intersect(dyadic.cell(w + "1").interval) is not None:
            return f"cells {w}0 and {w}1 intersect"
    return None


def check_nesting(max_len: int) -> Witness:
    for w in words(max_len):
        parent = IntervalSet.of(dyadic.cell(w).interval)
        kids = [IntervalSet.of(dyadic.cell(w + b).interval) for b in "01"]
        if kids[0] | kids[1] != parent or not all(k.issubset(parent) for k in kids):
            return f"children of {w!r} do not split it exactly"
        iv = dyadic.cell(w).interval
        if iv.width != Fraction(1, 2 ** len(w)):
            return f"cell {w!r} has width {iv.width}"
        m = (iv.lo + iv.hi) / 2
        if m not in dyadic.cell(w + "1").interval or m in dyadic.cell(w + "0").interval:
            return f"midpoint {m} of {w!r} not in the 1-child only"
        c = dyadic.cell(w)
        if iv.lo != Fraction(c.position, 2 ** len(w)) or dyadic.closure_interval(w) != iv.closure():
            return f"cell {w!r} misplaced or closure mismatch"
    return None


# flag on the side facing the sibling, by position mod 4; the outer flag is inherited
_INNER_FLAG = {0: ("hi", True), 1: ("lo", False), 2: ("hi", False), 3: ("lo", True)}


def check_bracket_pattern(levels: int) -> Witness:
    for n in range(2, levels + 1):
        for c in dyadic.cells_at_level(n):
            j = c.position % 4
            side, closed = _INNER_FLAG[j]
            flag = c.interval.hi_closed if side == "hi" else c.interval.lo_closed
            if flag != closed:
                return f"cell {c.label} at position {c.position} has brackets {c.interval}"
            if (j in (0, 3)) != c.label.endswith("1"):
                return f"cell {c.label} at position {c.position} breaks the label rule"
    return None


# ---------------------------------------------------------------- sequence codes


def primitive_tails(max_len: int) -> list[str]:
    return [t for t in words(max_len, 1) if _primitive_root(t) == t]


def _raw_specs(max_prefix: int, tails: list[str]) -> Iterator[SeqSpec]:
    for p in words(max_prefix):
        for t in tails:
            yield SeqSpec(p, t)


def check_round_trip(max_prefix: int, max_tail: int, depth: int) -> Witness:
    for s in set(_raw_specs(max_prefix, primitive_tails(max_tail))):
        p = limit_point(s)
        if p is None:
            continue
        code = dyadic.code_of_point(p, depth)
        if code != s.word(depth):
            return f"spec {s}: code of {format_rational(p)} is {code}, expected {s.word(depth)}"
    return None


def nested_intersection_empty(s: SeqSpec, depth: int = 40) -> bool:
    """Brute-force emptiness of ``⋂ cell(s|n)`` for an all-ones tail.

    Intersects the cells as interval sets up to ``depth``; the closures then
    shrink towards the endpoint that consecutive stages share, and the full
    intersection is nonempty iff that endpoint is still a member.
    """
    acc = IntervalSet.of(dyadic.ROOT_CELL.interval)
    history = []
    for n in range(1, depth + 1):
        acc = acc & IntervalSet.of(dyadic.cell(s.word(n)).interval)
        history.append(acc)
    a, b = history[-2].parts[0], history[-1].parts[0]
    anchor = b.lo if a.lo == b.lo else b.hi
    assert anchor in (a.lo, a.hi), f"stages do not share an endpoint for {s}"
    return anchor not in history[-1]


def all_ones_specs(max_prefix: int, min_prefix: int = 1) -> list[SeqSpec]:
    return [SeqSpec(p, "1") for p in words(max_prefix, min_prefix)]


def check_emptiness(max_prefix: int) -> Witness:
    for s in all_ones_specs(max_prefix):
        empty = limit_point(s) is None
        if empty != nested_intersection_empty(s):
            return f"spec {s}: limit emptiness {empty} disagrees with nested intersection"
        if empty != (classify(s) is SeqClass.MISSING_UNIT):
            return f"spec {s}: emptiness {empty} disagrees with class {classify(s).name}"
    return None


def check_injective_and_fixed(max_prefix: int, max_tail: int) -> Witness:
    seen: dict[Fraction, SeqSpec] = {}
    for s in set(_raw_specs(max_prefix, primitive_tails(max_tail))):
        p = limit_point(s)
        if p is None:
            continue
        if p in seen and not spec_equal(seen[p], s):
            return f"specs {seen[p]} and {s} share limit {format_rational(p)}"
        seen[p] = s
        off, sc = period_map(s)
        if off + sc * p != p:
            return f"spec {s}: {format_rational(p)} is not fixed by its cycle map"
    return None


# ---------------------------------------------------------------- unit construction


def check_property3(n_max: int) -> Witness:
    return _first(
        f"row {n}: constructive {unit.row_constructive(n)} != formula {unit.row_formula(n)}"
        for n in range(n_max + 1)
        if unit.row_constructive(n) != unit.row_formula(n)
    )


def dyadics(level: int) -> list[Fraction]:
    return [Fraction(i, 2**level) for i in range(2**level + 1)]


def check_code_section(level: int) -> Witness:
    for p in dyadics(level):
        sec = unit.section_unit(p, level)
        code = dyadic.code_of_point(p, level + 1)
        if _bits(sec, level) != code[:level]:
            return f"p={format_rational(p)}: section {_fmt_rows(sec)} vs code {code}"
        row_sec = {n for n in range(level) if p in unit.row_constructive(n)}
        if row_sec != sec:
            return f"p={format_rational(p)}: fast membership {_fmt_rows(sec)} vs rows {_fmt_rows(row_sec)}"
    return None


def check_unit_uniqueness(level: int) -> Witness:
    pts = dyadics(level)
    secs = [unit.section_unit(p, level) for p in pts]
    gap = Fraction(1, 2 ** (level - 2))
    for i, j in itertools.combinations(range(len(pts)), 2):
        if secs[i] == secs[j] and abs(pts[i] - pts[j]) >= gap:
            return f"p={format_rational(pts[i])} and q={format_rational(pts[j])} share section {_fmt_rows(secs[i])}"
    return None


def check_unit_patches(stage: int) -> Witness:
    events = unit.unit_schedule(stage)
    for m, ev in enumerate(events):
        if limit_point(ev.lost) != ev.point:
            return f"event {m}: limit of lost {ev.lost} is not {format_rational(ev.point)}"
        if ev.lost.bit(ev.row) != 0 or spec_flip(ev.lost, ev.row) != ev.target:
            return f"event {m}: target {ev.target} is not lost {ev.lost} with row {ev.row} set"
        horizon = len(ev.lost.prefix) + 2 * ev.lost.period + 4
        before = _bits(unit.section_unit(ev.point, horizon, m), horizon)
        after = _bits(unit.section_unit(ev.point, horizon, m + 1), horizon)
        if before != ev.lost.word(horizon) or after != ev.target.word(horizon):
            return f"event {m} at {format_rational(ev.point)}: {before}->{after}, expected {ev.lost}->{ev.target}"
    if len({ev.point for ev in events}) != len(events):
        return "patch points repeat"
    if len({ev.target for ev in events}) != len(events):
        return "targets repeat"
    return None


def check_unit_rows_closed(depth: int, stage: int) -> Witness:
    return _first(
        f"staged row {n} is not closed"
        for n in range(min(depth, LEVEL_CAP))
        if not unit.unit_row(n, stage).is_closed_within(unit.UNIT)
    )


def fifo_witness(events_target: list[SeqSpec], events_lost: list[SeqSpec]) -> Witness:
    """With strict alternation the lost spec of step ``m`` is the target of step ``2m + 1``."""
    for m, lost in enumerate(events_lost):
        k = 2 * m + 1
        if k < len(events_target) and events_target[k] != lost:
            return f"lost {lost} of step {m} is not re-targeted at step {k}"
    return None


def check_unit_coverage(steps: int = 40, fresh: int = 10) -> Witness:
    events = unit.unit_schedule(steps)
    targets = {ev.target for ev in events}
    missing = _first(f"missing_unit({i}) never targeted" for i in range(fresh) if unit.missing_unit(i) not in targets)
    return missing or fifo_witness([e.target for e in events], [e.lost for e in events])


def check_w_half() -> Witness:
    sec = unit.section_unit(Fraction(1, 2), 5)
    return None if sec == {0, 2, 3, 4} else f"section of 1/2 at depth 5 is {_fmt_rows(sec)}"


# ---------------------------------------------------------------- real construction


def check_tiling(n_max: int) -> Witness:
    for side, whole in (
        (real.Side.NEG, IntervalSet.of(Interval(Fraction(-1), False, Fraction(-1, n_max + 2), True))),
        (real.Side.POS, IntervalSet.of(Interval(Fraction(1, n_max + 2), True, Fraction(1), False))),
    ):
        bases = [real.block(side, n).base for n in range(n_max + 1)]
        for a, b in itertools.combinations(bases, 2):
            if a.intersect(b) is not None:
                return f"bases {a} and {b} overlap"
        if IntervalSet(bases) != whole:
            return f"{side.value} bases do not tile {whole}"
        if any(Fraction(0) in b for b in bases):
            return "0 is covered by a block"
    return None


def check_copy_offset_rows(n_max: int = 6) -> Witness:
    for n in range(n_max + 1):
        got = real.block(real.Side.NEG, n).copy_row(0)
        want = IntervalSet.of(Interval.closed(Fraction(-(2 * n + 3), 2 * (n + 1) * (n + 2)), Fraction(-1, n + 2)))
        if got != want:
            return f"NEG-{n} row {2 * n + 1} piece is {got}, expected {want}"
    return None


def check_real_rows_closed(r_max: int, copy_stages: Iterable[int], stage: int) -> Witness:
    for c in copy_stages:
        for r in range(r_max + 1):
            row = real.a_row(r, c)
            if not row.is_closed_within(real.AMBIENT):
                return f"a_row({r}, copy_stage={c}) = {row} is not closed in (-1,1)"
            extra = IntervalSet.points(ev.point for ev in real.real_schedule(stage) if ev.row == r)
            if not (row | extra).is_closed_within(real.AMBIENT):
                return f"patched row {r} is not closed in (-1,1)"
    return None


def check_gluing(n_max: int, kmax: int, copy_stage: int) -> Witness:
    return _first(f"gluing fails at block {n}" for n in range(1, n_max + 1) if not real.gluing_check(n, kmax, copy_stage))


def check_rows_vs_sections(depth: int, copy_stage: int) -> Witness:
    """``section_real`` (block pull-back) agrees with membership in assembled rows."""
    rng = random.Random(SEED + 3)
    pts = {real.endpoint(k) for k in range(2 * depth)} | {Fraction(0)}
    for r in range(depth):
        for q in real.a_row(r, copy_stage).boundary_points():
            if q in real.AMBIENT:
                pts.add(q)
    pts |= {Fraction(rng.randint(-1023, 1023), 1024) for _ in range(200)}
    for p in sorted(pts):
        by_rows = {r for r in range(depth) if p in real.a_row(r, copy_stage)}
        if by_rows != real.section_real(p, depth, 0, copy_stage):
            return f"p={format_rational(p)}: rows give {_fmt_rows(by_rows)}"
    return None


def check_endpoint_sections(k_max: int, depth: int) -> Witness:
    for k in range(k_max + 1):
        sec = real.section_real(real.endpoint(k), depth)
        if sec != set(range(k, depth)):
            return f"e_{k}={format_rational(real.endpoint(k))}: section {_fmt_rows(sec)}"
    return None


def real_candidates(copy_depth: int = 8, depth: int = 10, k_max: int = 10) -> list[Fraction]:
    pts = {real.endpoint(k) for k in range(k_max + 1)}
    for side in real.Side:
        for n in range(depth // 2 + 1):
            b = real.block(side, n)
            if b.base_row >= depth:
                continue
            pts |= {b.embed(Fraction(i, 2**copy_depth)) for i in range(1, 2**copy_depth + 1)}
    return sorted(pts)


def check_missing_family(n_max: int = 6, depth: int = 10, copy_depth: int = 8) -> Witness:
    """No candidate point realizes a missing sequence.

    A dyadic of level ``copy_depth`` inside a copy starting at row ``r0`` can
    agree with a missing word on its first ``r0 + copy_depth + 1`` rows, so
    each word is compared at least two rows beyond that.
    """
    cands = real_candidates(copy_depth, depth=max(depth, 2 * n_max + 2))
    for n in range(n_max + 1):
        d = max(depth, n + 1 + copy_depth + 2)
        w = real.missing_real(n).word(d)
        for p in cands:
            if _bits(real.section_real(p, d), d) == w:
                return f"missing_real({n}) realized at {format_rational(p)} to depth {d}"
    return None


def check_real_patches(stage: int) -> Witness:
    steps = real.real_steps(stage)
    for m, st in enumerate(steps):
        if st.endpoint_index < 2:
            return f"step {m} used endpoint {st.endpoint_index}"
        horizon = st.endpoint_index + 4
        before = _bits(real.section_real(st.point, horizon, m), horizon)
        after = _bits(real.section_real(st.point, horizon, m + 1), horizon)
        if before != st.lost.word(horizon) or after != st.target.word(horizon):
            return f"step {m} at {format_rational(st.point)}: {before}->{after}, expected {st.lost}->{st.target}"
    if len({st.endpoint_index for st in steps}) != len(steps):
        return "endpoint reused"
    if len({st.target for st in steps}) != len(steps):
        return "targets repeat"
    coverage_steps = max(stage, 12)
    full = real.real_steps(coverage_steps)
    return fifo_witness([s.target for s in full], [s.lost for s in full])


REFERENCE_V_STEPS = [(Fraction(-1, 3), (0,)), (Fraction(-1, 4), (2, 3)), (Fraction(1, 3), (1,))]


def check_v0v1v2() -> Witness:
    got = [(st.point, st.rows) for st in real.real_steps(3)]
    if got != REFERENCE_V_STEPS:
        return "steps " + ", ".join(f"({format_rational(p)},{_fmt_rows(r)})" for p, r in got)
    expected = [SeqSpec("10", "1"), SeqSpec("00", "1"), SeqSpec("010", "1")]
    targets = [st.target for st in real.real_steps(3)]
    return None if targets == expected else f"targets {', '.join(map(str, targets))}"


def check_transport(grid: int = 1000) -> Witness:
    pts = [Fraction(2 * i - grid, grid + 1) for i in range(grid + 1)]
    images = [real.transport(p) for p in pts]
    for p, q, hp, hq in zip(pts, pts[1:], images, images[1:]):
        if not hp < hq:
            return f"transport not increasing between {format_rational(p)} and {format_rational(q)}"
    for y in images:
        if real.transport(real.transport_inverse(y)) != y:
            return f"inverse fails at {format_rational(y)}"
    return None


def real_witness(word: str, copy_stage: int = 0) -> Fraction:
    """A point whose real section starts with ``word``.

    The leading zeros pick the block; the rest of the word, padded with
    zeros forever, is coded inside that block's copy.
    """
    if "1" not in word:
        return Fraction(0)
    n = word.index("1")
    b = real.block(real.Side.NEG, n // 2) if n % 2 == 0 else real.block(real.Side.POS, (n - 1) // 2)
    t = limit_point(SeqSpec(word[n + 1 :], "0"))
    assert t is not None and t != 0
    return b.embed(t)


def check_real_coverage(length: int, stage: int, copy_stage: int) -> Witness:
    seen: dict[str, Fraction] = {}
    for w in words(length, length):
        p = real_witness(w, copy_stage)
        got = _bits(real.section_real(p, length, stage, copy_stage), length)
        if got != w:
            return f"witness {format_rational(p)} for {w} has section {got}"
        if got in seen:
            return f"section {got} realized twice"
        seen[got] = p
        if p != 0 and "1" not in got:
            return f"nonzero witness {format_rational(p)} has an empty section"
    return None


# ---------------------------------------------------------------- assembly


def _run(report: VerifyReport, name: str, params: dict, fn: Callable[[], Witness]) -> None:
    try:
        witness = fn()
    except AssertionError as exc:
        witness = f"assertion: {exc}"
    report.checks.append(Check(name, params, witness is None, witness))


def run_verify(space: str, depth: int, stage: int, copy_stage: int = 0) -> VerifyReport:
    if space not in ("unit", "real"):
        raise ValueError(f"unknown space {space!r}")
    if depth < 1 or stage < 0 or copy_stage < 0:
        raise ValueError("depth must be positive and stages non-negative")
    rep = VerifyReport(space, depth, stage, copy_stage)
    lv = min(depth, LEVEL_CAP)

    _run(rep, "interval_canonical_form", {"samples": 200}, check_canonical)
    _run(rep, "interval_algebra_laws", {"samples": 200}, check_algebra_laws)
    _run(rep, "interval_closed_within_rule", {"samples": 200}, check_closed_within_rule)
    _run(rep, "dyadic_partition", {"levels": lv}, lambda: check_partition(lv))
    _run(rep, "dyadic_siblings_disjoint", {"max_len": lv - 1}, lambda: check_siblings(lv - 1))
    _run(rep, "dyadic_nesting_width_midpoint_closure", {"max_len": min(lv, 10)}, lambda: check_nesting(min(lv, 10)))
    _run(rep, "dyadic_bracket_pattern", {"levels": lv}, lambda: check_bracket_pattern(lv))
    pre = min(depth, 6)
    _run(rep, "codes_round_trip", {"prefix": pre, "tail": 4, "depth": lv}, lambda: check_round_trip(pre, 4, lv))
    _run(rep, "codes_emptiness_oracle", {"prefix": min(depth, 8)}, lambda: check_emptiness(min(depth, 8)))
    _run(rep, "codes_injective_fixed_point", {"prefix": pre, "tail": 4}, lambda: check_injective_and_fixed(pre, 4))

    if space == "unit":
        _run(rep, "unit_property3_rows", {"n_max": lv}, lambda: check_property3(lv))
        _run(rep, "unit_code_section_agreement", {"level": lv}, lambda: check_code_section(lv))
        _run(rep, "unit_finite_uniqueness", {"level": lv}, lambda: check_unit_uniqueness(lv))
        _run(rep, "unit_W_half", {}, check_w_half)
        _run(rep, "unit_patch_soundness", {"stage": stage}, lambda: check_unit_patches(stage))
        _run(rep, "unit_rows_closed", {"depth": lv, "stage": stage}, lambda: check_unit_rows_closed(lv, stage))
        _run(rep, "unit_coverage", {"steps": 40, "fresh": 10}, check_unit_coverage)
    else:
        _run(rep, "real_tiling", {"n_max": depth}, lambda: check_tiling(depth))
        _run(rep, "real_copy_offset_rows", {"n_max": 6}, check_copy_offset_rows)
        stages = sorted({0, copy_stage})
        _run(
            rep,
            "real_rows_relatively_closed",
            {"r_max": lv, "copy_stages": stages, "stage": stage},
            lambda: check_real_rows_closed(lv, stages, stage),
        )
        _run(rep, "real_gluing", {"n_max": 6, "kmax": 8}, lambda: check_gluing(6, 8, copy_stage))
        _run(rep, "real_rows_match_sections", {"depth": lv}, lambda: check_rows_vs_sections(lv, copy_stage))
        ek = min(depth, 8)
        _run(rep, "real_endpoint_sections", {"k_max": ek, "depth": max(depth, ek + 1)}, lambda: check_endpoint_sections(ek, max(depth, ek + 1)))
        _run(rep, "real_missing_family", {"n_max": 6, "depth": 10, "copy_depth": 8}, check_missing_family)
        _run(rep, "real_patch_soundness", {"stage": stage}, lambda: check_real_patches(stage))
        _run(rep, "V0V1V2_match_paper", {}, check_v0v1v2)
        _run(rep, "real_transport", {"grid": 1000}, check_transport)
        wl = min(depth, 7)
        _run(
            rep,
            "real_coverage",
            {"length": wl, "stage": stage, "copy_stage": copy_stage},
            lambda: check_real_coverage(wl, stage, copy_stage),
        )
    return rep
