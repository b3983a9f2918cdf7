"""Periodic label patterns and their verification.

A pattern of period ``P`` labels vertex ``a`` with ``labels[(a - 1) % P]``
(vertices are numbered from 1, storage is 0-based).  A pattern that passes
:func:`verify_periodic` is a radio k-labeling of the whole distance graph, so
its span is an upper bound on rl_k.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction

from . import bounds
from .graph import DistanceFamily, Kind, consecutive, distance_table

__all__ = [
    "PeriodicPattern",
    "Violation",
    "horizon",
    "build_pattern",
    "pattern_table",
    "verify_periodic",
    "certified_upper",
    "theorem_span",
]


@dataclass(frozen=True)
class PeriodicPattern:
    family: DistanceFamily
    k: int
    labels: tuple[int, ...]
    step: int = 0
    source: str = ""

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(int(x) for x in self.labels))
        if not self.labels:
            raise ValueError("pattern needs at least one label")
        if min(self.labels) < 0:
            raise ValueError("labels must be nonnegative")
        if self.k < 1:
            raise ValueError(f"k must be >= 1, got {self.k}")

    @property
    def period(self) -> int:
        return len(self.labels)

    @property
    def span(self) -> int:
        return max(self.labels) - min(self.labels)

    def label(self, vertex: int) -> int:
        return self.labels[(vertex - 1) % self.period]


@dataclass(frozen=True)
class Violation:
    """Vertices ``i < j`` (1-based) with ``label_gap + dist <= k``."""

    i: int
    j: int
    label_gap: int
    dist: int


def horizon(family: DistanceFamily, k: int) -> int:
    """Separations beyond this satisfy the radio condition whatever the labels."""
    return k * family.maxstep


def _half(x: Fraction, what: str) -> int:
    if x.denominator != 1:
        raise ArithmeticError(f"{what} is not integral: {x}")
    return int(x)


def _two_blocks(n1: int, n2: int, step: int, offset: int) -> list[int]:
    return [m * step for m in range(n1)] + [offset + m * step for m in range(n2)]


def pattern_table(family: DistanceFamily, k: int) -> str:
    """Which of the six tabulated constructions covers ``(family, k)``."""
    t = family.t
    if family.kind is Kind.CONSECUTIVE:
        if k % 2 == 0:
            return "table-1"
        return "table-2" if t % 2 == 0 else "table-3"
    if family.kind is Kind.ONE_AND_T and k % 2 == 1:
        if t >= 3 and t % 2 == 1:
            return "table-4"
        if t >= 4 and t % 2 == 0:
            return "table-5"
    if family.kind is Kind.TWO_CONSECUTIVE and k % 2 == 1 and k >= 3 and t > 2:
        return "table-6"
    raise ValueError(f"no tabulated pattern for {family} with k={k}")


def build_pattern(family: DistanceFamily, k: int) -> PeriodicPattern:
    """The two-block arithmetic pattern tabulated for ``(family, k)``."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    table = pattern_table(family, k)
    t = family.t
    tk2 = Fraction(t * k, 2)
    if table == "table-1":
        step, offset = k, k // 2
        n1, n2 = _half(tk2 + 2, "block"), _half(tk2 + 1, "block")
        period = t * k + 3
    elif table == "table-2":
        step = k + 1
        offset = step // 2
        n1, n2 = _half(tk2 + 1, "block"), _half(tk2, "block")
        period = t * k + 1
    elif table == "table-3":
        step = k + 1
        offset = step // 2
        n1 = n2 = _half(tk2 + Fraction(1, 2), "block")
        period = t * k + 1
    elif table == "table-4":
        step, offset = k, (k - 1) // 2
        n1 = n2 = _half(tk2 + Fraction(1, 2), "block")
        period = t * k + 1
    elif table == "table-5":
        step, offset = k, (k - 1) // 2
        n1, n2 = _half(tk2 + 1, "block"), _half(tk2, "block")
        period = t * k + 1
    else:
        step = k - 1
        offset = step // 2
        n1 = _half(tk2 + Fraction(t + 2, 2) + 1, "block")
        n2 = _half(tk2 + Fraction(t, 2) + 1, "block")
        period = t * k + t + 3
    labels = _two_blocks(n1, n2, step, offset)
    if len(labels) != period:
        raise AssertionError(f"{table}: blocks {n1}+{n2} do not fill period {period}")
    return PeriodicPattern(family, k, tuple(labels), step=step, source=table)


def theorem_span(table: str, t: int, k: int) -> int:
    """Span promised by the theorem that goes with each table."""
    if table == "table-1" or table in ("table-2", "table-3"):
        return bounds.upper_consecutive(t, k)
    if table in ("table-4", "table-5"):
        return bounds.upper_one_and_t(t, k)
    if table == "table-6":
        return bounds.upper_two_consecutive_oddk(t, k)
    raise ValueError(f"unknown table {table!r}")


def verify_periodic(pattern: PeriodicPattern, dist: list[int] | None = None) -> Violation | None:
    """First violating pair ``(i, j)`` in lexicographic order, or None if valid.

    Every pair with ``1 <= i <= P`` and ``0 < j - i <= k * maxstep`` is
    checked; by periodicity this covers all pairs of integers.
    """
    k = pattern.k
    h = horizon(pattern.family, k)
    if dist is None:
        dist = distance_table(pattern.family, h)
    labels = pattern.labels
    p = len(labels)
    for i in range(p):
        ci = labels[i]
        for delta in range(1, h + 1):
            gap = abs(ci - labels[(i + delta) % p])
            if gap + dist[delta] <= k:
                return Violation(i + 1, i + 1 + delta, gap, dist[delta])
    return None


def certified_upper(family: DistanceFamily, k: int) -> tuple[int, PeriodicPattern]:
    """Span of a verified built-in pattern for ``(family, k)``.

    Families without a dedicated table reuse the D(1..t) pattern, which is
    valid because D(1,t) and D(t-1,t) are subgraphs of D(1..t).
    """
    if family.kind is Kind.GENERAL:
        raise ValueError("no built-in pattern for a general distance set")
    try:
        pattern = build_pattern(family, k)
    except ValueError:
        base = build_pattern(consecutive(family.t), k)
        pattern = replace(base, family=family)
    bad = verify_periodic(pattern)
    if bad is not None:
        raise AssertionError(f"built-in pattern {pattern.source} for {family} k={k} rejected at {bad}")
    return pattern.span, pattern
