"""Distance sets and exact vertex distances in infinite distance graphs.

A distance graph on the integers joins ``i`` and ``j`` when ``|i - j|`` lies
in a finite distance set.  Closed forms are used for the three named
families; anything else goes through a breadth-first-search oracle.
"""

from __future__ import annotations

import enum
import math
from collections import deque
from dataclasses import dataclass
from functools import reduce

__all__ = [
    "Kind",
    "DistanceFamily",
    "Separation",
    "consecutive",
    "one_and_t",
    "two_consecutive",
    "general",
    "distance_consecutive",
    "distance_one_and_t",
    "distance_two_consecutive",
    "distance_upper_two_consecutive",
    "distance_oracle",
    "distance",
    "distance_delta",
    "distance_table",
    "ORACLE_WINDOW_CAP",
]

# Largest BFS window (number of integer vertices) the oracle will allocate.
ORACLE_WINDOW_CAP = 5_000_000


class Kind(str, enum.Enum):
    CONSECUTIVE = "consecutive"
    ONE_AND_T = "one-and-t"
    TWO_CONSECUTIVE = "two-consecutive"
    GENERAL = "general"


@dataclass(frozen=True)
class DistanceFamily:
    """Which distance set defines the graph.

    ``t`` is meaningful for the three named kinds; ``dset`` is always filled
    with the resolved distance set so callers never need to special-case.
    """

    kind: Kind
    t: int = 0
    dset: tuple[int, ...] = ()

    def __post_init__(self):
        kind = Kind(self.kind)
        object.__setattr__(self, "kind", kind)
        if kind is Kind.GENERAL:
            ds = tuple(self.dset)
            if not ds:
                raise ValueError("general distance set must be nonempty")
            if any(d < 1 for d in ds):
                raise ValueError(f"distances must be positive: {ds}")
            if any(a >= b for a, b in zip(ds, ds[1:])):
                raise ValueError(f"distance set must be strictly increasing: {ds}")
            object.__setattr__(self, "dset", ds)
            object.__setattr__(self, "t", ds[-1])
        else:
            t = self.t
            if not isinstance(t, int) or t < 2:
                raise ValueError(f"{kind.value} requires integer t >= 2, got {t!r}")
            if kind is Kind.CONSECUTIVE:
                ds = tuple(range(1, t + 1))
            elif kind is Kind.ONE_AND_T:
                ds = (1, t)
            else:
                ds = (t - 1, t)
            object.__setattr__(self, "dset", ds)
        g = reduce(math.gcd, self.dset)
        if g != 1:
            raise ValueError(f"distance set {self.dset} has gcd {g}; graph is disconnected")

    @property
    def maxstep(self) -> int:
        return self.dset[-1]

    @property
    def label(self) -> str:
        if self.kind is Kind.GENERAL:
            return "D(" + ",".join(map(str, self.dset)) + ")"
        if self.kind is Kind.CONSECUTIVE:
            return f"D(1..{self.t})"
        return "D(" + ",".join(map(str, self.dset)) + ")"

    def __str__(self):
        if self.kind is Kind.GENERAL:
            return "general:" + ",".join(map(str, self.dset))
        return f"{self.kind.value}:{self.t}"

    @classmethod
    def parse(cls, kind: str, t: int | str | None = None) -> DistanceFamily:
        """Build a family from CLI-style text, e.g. ``("one-and-t", 5)``.

        ``general`` takes a comma separated distance set in place of ``t``.
        """
        kind = kind.strip().lower().replace("_", "-")
        aliases = {
            "consecutive": Kind.CONSECUTIVE,
            "one-and-t": Kind.ONE_AND_T,
            "onet": Kind.ONE_AND_T,
            "two-consecutive": Kind.TWO_CONSECUTIVE,
            "t-1-t": Kind.TWO_CONSECUTIVE,
            "general": Kind.GENERAL,
        }
        if kind not in aliases:
            raise ValueError(f"unknown family kind {kind!r}")
        k = aliases[kind]
        if k is Kind.GENERAL:
            if isinstance(t, str):
                ds = tuple(int(x) for x in t.split(",") if x.strip())
            else:
                ds = tuple(t or ())
            return cls(k, dset=ds)
        return cls(k, int(t))


def consecutive(t: int) -> DistanceFamily:
    return DistanceFamily(Kind.CONSECUTIVE, t)


def one_and_t(t: int) -> DistanceFamily:
    return DistanceFamily(Kind.ONE_AND_T, t)


def two_consecutive(t: int) -> DistanceFamily:
    return DistanceFamily(Kind.TWO_CONSECUTIVE, t)


def general(*dset: int) -> DistanceFamily:
    return DistanceFamily(Kind.GENERAL, dset=tuple(sorted(dset)))


@dataclass(frozen=True)
class Separation:
    """``delta = q * t + r`` with ``0 <= r < t``."""

    delta: int
    q: int
    r: int

    @classmethod
    def of(cls, delta: int, t: int) -> Separation:
        delta = abs(delta)
        q, r = divmod(delta, t)
        return cls(delta, q, r)


def _check(t: int, delta: int) -> None:
    if t < 2:
        raise ValueError(f"t must be >= 2, got {t}")
    if delta < 0:
        raise ValueError(f"delta must be nonnegative, got {delta}")


def distance_consecutive(t: int, delta: int) -> int:
    """Distance in D(1, 2, ..., t): ``ceil(delta / t)``."""
    _check(t, delta)
    s = Separation.of(delta, t)
    return s.q if s.r == 0 else s.q + 1


def distance_one_and_t(t: int, delta: int) -> int:
    _check(t, delta)
    if delta == 0:
        return 0
    s = Separation.of(delta, t)
    return min(s.q + s.r, s.q + 1 + t - s.r)


def distance_two_consecutive(t: int, delta: int) -> int:
    """Exact distance in D(t-1, t).

    Minimises ``|a| + |b|`` over ``a(t-1) + bt = delta``.  Starting from the
    particular solution ``(-delta, delta)`` every solution is
    ``a = -delta + m t``, ``b = delta - m (t-1)``; the objective is convex in
    ``m`` so scanning between the two kink points (padded by one) suffices.
    """
    _check(t, delta)
    if delta == 0:
        return 0
    lo = delta // t - 1
    hi = -(-delta // (t - 1)) + 1
    return min(abs(m * t - delta) + abs(delta - m * (t - 1)) for m in range(lo, hi + 1))


def distance_upper_two_consecutive(t: int, delta: int) -> int:
    """The bound ``q + t`` on the D(t-1, t) distance."""
    _check(t, delta)
    return delta // t + t


def oracle_window(maxstep: int, delta: int) -> int:
    return maxstep * maxstep + maxstep * -(-delta // maxstep)


def distance_oracle(family: DistanceFamily, delta: int, cap: int = ORACLE_WINDOW_CAP) -> int:
    """Graph distance from 0 to ``delta`` by BFS on ``[-W, delta + W]``.

    Any window containing ``[-m, delta + m]`` (``m`` the largest step) is
    enough: reorder the steps of a shortest path so that a positive step is
    taken while the walker is at or below ``delta`` and a negative one
    otherwise, and no partial sum leaves that interval.
    """
    delta = abs(delta)
    if delta == 0:
        return 0
    w = oracle_window(family.maxstep, delta)
    lo, hi = -w, delta + w
    if hi - lo + 1 > cap:
        raise ValueError(f"oracle window {hi - lo + 1} exceeds cap {cap}")
    dist = {0: 0}
    queue = deque([0])
    steps = family.dset
    while queue:
        v = queue.popleft()
        dv = dist[v] + 1
        for s in steps:
            for u in (v + s, v - s):
                if lo <= u <= hi and u not in dist:
                    if u == delta:
                        return dv
                    dist[u] = dv
                    queue.append(u)
    raise RuntimeError(f"{delta} unreachable in {family.label}")  # excluded by gcd check


_CLOSED_FORMS = {
    Kind.CONSECUTIVE: distance_consecutive,
    Kind.ONE_AND_T: distance_one_and_t,
    Kind.TWO_CONSECUTIVE: distance_two_consecutive,
}


def distance_delta(family: DistanceFamily, delta: int) -> int:
    delta = abs(delta)
    fn = _CLOSED_FORMS.get(family.kind)
    if fn is None:
        return distance_oracle(family, delta)
    return fn(family.t, delta)


def distance(family: DistanceFamily, i: int, j: int) -> int:
    return distance_delta(family, j - i)


def distance_table(family: DistanceFamily, upto: int) -> list[int]:
    """``[d(0), d(1), ..., d(upto)]`` for repeated lookups."""
    return [distance_delta(family, d) for d in range(upto + 1)]
