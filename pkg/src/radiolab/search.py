"""Exhaustive searches: prefix lower-bound proofs, exact t+, periodic patterns.

All searches enumerate vertices in increasing order and labels in ascending
order, so the first labeling found is the lexicographically smallest one.
"""

from __future__ import annotations

import enum
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from typing import Sequence

from . import bounds
from .bounds import BoundRecord, LowerSource, UpperSource
from .graph import DistanceFamily, distance_table
from .patterns import PeriodicPattern, certified_upper, horizon, verify_periodic

__all__ = [
    "SearchConfig",
    "Verdict",
    "Reason",
    "ProofOutcome",
    "OrderingScore",
    "BudgetExhausted",
    "prove_lower",
    "exact_value",
    "ExactResult",
    "t_plus_exact",
    "path_distances",
    "prefix_distances",
    "find_pattern",
    "default_periods",
    "extended_periods",
    "TPLUS_CAP",
]

TPLUS_CAP = 16


@dataclass(frozen=True)
class SearchConfig:
    """Budgets for one search call.

    ``span_ceiling`` is only consulted by :func:`find_pattern` when no explicit
    ceiling is passed.  ``workers > 1`` splits :func:`prove_lower` at the
    second vertex's label choices.
    """

    max_prefix: int = 60
    span_ceiling: int | None = None
    node_budget: int = 10_000_000
    time_budget: float = 30.0
    workers: int = 1
    max_period: int = 64

    def __post_init__(self):
        if self.max_prefix < 1:
            raise ValueError("max_prefix must be positive")
        if self.node_budget < 1 or self.time_budget <= 0:
            raise ValueError("budgets must be positive")
        if self.span_ceiling is not None and self.span_ceiling < 0:
            raise ValueError("span_ceiling must be nonnegative")
        if self.workers < 1:
            raise ValueError("workers must be positive")
        if self.max_period < 1:
            raise ValueError("max_period must be positive")


class Verdict(str, enum.Enum):
    PROVEN = "proven-greater-than"
    INCONCLUSIVE = "inconclusive"


class Reason(str, enum.Enum):
    WITNESS = "witness-found"
    BUDGET = "budget-exhausted"


@dataclass(frozen=True)
class ProofOutcome:
    """Result of a prefix search for a span-``l`` radio k-labeling.

    ``PROVEN`` means no labeling of ``prefix_used`` consecutive vertices with
    labels in ``[0, l]`` and the first vertex at 0 exists, hence rl_k > l.
    """

    family: DistanceFamily
    k: int
    l: int
    verdict: Verdict
    prefix_used: int
    reason: Reason | None = None
    witness: tuple[int, ...] | None = None
    nodes: int = 0
    elapsed: float = 0.0

    @property
    def proven(self) -> bool:
        return self.verdict is Verdict.PROVEN


@dataclass(frozen=True)
class OrderingScore:
    ordering: tuple[int, ...]
    score: int


class BudgetExhausted(Exception):
    pass


def _requirements(family: DistanceFamily, k: int) -> list[int]:
    """``req[delta]``: least label gap needed between vertices ``delta`` apart."""
    h = horizon(family, k)
    dist = distance_table(family, h)
    return [0] + [max(0, k + 1 - dist[d]) for d in range(1, h + 1)]


def _forbid_masks(req: list[int], l: int) -> list[list[int] | None]:
    """``masks[delta][c]``: labels in ``[0, l]`` too close to ``c`` at separation ``delta``."""
    full = (1 << (l + 1)) - 1
    out: list[list[int] | None] = [None]
    for r in req[1:]:
        if r <= 0:
            out.append(None)
            continue
        row = []
        for c in range(l + 1):
            lo, hi = max(0, c - r + 1), min(l, c + r - 1)
            row.append((((1 << (hi - lo + 1)) - 1) << lo) & full)
        out.append(row)
    return out


class _Budget:
    __slots__ = ("nodes", "node_budget", "deadline")

    def __init__(self, node_budget: int, time_budget: float):
        self.nodes = 0
        self.node_budget = node_budget
        self.deadline = time.monotonic() + time_budget

    def tick(self):
        self.nodes += 1
        if self.nodes > self.node_budget:
            raise BudgetExhausted
        if self.nodes & 0xFFF == 0 and time.monotonic() > self.deadline:
            raise BudgetExhausted


def _prefix_dfs(masks, active, l, n, start, budget):
    """Extend the fixed labels ``start`` to ``n`` vertices.

    Returns ``(witness or None, deepest)`` where ``deepest`` is the largest
    number of consistently labeled vertices seen.
    """
    full = (1 << (l + 1)) - 1
    lab = list(start) + [0] * (n - len(start))
    depth = len(start)
    deepest = depth
    if depth >= n:
        return tuple(lab[:n]), n

    def domain(v):
        allowed = full
        for d in active:
            if d > v:
                break
            allowed &= ~masks[d][lab[v - d]]
            if not allowed:
                break
        return allowed

    stack = [domain(depth)]
    v = depth
    while stack:
        dom = stack[-1]
        if not dom:
            stack.pop()
            v -= 1
            continue
        low = dom & -dom
        stack[-1] = dom ^ low
        budget.tick()
        lab[v] = low.bit_length() - 1
        v += 1
        if v > deepest:
            deepest = v
        if v == n:
            return tuple(lab), deepest
        stack.append(domain(v))
    return None, deepest


def _check_start(masks, active, start):
    for v in range(len(start)):
        for d in active:
            if d > v:
                break
            if masks[d][start[v - d]] >> start[v] & 1:
                return False
    return True


def _prove_worker(args):
    family, k, l, n, start, node_budget, time_budget = args
    req = _requirements(family, k)
    masks = _forbid_masks(req, l)
    active = [d for d in range(1, len(req)) if masks[d] is not None]
    budget = _Budget(node_budget, time_budget)
    try:
        witness, deepest = _prefix_dfs(masks, active, l, n, start, budget)
    except BudgetExhausted:
        return "budget", None, 0, budget.nodes
    return "done", witness, deepest, budget.nodes


def prove_lower(family: DistanceFamily, k: int, l: int, config: SearchConfig | None = None) -> ProofOutcome:
    """Try to show rl_k(family) > l by exhausting labelings of a vertex prefix.

    Vertex 1 is fixed at label 0: any radio labeling with span ``<= l`` can be
    shifted so its minimum label is 0 and translated so a vertex carrying it
    is vertex 1.  Distances are those of the infinite graph.
    """
    config = config or SearchConfig()
    if k < 1 or l < 0:
        raise ValueError(f"need k >= 1 and l >= 0, got k={k}, l={l}")
    n = config.max_prefix
    t0 = time.monotonic()

    if config.workers == 1 or n < 3:
        jobs = [(family, k, l, n, (0,), config.node_budget, config.time_budget)]
    else:
        req = _requirements(family, k)
        masks = _forbid_masks(req, l)
        active = [d for d in range(1, len(req)) if masks[d] is not None]
        jobs = [
            (family, k, l, n, (0, c), config.node_budget, config.time_budget)
            for c in range(l + 1)
            if _check_start(masks, active, (0, c))
        ]
        if not jobs:
            return ProofOutcome(family, k, l, Verdict.PROVEN, 2, nodes=0, elapsed=time.monotonic() - t0)

    if len(jobs) == 1 or config.workers == 1:
        results = [_prove_worker(j) for j in jobs]
    else:
        with ProcessPoolExecutor(max_workers=config.workers) as ex:
            results = list(ex.map(_prove_worker, jobs))

    nodes = sum(r[3] for r in results) + (len(jobs) if len(jobs) > 1 else 0)
    elapsed = time.monotonic() - t0
    # ordered reduction: earliest subtree with a witness wins, independent of scheduling
    for status, witness, _, _ in results:
        if status == "budget":
            return ProofOutcome(family, k, l, Verdict.INCONCLUSIVE, n, Reason.BUDGET, None, nodes, elapsed)
        if witness is not None:
            return ProofOutcome(family, k, l, Verdict.INCONCLUSIVE, n, Reason.WITNESS, witness, nodes, elapsed)
    deepest = max(r[2] for r in results)
    return ProofOutcome(family, k, l, Verdict.PROVEN, deepest + 1, nodes=nodes, elapsed=elapsed)


# --- upper traceable number -------------------------------------------------


def path_distances(n: int) -> list[list[int]]:
    return [[abs(i - j) for j in range(n)] for i in range(n)]


def prefix_distances(family: DistanceFamily, n: int) -> list[list[int]]:
    """Distances among vertices ``0..n-1`` of the infinite graph."""
    dist = distance_table(family, n)
    return [[dist[abs(i - j)] for j in range(n)] for i in range(n)]


def t_plus_exact(graph: DistanceFamily | Sequence[Sequence[int]], n: int | None = None,
                 cap: int = TPLUS_CAP) -> OrderingScore:
    """Maximum of the summed consecutive distances over all vertex orderings.

    ``graph`` is a family (its ``n``-vertex prefix is used) or an explicit
    distance matrix.  Dynamic programming over ``(subset, last vertex)``.
    """
    if isinstance(graph, DistanceFamily):
        if n is None:
            raise ValueError("n is required for a distance family")
        dmat = prefix_distances(graph, n)
    else:
        dmat = [list(row) for row in graph]
        n = len(dmat) if n is None else n
        if n != len(dmat):
            raise ValueError("n does not match the distance matrix")
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    if n > cap:
        raise ValueError(f"n={n} above cap {cap}")

    size = 1 << n
    neg = -1
    best = [[neg] * n for _ in range(size)]
    for v in range(n):
        best[1 << v][v] = 0
    for mask in range(1, size):
        row = best[mask]
        for v in range(n):
            cur = row[v]
            if cur < 0:
                continue
            dv = dmat[v]
            free = ~mask & (size - 1)
            while free:
                bit = free & -free
                u = bit.bit_length() - 1
                free ^= bit
                val = cur + dv[u]
                nxt = best[mask | bit]
                if val > nxt[u]:
                    nxt[u] = val
    full = size - 1
    score = max(best[full])
    # walk back to recover one maximising ordering
    last = best[full].index(score)
    order = [last]
    mask = full
    while mask != (1 << last):
        prev_mask = mask ^ (1 << last)
        for u in range(n):
            if prev_mask >> u & 1 and best[prev_mask][u] >= 0 and \
                    best[prev_mask][u] + dmat[u][last] == best[mask][last]:
                order.append(u)
                mask, last = prev_mask, u
                break
    return OrderingScore(tuple(reversed(order)), score)


# --- periodic pattern search ------------------------------------------------


def default_periods(family: DistanceFamily, k: int) -> list[int]:
    t = family.t
    return list(range(k * t + 1, k * t + t + 4))


def extended_periods(family: DistanceFamily, k: int, max_period: int) -> list[int]:
    """Default candidates first, then every other period up to ``max_period``."""
    first = default_periods(family, k)
    return first + [p for p in range(1, max_period + 1) if p not in first]


def _cyclic_requirements(req: list[int], period: int) -> list[int]:
    """Least gap between pattern positions whose offset is ``r`` mod the period."""
    out = [0] * period
    for d in range(1, len(req)):
        r = req[d]
        if r:
            a, b = d % period, (-d) % period
            if r > out[a]:
                out[a] = r
            if r > out[b]:
                out[b] = r
    return out


def _pattern_dfs(creq: list[int], s: int, budget: _Budget) -> list[int] | None:
    period = len(creq)
    if creq[0] > 0:
        return None
    full = (1 << (s + 1)) - 1
    forb = []
    for r in creq:
        if r <= 0:
            forb.append(None)
            continue
        row = []
        for c in range(s + 1):
            lo, hi = max(0, c - r + 1), min(s, c + r - 1)
            row.append(((1 << (hi - lo + 1)) - 1) << lo)
        forb.append(row)
    active = [r for r in range(1, period) if forb[r] is not None]
    lab = [0] * period
    if period == 1:
        return lab

    def domain(v):
        allowed = full
        for r in active:
            if r > v:
                break
            allowed &= ~forb[r][lab[v - r]]
            if not allowed:
                return 0
        return allowed

    v = 1
    stack = [domain(1)]
    while stack:
        dom = stack[-1]
        if not dom:
            stack.pop()
            v -= 1
            continue
        low = dom & -dom
        stack[-1] = dom ^ low
        budget.tick()
        lab[v] = low.bit_length() - 1
        v += 1
        if v == period:
            return list(lab)
        stack.append(domain(v))
    return None


def find_pattern(family: DistanceFamily, k: int, span_ceiling: int | None = None,
                 periods: Sequence[int] | None = None,
                 config: SearchConfig | None = None) -> PeriodicPattern | None:
    """First periodic radio k-labeling with labels in ``[0, span_ceiling]``.

    Periods are tried in the given order; within a period, position 1 is
    fixed at 0 (rotate any valid pattern so a minimum label comes first).
    The result is re-verified before being returned.  Raises
    :class:`BudgetExhausted` when the budget runs out before an answer.
    """
    config = config or SearchConfig()
    if span_ceiling is None:
        span_ceiling = config.span_ceiling
    if span_ceiling is None:
        raise ValueError("span_ceiling is required")
    periods = list(periods) if periods is not None else default_periods(family, k)
    req = _requirements(family, k)
    budget = _Budget(config.node_budget, config.time_budget)
    for p in periods:
        if p < 1:
            raise ValueError(f"period must be positive, got {p}")
        labels = _pattern_dfs(_cyclic_requirements(req, p), span_ceiling, budget)
        if labels is None:
            continue
        pattern = PeriodicPattern(family, k, tuple(labels), source=f"search-period-{p}")
        bad = verify_periodic(pattern)
        if bad is not None:
            raise AssertionError(f"pattern search produced an invalid pattern: {bad}")
        return pattern
    return None


# --- exact values -----------------------------------------------------------


@dataclass(frozen=True)
class ExactResult:
    record: BoundRecord
    proofs: list[ProofOutcome] = field(default_factory=list)
    pattern: PeriodicPattern | None = None


def exact_value(family: DistanceFamily, k: int, config: SearchConfig | None = None,
                cache=None) -> ExactResult:
    """Close the gap between prefix proofs and periodic patterns.

    ``l`` ascends from the analytic lower bound minus one while
    :func:`prove_lower` succeeds; the upper side is the best of the built-in
    pattern and a pattern search at spans from the proven lower bound up.
    ``config.time_budget`` caps the whole call, not each search.  ``cache``
    (see :mod:`radiolab.cache`) memoises prefix proofs.
    """
    config = config or SearchConfig()
    deadline = time.monotonic() + config.time_budget

    def remaining():
        left = deadline - time.monotonic()
        return replace(config, time_budget=left) if left > 0 else None

    analytic = bounds.best_bounds(family, k)
    lower, lower_src = analytic.lower, LowerSource.ANALYTIC
    proofs = []
    cert_span, cert_pattern = certified_upper(family, k)
    l = max(analytic.lower - 1, 0)
    while l < cert_span:
        out = cache.get_proof(family, k, l, config) if cache is not None else None
        if out is None:
            sub = remaining()
            if sub is None:
                break
            out = prove_lower(family, k, l, sub)
            if cache is not None:
                cache.put_proof(out, config)
        proofs.append(out)
        if not out.proven:
            break
        if l + 1 > lower:
            lower, lower_src = l + 1, LowerSource.PREFIX_SEARCH
        l += 1

    upper, upper_src, pattern = cert_span, UpperSource.VERIFIED_PATTERN, cert_pattern
    periods = extended_periods(family, k, config.max_period)
    for s in range(lower, cert_span):
        sub = remaining()
        if sub is None:
            break
        try:
            found = find_pattern(family, k, s, periods, sub)
        except BudgetExhausted:
            break
        if found is not None:
            upper, pattern = found.span, found
            break
    record = BoundRecord(
        family, k, lower, upper, lower_src, upper_src,
        lower_formula=analytic.lower_formula if lower_src is LowerSource.ANALYTIC else "prove_lower",
        upper_formula=pattern.source,
    )
    return ExactResult(record, proofs, pattern)
