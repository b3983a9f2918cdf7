"""Closed-form lower and upper bounds on rl_k for the three named families.

Everything is evaluated with :class:`fractions.Fraction`; integer results are
asserted integral (upper bounds) or rounded up (lower bounds) only at the end.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .graph import DistanceFamily, Kind, consecutive

RationalBound = Fraction

__all__ = [
    "RationalBound",
    "LowerSource",
    "UpperSource",
    "BoundRecord",
    "t_plus_path",
    "le1_traceable_upper",
    "th1_lower",
    "lower_consecutive",
    "lower_one_and_t",
    "lower_two_consecutive",
    "lower_trivial",
    "upper_consecutive",
    "upper_one_and_t",
    "upper_two_consecutive_oddk",
    "best_bounds",
    "traceable_params",
]


class LowerSource(str, enum.Enum):
    ANALYTIC = "analytic-proposition"
    PREFIX_SEARCH = "prefix-search-proof"
    REFERENCE_TABLE = "reference-table"


class UpperSource(str, enum.Enum):
    ANALYTIC = "analytic-theorem"
    VERIFIED_PATTERN = "verified-pattern"
    REFERENCE_TABLE = "reference-table"


@dataclass(frozen=True)
class BoundRecord:
    family: DistanceFamily
    k: int
    lower: int
    upper: int | None
    lower_provenance: LowerSource
    upper_provenance: UpperSource | None
    lower_formula: str = ""
    upper_formula: str = ""

    def __post_init__(self):
        if self.lower < 0:
            raise ValueError(f"negative lower bound {self.lower}")
        if self.upper is not None and self.lower > self.upper:
            raise ValueError(f"lower {self.lower} exceeds upper {self.upper} for {self.family} k={self.k}")

    @property
    def exact(self) -> bool:
        return self.upper is not None and self.lower == self.upper


def _as_int(x: Fraction, what: str) -> int:
    if x.denominator != 1:
        raise ArithmeticError(f"{what} is not integral: {x}")
    return int(x)


def _ceil(x: Fraction) -> int:
    return -(-x.numerator // x.denominator)


def t_plus_path(n: int) -> int:
    """Upper traceable number of the path on ``n`` vertices."""
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    if n % 2 == 0:
        return n * n // 2 - 1
    return (n * n - 1) // 2 - 1


def le1_traceable_upper(n: int, alpha, beta) -> Fraction:
    """``(n^2/2 + alpha(n-1) - 1) / beta``.

    Valid as a bound on t+ when every pair ``i < j`` of the vertex set
    ``0..n-1`` satisfies ``d(i, j) <= (j - i + alpha) / beta``; the caller is
    responsible for that hypothesis.
    """
    alpha, beta = Fraction(alpha), Fraction(beta)
    if alpha <= 0 or beta <= 0:
        raise ValueError("alpha and beta must be positive")
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    return (Fraction(n * n, 2) + alpha * (n - 1) - 1) / beta


def th1_lower(k: int, n: int, t_plus: int) -> int:
    """``(n-1)(k+1) - t_plus``; may be negative (vacuous)."""
    return (n - 1) * (k + 1) - t_plus


def traceable_params(family: DistanceFamily) -> tuple[Fraction, Fraction]:
    """The ``(alpha, beta)`` pair that makes ``d(i,j) <= (j-i+alpha)/beta`` hold."""
    t = family.t
    if family.kind is Kind.CONSECUTIVE:
        return Fraction(t - 1), Fraction(t)
    if family.kind is Kind.ONE_AND_T:
        return Fraction(t * t - 1, 2), Fraction(t)
    if family.kind is Kind.TWO_CONSECUTIVE:
        return Fraction(t * t), Fraction(t)
    raise ValueError(f"no traceable parameters for {family}")


def _check_tk(t: int, k: int, tmin: int = 2) -> None:
    if t < tmin:
        raise ValueError(f"t must be >= {tmin}, got {t}")
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")


def lower_consecutive_exact(t: int, k: int) -> Fraction:
    _check_tk(t, k)
    return Fraction(t, 2) * k * k + Fraction(1, 2 * t)


def lower_consecutive(t: int, k: int) -> int:
    return _ceil(lower_consecutive_exact(t, k))


def lower_one_and_t_exact(t: int, k: int) -> Fraction:
    _check_tk(t, k, tmin=3)
    if 2 * k < t:
        raise ValueError(f"D(1,t) lower bound needs k >= t/2 (t={t}, k={k})")
    p = Fraction(t * t, 2) - t + Fraction(1, 2)
    q = Fraction(t**3, 8) - Fraction(t * t, 2) + Fraction(3 * t, 4) - Fraction(1, 2)
    return Fraction(t, 2) * k * k - p * k + q + Fraction(1, 2 * t)


def lower_one_and_t(t: int, k: int) -> int:
    return max(0, _ceil(lower_one_and_t_exact(t, k)))


def lower_two_consecutive_exact(t: int, k: int) -> Fraction:
    _check_tk(t, k, tmin=3)
    if k < t:
        raise ValueError(f"D(t-1,t) lower bound needs k >= t (t={t}, k={k})")
    p = t * t - t + 1
    q = Fraction(t**3, 2) - t * t + Fraction(3 * t, 2) - 1
    return Fraction(t, 2) * k * k - p * k + q + Fraction(1, t)


def lower_two_consecutive(t: int, k: int) -> int:
    return max(0, _ceil(lower_two_consecutive_exact(t, k)))


def lower_trivial(k: int) -> int:
    """Two adjacent vertices need labels ``k`` apart."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    return k


def upper_consecutive(t: int, k: int) -> int:
    _check_tk(t, k)
    if k % 2 == 0:
        val = Fraction(t, 2) * k * k + k
    else:
        val = Fraction(t, 2) * k * k + Fraction(t, 2) * k
    return _as_int(val, f"upper_consecutive({t}, {k})")


def upper_one_and_t(t: int, k: int) -> int:
    _check_tk(t, k, tmin=3)
    if k % 2 == 0:
        raise ValueError("D(1,t) upper bound only covers odd k")
    if t % 2 == 1:
        val = Fraction(t, 2) * k * k - Fraction(1, 2)
    else:
        val = Fraction(t, 2) * k * k
    return _as_int(val, f"upper_one_and_t({t}, {k})")


def upper_two_consecutive_oddk(t: int, k: int) -> int:
    _check_tk(t, k, tmin=3)
    if k % 2 == 0 or k < 3:
        raise ValueError("D(t-1,t) upper bound needs odd k >= 3")
    val = Fraction(t, 2) * k * k + k - Fraction(t + 2, 2)
    return _as_int(val, f"upper_two_consecutive_oddk({t}, {k})")


def _is_d12(family: DistanceFamily) -> bool:
    return family.dset == (1, 2)


def best_bounds(family: DistanceFamily, k: int) -> BoundRecord:
    """Sharpest applicable closed-form bounds for ``(family, k)``.

    Formulas outside their proven range are skipped.  Every family with
    distance set {1, 2} is treated as D(1, 2).
    """
    if family.kind is Kind.GENERAL:
        raise ValueError("closed-form bounds exist only for the three named families")
    if _is_d12(family):
        family_eff = consecutive(2)
    else:
        family_eff = family
    t = family_eff.t

    lowers = [(lower_trivial(k), "k")]
    uppers = []
    kind = family_eff.kind
    if kind is Kind.CONSECUTIVE:
        lowers.append((lower_consecutive(t, k), "lower_consecutive"))
    elif kind is Kind.ONE_AND_T and 2 * k >= t:
        lowers.append((lower_one_and_t(t, k), "lower_one_and_t"))
    elif kind is Kind.TWO_CONSECUTIVE and k >= t:
        lowers.append((lower_two_consecutive(t, k), "lower_two_consecutive"))

    # D(1,t) and D(t-1,t) are spanning subgraphs of D(1..t)
    uppers.append((upper_consecutive(t, k), "upper_consecutive"))
    if kind is Kind.ONE_AND_T and k % 2 == 1:
        uppers.append((upper_one_and_t(t, k), "upper_one_and_t"))
    if kind is Kind.TWO_CONSECUTIVE and k % 2 == 1 and k >= 3:
        uppers.append((upper_two_consecutive_oddk(t, k), "upper_two_consecutive_oddk"))

    lo, lo_name = max(lowers, key=lambda p: p[0])
    up, up_name = min(uppers, key=lambda p: p[0])
    return BoundRecord(
        family=family,
        k=k,
        lower=lo,
        upper=up,
        lower_provenance=LowerSource.ANALYTIC,
        upper_provenance=UpperSource.ANALYTIC,
        lower_formula=lo_name,
        upper_formula=up_name,
    )
