"""Radio k-labeling bounds for the distance graphs D(1..t), D(1,t) and D(t-1,t)."""

__version__ = "0.1.0"

from .graph import (  # noqa: E402
    DistanceFamily,
    Kind,
    consecutive,
    distance,
    general,
    one_and_t,
    two_consecutive,
)
from .bounds import BoundRecord, best_bounds  # noqa: E402
from .patterns import PeriodicPattern, build_pattern, certified_upper, verify_periodic  # noqa: E402
from .search import SearchConfig, exact_value, find_pattern, prove_lower, t_plus_exact  # noqa: E402

__all__ = [
    "DistanceFamily",
    "Kind",
    "consecutive",
    "one_and_t",
    "two_consecutive",
    "general",
    "distance",
    "BoundRecord",
    "best_bounds",
    "PeriodicPattern",
    "build_pattern",
    "verify_periodic",
    "certified_upper",
    "SearchConfig",
    "prove_lower",
    "exact_value",
    "find_pattern",
    "t_plus_exact",
]
