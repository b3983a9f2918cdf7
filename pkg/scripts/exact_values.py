"""Close the small cells whose exact value is within desk reach and show how each bound was certified."""

import time

from radiolab.graph import consecutive, one_and_t, two_consecutive
from radiolab.search import SearchConfig, exact_value

CELLS = [
    (consecutive(2), 2), (consecutive(2), 3), (consecutive(3), 2),
    (one_and_t(3), 2), (one_and_t(3), 3),
    (two_consecutive(3), 3), (two_consecutive(4), 2),
]


def main() -> None:
    cfg = SearchConfig()
    for fam, k in CELLS:
        t0 = time.perf_counter()
        res = exact_value(fam, k, cfg)
        rec = res.record
        proven = [p for p in res.proofs if p.proven]
        deepest = max((p.prefix_used for p in proven), default=0)
        value = rec.lower if rec.exact else f"{rec.lower}..{rec.upper}"
        print(f"rl_{k}({fam.label}) = {value:<6} lower: {rec.lower_provenance.value:<20} "
              f"(longest prefix {deepest})  upper: period-{res.pattern.period} pattern "
              f"{list(res.pattern.labels)}  [{time.perf_counter() - t0:.2f}s]")


if __name__ == "__main__":
    main()
