"""Published small-case values of rl_k, shipped as a CSV resource.

Columns: ``family,t,k,lower,upper,exact,source``.  ``exact`` marks values the
original tables print in bold; everything else is a lower-upper range.
"""

from __future__ import annotations

import csv
import hashlib
import io
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .graph import DistanceFamily

__all__ = ["ReferenceEntry", "load_reference", "reference_text", "REFERENCE_SHA256", "CSV_FIELDS"]

CSV_FIELDS = ["family", "t", "k", "lower", "upper", "exact", "source"]

# sha256 of data/reference_tables.csv as transcribed; any edit must update this.
REFERENCE_SHA256 = "ee485abe261382bccf77df294d86f6d3d50b380f05df90257d8f484ddb9d8748"


@dataclass(frozen=True)
class ReferenceEntry:
    family: DistanceFamily
    k: int
    lower: int
    upper: int
    exact: bool
    source: str = ""

    def __post_init__(self):
        if self.lower > self.upper:
            raise ValueError(f"reference lower {self.lower} > upper {self.upper}")
        if self.exact and self.lower != self.upper:
            raise ValueError("exact reference entry must have lower == upper")

    @property
    def t(self) -> int:
        return self.family.t


def _parse_bool(text: str) -> bool:
    text = text.strip().lower()
    if text in ("true", "1", "yes"):
        return True
    if text in ("false", "0", "no"):
        return False
    raise ValueError(f"not a boolean: {text!r}")


def reference_text(path: str | Path | None = None) -> str:
    if path is None:
        return resources.files("radiolab").joinpath("data/reference_tables.csv").read_text()
    return Path(path).read_text()


def load_reference(path: str | Path | None = None) -> dict[tuple[str, int, int], ReferenceEntry]:
    """Entries keyed by ``(family kind, t, k)``."""
    text = reference_text(path)
    out = {}
    reader = csv.DictReader(io.StringIO(text))
    if reader.fieldnames != CSV_FIELDS:
        raise ValueError(f"unexpected reference header {reader.fieldnames}")
    for row in reader:
        fam = DistanceFamily.parse(row["family"], int(row["t"]))
        entry = ReferenceEntry(fam, int(row["k"]), int(row["lower"]), int(row["upper"]),
                               _parse_bool(row["exact"]), row["source"])
        out[(fam.kind.value, fam.t, entry.k)] = entry
    return out


def checksum(path: str | Path | None = None) -> str:
    return hashlib.sha256(reference_text(path).encode()).hexdigest()
