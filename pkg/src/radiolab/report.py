"""Bound grids joined against the reference tables, with CSV/JSON output."""

from __future__ import annotations

import csv
import enum
import io
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable

from .bounds import BoundRecord, LowerSource, UpperSource
from .graph import DistanceFamily, Kind
from .reference import ReferenceEntry, load_reference
from .search import SearchConfig, exact_value

__all__ = ["Status", "GridRow", "GridReport", "run_grid", "classify", "REPORT_FIELDS"]


class Status(str, enum.Enum):
    MATCH = "match"
    TIGHTER = "tighter"
    LOOSER = "looser"
    CONFLICT = "conflict"
    NO_REFERENCE = "no-reference"
    ERROR = "error"


REPORT_FIELDS = [
    "family", "t", "k", "lower", "upper", "exact", "source",
    "ref_lower", "ref_upper", "ref_exact", "ref_source",
    "lower_provenance", "upper_provenance", "lower_formula", "upper_formula",
    "status", "error",
]


def classify(ref: ReferenceEntry | None, rec: BoundRecord | None) -> Status:
    if rec is None:
        return Status.ERROR
    if ref is None:
        return Status.NO_REFERENCE
    upper = rec.upper
    if rec.lower > ref.upper or (upper is not None and upper < ref.lower):
        return Status.CONFLICT
    if rec.lower == ref.lower and upper == ref.upper:
        return Status.MATCH
    if rec.lower >= ref.lower and upper is not None and upper <= ref.upper:
        return Status.TIGHTER
    return Status.LOOSER


@dataclass(frozen=True)
class GridRow:
    family: DistanceFamily
    k: int
    reference: ReferenceEntry | None
    computed: BoundRecord | None
    status: Status
    error: str = ""

    def to_dict(self) -> dict:
        rec, ref = self.computed, self.reference
        return {
            "family": self.family.kind.value,
            "t": self.family.t,
            "k": self.k,
            "lower": rec.lower if rec else None,
            "upper": rec.upper if rec else None,
            "exact": rec.exact if rec else None,
            "source": "computed",
            "ref_lower": ref.lower if ref else None,
            "ref_upper": ref.upper if ref else None,
            "ref_exact": ref.exact if ref else None,
            "ref_source": ref.source if ref else None,
            "lower_provenance": rec.lower_provenance.value if rec else None,
            "upper_provenance": rec.upper_provenance.value if rec and rec.upper_provenance else None,
            "lower_formula": rec.lower_formula if rec else None,
            "upper_formula": rec.upper_formula if rec else None,
            "status": self.status.value,
            "error": self.error,
        }

    @classmethod
    def from_dict(cls, d: dict) -> GridRow:
        fam = DistanceFamily.parse(d["family"], int(d["t"]))
        k = int(d["k"])
        ref = None
        if d.get("ref_lower") not in (None, ""):
            ref = ReferenceEntry(fam, k, int(d["ref_lower"]), int(d["ref_upper"]),
                                 _as_bool(d["ref_exact"]), d.get("ref_source") or "")
        rec = None
        if d.get("lower") not in (None, ""):
            upper = d.get("upper")
            up_prov = d.get("upper_provenance")
            rec = BoundRecord(
                fam, k, int(d["lower"]),
                int(upper) if upper not in (None, "") else None,
                LowerSource(d["lower_provenance"]),
                UpperSource(up_prov) if up_prov else None,
                lower_formula=d.get("lower_formula") or "",
                upper_formula=d.get("upper_formula") or "",
            )
        return cls(fam, k, ref, rec, Status(d["status"]), d.get("error") or "")


def _as_bool(v) -> bool:
    if isinstance(v, bool):
        return v
    return str(v).strip().lower() == "true"


@dataclass
class GridReport:
    rows: list[GridRow] = field(default_factory=list)

    def __eq__(self, other):
        return isinstance(other, GridReport) and self.rows == other.rows

    @property
    def conflicts(self) -> list[GridRow]:
        return [r for r in self.rows if r.status is Status.CONFLICT]

    def to_json(self) -> str:
        return json.dumps([r.to_dict() for r in self.rows], indent=2) + "\n"

    @classmethod
    def from_json(cls, text: str) -> GridReport:
        return cls([GridRow.from_dict(d) for d in json.loads(text)])

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=REPORT_FIELDS, lineterminator="\n")
        w.writeheader()
        for r in self.rows:
            d = r.to_dict()
            w.writerow({k: ("" if v is None else str(v).lower() if isinstance(v, bool) else v)
                        for k, v in d.items()})
        return buf.getvalue()

    @classmethod
    def from_csv(cls, text: str) -> GridReport:
        reader = csv.DictReader(io.StringIO(text))
        if reader.fieldnames != REPORT_FIELDS:
            raise ValueError(f"unexpected report header {reader.fieldnames}")
        return cls([GridRow.from_dict(d) for d in reader])


def _cell(args) -> GridRow:
    family, k, ref, config, cache = args
    try:
        rec = exact_value(family, k, config, cache=cache).record
    except Exception as exc:  # noqa: BLE001 - recorded per row, grid keeps going
        return GridRow(family, k, ref, None, Status.ERROR, f"{type(exc).__name__}: {exc}")
    return GridRow(family, k, ref, rec, classify(ref, rec))


def run_grid(kinds: Iterable[Kind | str], t_range: Iterable[int], k_range: Iterable[int],
             config: SearchConfig | None = None, reference=None, cache=None,
             workers: int = 1) -> GridReport:
    """Compute bounds for every ``(kind, t, k)`` cell and join with the reference.

    Rows come out ordered by family kind (as given), then t, then k,
    regardless of ``workers``.
    """
    config = config or SearchConfig()
    if reference is None:
        reference = load_reference()
    kinds = [Kind(k) for k in kinds]
    t_range, k_range = list(t_range), list(k_range)
    jobs = []
    for kind in kinds:
        for t in t_range:
            try:
                fam = DistanceFamily(kind, t)
            except ValueError:
                continue
            for k in k_range:
                ref = reference.get((kind.value, t, k))
                jobs.append((fam, k, ref, config, cache if workers == 1 else None))
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            rows = list(ex.map(_cell, jobs))
    else:
        rows = [_cell(j) for j in jobs]
    return GridReport(rows)
