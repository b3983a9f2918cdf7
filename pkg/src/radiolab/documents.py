"""JSON documents for patterns and prefix-search certificates.

Both share the keys ``type``, ``family``, ``t``, ``dset``, ``k`` and
``labels``; see the README for the full field list.
"""

from __future__ import annotations

import json
from pathlib import Path

from .graph import DistanceFamily, Kind
from .patterns import PeriodicPattern
from .search import ProofOutcome, Reason, Verdict

FORMAT_VERSION = 1


def _family_fields(family: DistanceFamily) -> dict:
    return {"family": family.kind.value, "t": family.t, "dset": list(family.dset)}


def _family_from(doc: dict) -> DistanceFamily:
    kind = Kind(doc["family"])
    if kind is Kind.GENERAL:
        return DistanceFamily(kind, dset=tuple(doc["dset"]))
    fam = DistanceFamily(kind, int(doc["t"]))
    if "dset" in doc and list(fam.dset) != list(doc["dset"]):
        raise ValueError(f"dset {doc['dset']} does not match {fam}")
    return fam


def pattern_to_doc(p: PeriodicPattern) -> dict:
    return {
        "type": "pattern",
        "version": FORMAT_VERSION,
        **_family_fields(p.family),
        "k": p.k,
        "period": p.period,
        "labels": list(p.labels),
        "span": p.span,
        "step": p.step,
        "source": p.source,
    }


def pattern_from_doc(doc: dict) -> PeriodicPattern:
    if doc.get("type", "pattern") != "pattern":
        raise ValueError(f"not a pattern document: type={doc.get('type')!r}")
    labels = [int(x) for x in doc["labels"]]
    if "period" in doc and int(doc["period"]) != len(labels):
        raise ValueError(f"period {doc['period']} does not match {len(labels)} labels")
    return PeriodicPattern(_family_from(doc), int(doc["k"]), tuple(labels),
                           step=int(doc.get("step", 0)), source=doc.get("source", ""))


def proof_to_doc(o: ProofOutcome) -> dict:
    return {
        "type": "proof",
        "version": FORMAT_VERSION,
        **_family_fields(o.family),
        "k": o.k,
        "l": o.l,
        "verdict": o.verdict.value,
        "prefix": o.prefix_used,
        "reason": o.reason.value if o.reason else None,
        "labels": list(o.witness) if o.witness is not None else None,
        "nodes": o.nodes,
        "elapsed": o.elapsed,
    }


def proof_from_doc(doc: dict) -> ProofOutcome:
    if doc.get("type") != "proof":
        raise ValueError(f"not a proof document: type={doc.get('type')!r}")
    return ProofOutcome(
        family=_family_from(doc),
        k=int(doc["k"]),
        l=int(doc["l"]),
        verdict=Verdict(doc["verdict"]),
        prefix_used=int(doc["prefix"]),
        reason=Reason(doc["reason"]) if doc.get("reason") else None,
        witness=tuple(doc["labels"]) if doc.get("labels") is not None else None,
        nodes=int(doc.get("nodes", 0)),
        elapsed=float(doc.get("elapsed", 0.0)),
    )


def dump(doc: dict, path: str | Path | None = None) -> str:
    text = json.dumps(doc, indent=2) + "\n"
    if path is not None:
        Path(path).write_text(text)
    return text


def load(path: str | Path) -> dict:
    return json.loads(Path(path).read_text())
