"""Append-only cache of prefix-search outcomes.

One JSON object per line: ``{"key": [...], "proof": <proof document>}``.
The file name carries the package version, so upgrading starts a fresh
cache.  Budget-exhausted outcomes are never stored.
"""

from __future__ import annotations

import json
import os
from pathlib import Path

from . import __version__
from .documents import proof_from_doc, proof_to_doc
from .graph import DistanceFamily
from .search import ProofOutcome, Reason, SearchConfig

ENV_VAR = "RADIOLAB_CACHE_DIR"


def default_cache_dir() -> Path:
    env = os.environ.get(ENV_VAR)
    if env:
        return Path(env)
    return Path(os.environ.get("XDG_CACHE_HOME", Path.home() / ".cache")) / "radiolab"


def _key(family: DistanceFamily, k: int, l: int, config: SearchConfig) -> list:
    return [str(family), k, l, config.max_prefix, config.node_budget, config.time_budget]


class ResultCache:
    def __init__(self, directory: str | Path | None = None):
        self.directory = Path(directory) if directory is not None else default_cache_dir()
        self.path = self.directory / f"proofs-v{__version__}.jsonl"
        self._entries: dict[str, dict] = {}
        if self.path.exists():
            with self.path.open() as fh:
                for line in fh:
                    line = line.strip()
                    if not line:
                        continue
                    try:
                        rec = json.loads(line)
                    except json.JSONDecodeError:
                        continue  # torn final line from an interrupted run
                    self._entries[json.dumps(rec["key"])] = rec["proof"]

    def __len__(self):
        return len(self._entries)

    def get_proof(self, family, k, l, config) -> ProofOutcome | None:
        doc = self._entries.get(json.dumps(_key(family, k, l, config)))
        return proof_from_doc(doc) if doc is not None else None

    def put_proof(self, outcome: ProofOutcome, config: SearchConfig) -> None:
        if outcome.reason is Reason.BUDGET:
            return
        key = _key(outcome.family, outcome.k, outcome.l, config)
        doc = proof_to_doc(outcome)
        self._entries[json.dumps(key)] = doc
        self.directory.mkdir(parents=True, exist_ok=True)
        with self.path.open("a") as fh:
            fh.write(json.dumps({"key": key, "proof": doc}) + "\n")
