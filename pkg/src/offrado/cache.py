"""Run records and the append-only JSONL result cache used by the CLI.

One JSON record per line, keyed by (red equation, blue equation, bound,
algorithm version); the last matching line wins, so re-running never
rewrites history.  The cache directory defaults to ~/.cache/offrado and
can be moved with the OFFRADO_CACHE_DIR environment variable.
"""

from __future__ import annotations

import json
import os
from dataclasses import asdict, dataclass
from datetime import datetime, timezone
from pathlib import Path

from .certificates import PeriodicCertificate
from .coloring import Color, Coloring
from .solver import Finite, InfiniteCertified, SearchResult, Unknown

CACHE_DIR_ENV = "OFFRADO_CACHE_DIR"
CACHE_FILENAME = "results.jsonl"


def result_to_dict(res: SearchResult) -> dict:
    """Serialize a search result to a JSON-compatible dict."""
    if isinstance(res, Finite):
        return {
            "kind": "finite",
            "value": res.value,
            "witness": res.witness.chars,
            "nodes": res.nodes_explored,
        }
    if isinstance(res, Unknown):
        return {
            "kind": "unknown",
            "bound": res.bound,
            "witness": res.witness.chars,
            "nodes": res.nodes_explored,
        }
    if isinstance(res, InfiniteCertified):
        return {
            "kind": "infinite-certified",
            "period": res.certificate.period,
            "residues": res.certificate.as_string(),
        }
    raise TypeError(f"not a search result: {res!r}")


def result_from_dict(d: dict) -> SearchResult:
    """Inverse of result_to_dict."""
    kind = d.get("kind")
    if kind == "finite":
        return Finite(d["value"], Coloring(d["witness"]), d["nodes"])
    if kind == "unknown":
        return Unknown(d["bound"], Coloring(d["witness"]), d["nodes"])
    if kind == "infinite-certified":
        colors = tuple(Color(ch) for ch in d["residues"])
        return InfiniteCertified(PeriodicCertificate(d["period"], colors))
    raise ValueError(f"unknown search result kind: {kind!r}")


@dataclass(frozen=True)
class RunRecord:
    """One cached solver run; serialization round-trips losslessly."""

    red: str
    blue: str
    bound: int
    algorithm_version: str
    result: dict
    formula: str | None  # "8", "INF", or None when not applicable
    created_at: str  # ISO-8601 UTC
    millis: int
    nodes: int
    tool_version: str

    def key(self) -> tuple[str, str, int, str]:
        return (self.red, self.blue, self.bound, self.algorithm_version)

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)

    @classmethod
    def from_json(cls, line: str) -> RunRecord:
        return cls(**json.loads(line))


def utc_now_iso() -> str:
    return datetime.now(timezone.utc).isoformat(timespec="seconds")


def cache_dir() -> Path:
    override = os.environ.get(CACHE_DIR_ENV)
    if override:
        return Path(override)
    return Path.home() / ".cache" / "offrado"


def cache_path() -> Path:
    return cache_dir() / CACHE_FILENAME


def load_records(path: Path | None = None) -> list[RunRecord]:
    path = cache_path() if path is None else path
    if not path.exists():
        return []
    records = []
    with path.open() as fh:
        for line in fh:
            line = line.strip()
            if line:
                records.append(RunRecord.from_json(line))
    return records


def lookup(
    red: str, blue: str, bound: int, algorithm_version: str, path: Path | None = None
) -> RunRecord | None:
    """Most recent record with the given key, or None."""
    key = (red, blue, bound, algorithm_version)
    found = None
    for rec in load_records(path):
        if rec.key() == key:
            found = rec
    return found


def append_record(rec: RunRecord, path: Path | None = None) -> Path:
    path = cache_path() if path is None else path
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("a") as fh:
        fh.write(rec.to_json() + "\n")
    return path
