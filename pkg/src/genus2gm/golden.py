"""Directory-backed store of committed reference data.

Each check that compares a computed object against committed reference
data reads one JSON document from this store, keyed by the check id.  A
document carries the anchor naming the reference object and an arbitrary
JSON payload holding the transcribed or frozen data; polynomial and
matrix payloads use the wire format of `serialize`.

Documents are written with `canonical_dumps`, so loading a file and
re-serializing its parsed content reproduces the file bytes exactly.
`verify_bytes` checks that invariant for a single key and the test suite
asserts it for the whole committed tree.
"""

from __future__ import annotations

import json
from pathlib import Path

from .serialize import canonical_dumps

DEFAULT_ROOT = Path(__file__).resolve().parent / "golden"


class GoldenMissingError(FileNotFoundError):
    """A check asked for a reference entry that is not in the store."""


class GoldenFormatError(ValueError):
    """A reference file exists but does not parse as a golden document."""


class GoldenStore:
    """Read/write access to one directory of reference documents."""

    def __init__(self, root: Path | str | None = None) -> None:
        self.root = Path(root) if root is not None else DEFAULT_ROOT

    def path(self, check_id: str) -> Path:
        return self.root / f"{check_id}.json"

    def has(self, check_id: str) -> bool:
        return self.path(check_id).is_file()

    def keys(self) -> list[str]:
        if not self.root.is_dir():
            return []
        return sorted(p.name[:-len(".json")]
                      for p in self.root.glob("*.json"))

    def load(self, check_id: str) -> dict:
        """The full document {"id", "anchor", "payload"} for a check."""
        path = self.path(check_id)
        if not path.is_file():
            raise GoldenMissingError(
                f"no reference data for check '{check_id}' "
                f"(expected {path})")
        try:
            doc = json.loads(path.read_text())
        except json.JSONDecodeError as exc:
            raise GoldenFormatError(f"{path}: {exc}") from exc
        if (not isinstance(doc, dict)
                or set(doc) != {"id", "anchor", "payload"}
                or doc["id"] != check_id):
            raise GoldenFormatError(
                f"{path}: not a golden document for '{check_id}'")
        return doc

    def payload(self, check_id: str) -> dict:
        return self.load(check_id)["payload"]

    def anchor(self, check_id: str) -> str:
        return self.load(check_id)["anchor"]

    def save(self, check_id: str, anchor: str, payload) -> Path:
        doc = {"id": check_id, "anchor": anchor, "payload": payload}
        path = self.path(check_id)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(canonical_dumps(doc))
        return path

    def verify_bytes(self, check_id: str) -> bool:
        """Loading then re-serializing reproduces the file byte-for-byte."""
        path = self.path(check_id)
        raw = path.read_text()
        return canonical_dumps(json.loads(raw)) == raw
