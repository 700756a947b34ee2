"""Session directories: one JSON file per object plus a checksummed index.

::

    <dir>/index.json          {"version", "created", "objects": {name: entry}}
    <dir>/<kind>-<slug>-<hash>.json  object payload

Every entry records the sha256 of its file and the names it refers to.
Loading verifies both and returns nothing unless everything checks out.
"""

from __future__ import annotations

import hashlib
import logging
import os
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Iterable, Optional

import orjson
from slugify import slugify

from ..reports.report import dumps_report

logger = logging.getLogger(__name__)

SESSION_VERSION = "1"
KINDS = ("field", "group", "instance", "tower", "certification", "report")


class SessionCorrupt(ValueError):
    pass


@dataclass(frozen=True)
class SessionEntry:
    name: str
    kind: str
    file: str
    sha256: str
    refs: tuple[str, ...] = ()

    def to_json(self) -> dict:
        return {"kind": self.kind, "file": self.file, "sha256": self.sha256, "refs": list(self.refs)}


def _digest(data: bytes) -> str:
    return hashlib.sha256(data).hexdigest()


def _atomic_write(path: Path, data: bytes) -> None:
    tmp = path.with_suffix(path.suffix + ".tmp")
    tmp.write_bytes(data)
    os.replace(tmp, path)


class Session:
    def __init__(self, root: Path):
        self.root = Path(root)
        self.root.mkdir(parents=True, exist_ok=True)
        self._meta: dict[str, Any] = {}
        self._entries: dict[str, SessionEntry] = {}
        if self.index_path.exists():
            self._read_index()
        else:
            self._meta = {
                "version": SESSION_VERSION,
                "created": datetime.now(timezone.utc).isoformat(timespec="seconds"),
                "created_by": "gtcf",
            }
            self._write_index()

    @property
    def index_path(self) -> Path:
        return self.root / "index.json"

    def _read_index(self) -> None:
        try:
            raw = orjson.loads(self.index_path.read_bytes())
            objects = raw.pop("objects")
            entries = {
                name: SessionEntry(name, e["kind"], e["file"], e["sha256"], tuple(e.get("refs", ())))
                for name, e in objects.items()
            }
        except (orjson.JSONDecodeError, KeyError, TypeError, AttributeError) as exc:
            raise SessionCorrupt(f"unreadable index in {self.root}: {exc}") from exc
        if raw.get("version") != SESSION_VERSION:
            raise SessionCorrupt(f"session version {raw.get('version')!r}, expected {SESSION_VERSION}")
        self._meta, self._entries = raw, entries

    def _write_index(self) -> None:
        body = {**self._meta, "objects": {n: e.to_json() for n, e in sorted(self._entries.items())}}
        _atomic_write(self.index_path, dumps_report(body, pretty=True))

    def names(self, kind: Optional[str] = None) -> list[str]:
        return sorted(n for n, e in self._entries.items() if kind is None or e.kind == kind)

    def __contains__(self, name: str) -> bool:
        return name in self._entries

    def entry(self, name: str) -> SessionEntry:
        if name not in self._entries:
            raise KeyError(name)
        return self._entries[name]

    def put(self, name: str, kind: str, payload: Any, refs: Iterable[str] = ()) -> SessionEntry:
        if kind not in KINDS:
            raise ValueError(f"unknown session object kind {kind!r}")
        refs = tuple(refs)
        missing = [r for r in refs if r not in self._entries]
        if missing:
            raise ValueError(f"{name} refers to unknown objects {missing}")
        data = dumps_report(payload, pretty=True)
        # the digest keeps names that share a slug in separate files
        file = f"{kind}-{slugify(name)[:48] or 'object'}-{_digest(name.encode())[:8]}.json"
        _atomic_write(self.root / file, data)
        entry = SessionEntry(name, kind, file, _digest(data), refs)
        self._entries[name] = entry
        self._write_index()
        logger.info("session %s: stored %s %s", self.root, kind, name)
        return entry

    def _read(self, entry: SessionEntry) -> Any:
        path = self.root / entry.file
        if not path.exists():
            raise SessionCorrupt(f"{entry.name}: missing file {entry.file}")
        data = path.read_bytes()
        if _digest(data) != entry.sha256:
            raise SessionCorrupt(f"{entry.name}: checksum mismatch in {entry.file}")
        return orjson.loads(data)

    def get(self, name: str) -> Any:
        entry = self.entry(name)
        for r in entry.refs:
            if r not in self._entries:
                raise SessionCorrupt(f"{name} refers to missing object {r}")
        return self._read(entry)

    def load(self) -> dict[str, Any]:
        """Every object, or SessionCorrupt with nothing returned."""
        out: dict[str, Any] = {}
        for name, entry in sorted(self._entries.items()):
            for r in entry.refs:
                if r not in self._entries:
                    raise SessionCorrupt(f"{name} refers to missing object {r}")
            out[name] = self._read(entry)
        return out

    def to_json(self) -> dict:
        return {
            "root": str(self.root.as_posix()),
            **self._meta,
            "objects": {n: e.to_json() for n, e in sorted(self._entries.items())},
        }
