"""Advisory JSON file cache.

Entries are keyed by a kind string and a free-form key, carry the package
version, and are revalidated by a payload checksum on every load.  Any
mismatch or parse failure is reported as a warning and treated as a miss;
the cache can never change a result, only skip recomputation.
"""
from __future__ import annotations

import hashlib
import json
import os
import sys
import tempfile
from pathlib import Path
from typing import Optional

CACHE_VERSION = "altperm-1"


def _digest(payload) -> str:
    canonical = json.dumps(payload, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(canonical.encode()).hexdigest()


class JsonCache:
    def __init__(self, directory: os.PathLike):
        self.directory = Path(directory)
        self.directory.mkdir(parents=True, exist_ok=True)

    def _path(self, kind: str, key: str) -> Path:
        stamp = hashlib.sha256(f"{kind}|{key}".encode()).hexdigest()[:16]
        return self.directory / f"{kind}-{stamp}.json"

    def load(self, kind: str, key: str):
        path = self._path(kind, key)
        if not path.exists():
            return None
        try:
            wrapper = json.loads(path.read_text())
            if wrapper.get("version") != CACHE_VERSION or wrapper.get("key") != key:
                raise ValueError("stale cache entry")
            payload = wrapper["payload"]
            if wrapper.get("checksum") != _digest(payload):
                raise ValueError("checksum mismatch")
            return payload
        except (ValueError, KeyError, TypeError, json.JSONDecodeError) as exc:
            print(f"warning: ignoring corrupted cache file {path}: {exc}", file=sys.stderr)
            return None

    def store(self, kind: str, key: str, payload) -> None:
        path = self._path(kind, key)
        wrapper = {
            "version": CACHE_VERSION,
            "kind": kind,
            "key": key,
            "checksum": _digest(payload),
            "payload": payload,
        }
        fd, tmp = tempfile.mkstemp(dir=self.directory, suffix=".tmp")
        try:
            with os.fdopen(fd, "w") as handle:
                json.dump(wrapper, handle, sort_keys=True, indent=1)
            os.replace(tmp, path)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise


def open_cache(directory) -> Optional[JsonCache]:
    return JsonCache(directory) if directory else None
