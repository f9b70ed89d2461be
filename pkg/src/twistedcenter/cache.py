"""
Versioned on-disk JSON cache.

Disabled unless a directory is configured, either through `configure` or the
TWC_CACHE_DIR environment variable.  Entries live under
<dir>/v<CACHE_VERSION>/<kind>/<key>.json; bumping CACHE_VERSION invalidates
every existing entry.  Writes go through a temporary file and an atomic
rename, so concurrent writers of the same entry are harmless.
"""

from __future__ import annotations

import json
import os
import tempfile
from pathlib import Path
from typing import Any, Optional

CACHE_VERSION = 1

_cache_dir: Optional[Path] = None
_configured = False


def configure(path: Optional[os.PathLike | str]) -> None:
    global _cache_dir, _configured
    _cache_dir = Path(path) if path else None
    _configured = True


def cache_dir() -> Optional[Path]:
    if _configured:
        return _cache_dir
    env = os.environ.get("TWC_CACHE_DIR")
    return Path(env) if env else None


def _path(kind: str, key: str) -> Optional[Path]:
    root = cache_dir()
    if root is None:
        return None
    return root / f"v{CACHE_VERSION}" / kind / f"{key}.json"


def load(kind: str, key: str) -> Any:
    path = _path(kind, key)
    if path is None or not path.exists():
        return None
    try:
        payload = json.loads(path.read_text())
    except (OSError, ValueError):
        return None
    if payload.get("version") != CACHE_VERSION or payload.get("key") != key:
        return None
    return payload["data"]


def store(kind: str, key: str, data: Any) -> None:
    path = _path(kind, key)
    if path is None:
        return
    path.parent.mkdir(parents=True, exist_ok=True)
    payload = {"version": CACHE_VERSION, "kind": kind, "key": key, "data": data}
    fd, tmp = tempfile.mkstemp(dir=path.parent, suffix=".tmp")
    with os.fdopen(fd, "w") as fh:
        json.dump(payload, fh)
    os.replace(tmp, path)
