"""Content-addressed on-disk cache for deterministic CLI results.

Keys are sha256 hashes of the canonical JSON of (command, Cartan matrix,
parameters, code version); payloads are the exact result objects.  Writes go
through a temporary file and an atomic rename, so concurrent invocations can
only ever observe complete entries.  An unwritable or corrupted cache is
never a hard failure: the computation simply proceeds without it.
"""

from __future__ import annotations

import hashlib
import json
import os
import sys
import tempfile
import time

from . import __version__

DEFAULT_DIR = ".silc-cache"
ENV_VAR = "SILC_CACHE"


def cache_dir() -> str:
    return os.environ.get(ENV_VAR, DEFAULT_DIR)


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def cache_key(command: str, cartan_entries, parameters) -> str:
    payload = {
        "version": __version__,
        "command": command,
        "cartan": [list(row) for row in cartan_entries],
        "parameters": parameters,
    }
    return hashlib.sha256(canonical_json(payload).encode("utf-8")).hexdigest()


def _entry_path(key: str) -> str:
    return os.path.join(cache_dir(), key + ".json")


def load(key: str):
    """The cached payload for the key, or None (missing, stale, corrupt)."""
    path = _entry_path(key)
    try:
        with open(path, "r", encoding="utf-8") as fh:
            entry = json.load(fh)
    except (OSError, ValueError):
        return None
    if entry.get("key") != key:
        return None
    return entry.get("payload")


def store(key: str, payload) -> None:
    """Write the payload atomically; warn and skip on unwritable targets."""
    directory = cache_dir()
    entry = {"key": key, "payload": payload, "created_at": time.time()}
    try:
        os.makedirs(directory, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=directory, suffix=".tmp")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as fh:
                json.dump(entry, fh, sort_keys=True)
            os.replace(tmp, _entry_path(key))
        finally:
            if os.path.exists(tmp):
                os.unlink(tmp)
    except OSError as exc:
        print(f"warning: cache bypassed ({exc})", file=sys.stderr)
