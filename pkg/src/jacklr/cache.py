"""On-disk cache of Jack expansions. Advisory only: anything unreadable or
written by another format version is ignored and recomputed."""

from __future__ import annotations

import json
import logging
import os
import tempfile
import threading
from pathlib import Path

from .algebra import RatFunc1, UniPoly
from .partitions import Partition

CACHE_VERSION = 1
log = logging.getLogger(__name__)


def _encode(f: RatFunc1) -> dict:
    num, den = f.integer_form()
    return {"num": num, "den": den}


def _decode(obj: dict) -> RatFunc1:
    num, den = obj["num"], obj["den"]
    if not all(isinstance(c, int) for c in num + den) or not den:
        raise ValueError("non-integer coefficients")
    return RatFunc1(UniPoly(num), UniPoly(den))


class DiskStore:
    def __init__(self, root):
        self.root = Path(root)
        self._lock = threading.Lock()

    def path(self, lam: Partition, n: int) -> Path:
        name = "_".join(str(p) for p in lam) or "empty"
        return self.root / f"jackP-{name}-n{n}.json"

    def load(self, lam: Partition, n: int):
        from .jack import SymExpansion

        p = self.path(lam, n)
        try:
            data = json.loads(p.read_text())
            if data.get("version") != CACHE_VERSION:
                raise ValueError(f"version {data.get('version')!r}")
            if data["lambda"] != list(lam) or data["n"] != n:
                raise ValueError("key mismatch")
            coeffs = {Partition(k): _decode(v) for k, v in data["coeffs"]}
            return SymExpansion("m", coeffs)
        except FileNotFoundError:
            return None
        except (ValueError, KeyError, TypeError) as exc:
            log.info("ignoring cache file %s: %s", p, exc)
            return None

    def save(self, lam: Partition, n: int, value) -> None:
        data = {
            "version": CACHE_VERSION,
            "lambda": list(lam),
            "n": n,
            "coeffs": [[list(k), _encode(v)] for k, v in value.items()],
        }
        text = json.dumps(data, sort_keys=True, separators=(",", ":"))
        with self._lock:
            try:
                self.root.mkdir(parents=True, exist_ok=True)
                fd, tmp = tempfile.mkstemp(dir=self.root, suffix=".tmp")
                with os.fdopen(fd, "w") as fh:
                    fh.write(text)
                os.replace(tmp, self.path(lam, n))
            except OSError as exc:
                log.info("cache write failed: %s", exc)


def attach(root) -> DiskStore:
    """Back the Jack expansion table with files under ``root``."""
    from .jack import jack_P_cache

    store = DiskStore(root)
    jack_P_cache.store = store
    return store


def detach() -> None:
    from .jack import jack_P_cache

    jack_P_cache.store = None
