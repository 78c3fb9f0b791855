"""
Snapshot cache module for hyperlap
Keeps embedded complexes of filtration snapshots so a sweep builds each one once
"""

import logging
import threading
import time
from collections import OrderedDict
from typing import Any, Callable, Dict, Hashable, Optional, Tuple

import config
from complexes.embedded import EmbeddedComplex

logger = logging.getLogger(__name__)

DEFAULT_CACHE_SIZE_LIMIT = 100


class CacheEntry:
    """A cached value with access metadata"""

    def __init__(self, value: Any):
        self.value = value
        self.created_at = time.time()
        self.access_count = 0
        self.last_accessed = self.created_at

    def access(self) -> Any:
        self.access_count += 1
        self.last_accessed = time.time()
        return self.value

    def to_dict(self) -> Dict[str, Any]:
        return {
            "created_at": self.created_at,
            "access_count": self.access_count,
            "last_accessed": self.last_accessed,
        }


class SnapshotCache:
    """Bounded LRU cache with hit/miss statistics, safe to share between sweep threads"""

    def __init__(self, max_entries: Optional[int] = None):
        self._cache: "OrderedDict[Hashable, CacheEntry]" = OrderedDict()
        self._max_entries = max_entries or config.CACHE_SIZE_LIMIT or DEFAULT_CACHE_SIZE_LIMIT
        self._stats = {
            "hits": 0,
            "misses": 0,
            "sets": 0,
            "clears": 0,
            "evictions": 0,
        }
        self._lock = threading.Lock()
        self._building: Dict[Hashable, threading.Lock] = {}
        logger.debug(f"Snapshot cache initialized - Max entries: {self._max_entries}")

    def get(self, key: Hashable) -> Optional[Any]:
        with self._lock:
            entry = self._cache.get(key)
            if entry is None:
                self._stats["misses"] += 1
                return None
            self._cache.move_to_end(key)
            self._stats["hits"] += 1
            return entry.access()

    def set(self, key: Hashable, value: Any):
        with self._lock:
            self._cache[key] = CacheEntry(value)
            self._cache.move_to_end(key)
            self._stats["sets"] += 1
            while len(self._cache) > self._max_entries:
                evicted, _ = self._cache.popitem(last=False)
                self._stats["evictions"] += 1
                logger.debug(f"Evicted snapshot {evicted}")

    def get_or_build(self, key: Hashable, builder: Callable[[], Any]) -> Any:
        """Cached value for key, building and storing it on a miss.

        Concurrent misses on one key wait on a per-key lock, so the
        builder runs once per key.
        """
        value = self.get(key)
        if value is not None:
            return value
        with self._lock:
            key_lock = self._building.setdefault(key, threading.Lock())
        try:
            with key_lock:
                with self._lock:
                    entry = self._cache.get(key)
                    if entry is not None:
                        self._cache.move_to_end(key)
                        self._stats["hits"] += 1
                        return entry.access()
                value = builder()
                self.set(key, value)
                return value
        finally:
            with self._lock:
                if self._building.get(key) is key_lock:
                    del self._building[key]

    def clear(self):
        with self._lock:
            count = len(self._cache)
            self._cache.clear()
            self._stats["clears"] += 1
            logger.debug(f"Cleared {count} cached snapshots")

    def get_stats(self) -> Dict[str, Any]:
        with self._lock:
            lookups = self._stats["hits"] + self._stats["misses"]
            hit_rate = (self._stats["hits"] / lookups * 100) if lookups else 0.0
            return {
                **self._stats,
                "entries": len(self._cache),
                "max_entries": self._max_entries,
                "hit_rate": round(hit_rate, 2),
            }

    def log_stats(self):
        stats = self.get_stats()
        logger.info(
            f"Snapshot cache - {stats['entries']} entries, {stats['hits']} hits, "
            f"{stats['misses']} misses ({stats['hit_rate']}% hit rate), "
            f"{stats['evictions']} evictions"
        )

    def __len__(self) -> int:
        return len(self._cache)


# Global snapshot cache
snapshot_cache = SnapshotCache()


def snapshot_key(filtration, value: float, max_dim: int) -> Tuple[int, float, int]:
    return (filtration.uid, value, max_dim)


def get_snapshot_complex(
    filtration, value: float, max_dim: int, cache: Optional[SnapshotCache] = None
) -> EmbeddedComplex:
    """Embedded complex of the snapshot at an already snapped filtration value"""
    cache = snapshot_cache if cache is None else cache
    return cache.get_or_build(
        snapshot_key(filtration, value, max_dim),
        lambda: EmbeddedComplex(filtration.snapshot(value), max_dim=max_dim),
    )


def get_cache_stats() -> Dict[str, Any]:
    return snapshot_cache.get_stats()


def clear_cache():
    snapshot_cache.clear()


__all__ = [
    "CacheEntry",
    "SnapshotCache",
    "snapshot_cache",
    "snapshot_key",
    "get_snapshot_complex",
    "get_cache_stats",
    "clear_cache",
]
