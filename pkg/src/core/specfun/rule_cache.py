"""Rule cache shared by every quadrature in the process"""

import threading
from collections import OrderedDict
from collections.abc import Callable
from dataclasses import dataclass
from typing import Generic, TypeVar

from loguru import logger

from src.config import get_settings

RuleKey = tuple[str, tuple[float, ...], int]
T = TypeVar("T")


@dataclass
class CacheStats:
    """Hit/miss counters of a rule cache"""

    hits: int = 0
    misses: int = 0
    evictions: int = 0


class RuleCache(Generic[T]):
    """Lock-protected LRU memo keyed by (family, parameters, order)

    Entries are immutable once stored. Construction of a missing entry happens
    while the lock is held, so each key is built by exactly one thread.
    """

    def __init__(self, max_entries: int | None = None):
        """
        Initialize the rule cache

        Args:
            max_entries: Number of rules kept before the least recently used
                one is dropped; defaults to Settings.rule_cache_size
        """
        self._entries: OrderedDict[RuleKey, T] = OrderedDict()
        self._max_entries = max_entries or get_settings().rule_cache_size
        self._lock = threading.Lock()
        self.stats = CacheStats()

    def get_or_build(self, key: RuleKey, builder: Callable[[], T]) -> T:
        """
        Return the cached entry for key, building it on first use

        Args:
            key: (family, parameters, order)
            builder: Zero-argument constructor for a missing entry

        Returns:
            The cached entry
        """
        with self._lock:
            entry = self._entries.get(key)
            if entry is not None:
                self._entries.move_to_end(key)
                self.stats.hits += 1
                return entry

            self.stats.misses += 1
            entry = builder()
            self._entries[key] = entry
            logger.debug(f"Built rule {key[0]}{key[1]} N={key[2]}")

            while len(self._entries) > self._max_entries:
                evicted, _ = self._entries.popitem(last=False)
                self.stats.evictions += 1
                logger.debug(f"Evicted rule {evicted[0]}{evicted[1]} N={evicted[2]}")
            return entry

    def __contains__(self, key: RuleKey) -> bool:
        with self._lock:
            return key in self._entries

    def __len__(self) -> int:
        with self._lock:
            return len(self._entries)

    def clear(self) -> None:
        """Drop every cached entry"""
        with self._lock:
            self._entries.clear()
            self.stats = CacheStats()
