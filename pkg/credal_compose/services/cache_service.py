"""
Cache Service - мемоизация преобразований многогранников
"""
import logging
import threading
from dataclasses import dataclass
from typing import Any, Dict, Hashable, Optional

logger = logging.getLogger(__name__)


@dataclass
class CacheEntry:
    """Запись в кэше"""
    value: Any
    hits: int = 0


class CacheService:
    """Ограниченный кэш с вытеснением наименее используемой записи"""

    def __init__(self, max_size: int = 512, enabled: bool = True):
        """
        Инициализация сервиса кэширования

        Args:
            max_size: Максимальный размер кэша
            enabled: Если False, get всегда промахивается и set ничего не сохраняет
        """
        self.max_size = max_size
        self.enabled = enabled
        self.cache: Dict[Hashable, CacheEntry] = {}
        self._lock = threading.Lock()
        self.misses = 0
        logger.info(f"Cache Service initialized (size={max_size}, enabled={enabled})")

    def get(self, key: Hashable) -> Optional[Any]:
        """
        Получить значение из кэша

        Args:
            key: Неизменяемый ключ (например, VertexSet)

        Returns:
            Закэшированное значение или None
        """
        if not self.enabled:
            return None
        with self._lock:
            entry = self.cache.get(key)
            if entry is None:
                self.misses += 1
                return None
            entry.hits += 1
            return entry.value

    def set(self, key: Hashable, value: Any):
        """
        Сохранить значение в кэш

        Args:
            key: Неизменяемый ключ
            value: Значение для кэширования
        """
        if not self.enabled:
            return
        with self._lock:
            if key not in self.cache and len(self.cache) >= self.max_size:
                self._evict_least_used()
            self.cache[key] = CacheEntry(value=value)

    def _evict_least_used(self):
        """Удаляет наименее используемую запись"""
        if not self.cache:
            return

        # Находим запись с наименьшим количеством попаданий
        least_used_key = min(self.cache.keys(), key=lambda k: self.cache[k].hits)
        logger.debug(f"Evicting least used entry (hits={self.cache[least_used_key].hits})")
        del self.cache[least_used_key]

    def clear(self):
        """Очистить весь кэш"""
        with self._lock:
            self.cache.clear()
            self.misses = 0
        logger.info("Cache cleared")

    def get_stats(self) -> Dict:
        """Получить статистику кэша (пишется в debug-лог по завершении команды)"""
        with self._lock:
            return {
                "size": len(self.cache),
                "max_size": self.max_size,
                "total_hits": sum(entry.hits for entry in self.cache.values()),
                "misses": self.misses,
                "enabled": self.enabled,
            }
