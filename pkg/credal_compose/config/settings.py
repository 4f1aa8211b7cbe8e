"""
Configuration settings for credal_compose
"""
import os
import logging
from typing import Optional
from dotenv import load_dotenv

# Загружаем переменные окружения
load_dotenv()


def _optional_int(name: str) -> Optional[int]:
    """Целое из окружения или None, если переменная пустая"""
    raw = os.getenv(name, "").strip()
    return int(raw) if raw else None


class Settings:
    """Application settings"""
    
    # Logging settings
    LOG_LEVEL: str = os.getenv("CREDAL_LOG_LEVEL", "WARNING").upper()
    LOG_FILE: Optional[str] = os.getenv("CREDAL_LOG_FILE") or None
    
    # Output settings
    DISPLAY_DIGITS: Optional[int] = _optional_int("CREDAL_DISPLAY_DIGITS")
    
    # Projection settings
    PROJECTION_MAX_ITERATIONS: int = int(os.getenv("CREDAL_PROJECTION_MAX_ITERATIONS", "10000"))
    
    # Cache settings
    ENABLE_CACHE: bool = os.getenv("CREDAL_ENABLE_CACHE", "true").lower() == "true"
    CACHE_SIZE: int = int(os.getenv("CREDAL_CACHE_SIZE", "512"))
    
    @classmethod
    def validate(cls) -> bool:
        """Validate settings"""
        if not isinstance(logging.getLevelName(cls.LOG_LEVEL), int):
            raise ValueError(f"CREDAL_LOG_LEVEL has unknown level: {cls.LOG_LEVEL}")
        if cls.DISPLAY_DIGITS is not None and cls.DISPLAY_DIGITS < 0:
            raise ValueError("CREDAL_DISPLAY_DIGITS must be non-negative")
        if cls.PROJECTION_MAX_ITERATIONS <= 0:
            raise ValueError("CREDAL_PROJECTION_MAX_ITERATIONS must be positive")
        if cls.CACHE_SIZE <= 0:
            raise ValueError("CREDAL_CACHE_SIZE must be positive")
        return True


# Создаем глобальный экземпляр настроек
settings = Settings()

# Валидируем настройки при импорте
settings.validate()
