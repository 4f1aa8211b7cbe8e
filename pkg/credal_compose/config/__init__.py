"""
Config package - Configuration settings
"""
from .settings import settings, Settings

__all__ = ["settings", "Settings"]
