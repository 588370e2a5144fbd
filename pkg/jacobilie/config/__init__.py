"""Configuration module for JacobiLie."""

from jacobilie.config.settings import Settings, configure_logging, settings

__all__ = ["Settings", "settings", "configure_logging"]
