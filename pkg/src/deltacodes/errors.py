"""Shared exception types.

``DomainError`` marks mathematically invalid inputs or operations (CLI exit
code 1); ``ConfigError`` marks malformed configuration files (exit code 2).
"""

from __future__ import annotations

__all__ = ["ConfigError", "DomainError"]


class DomainError(ValueError):
    """Raised when an operation is undefined for the given mathematical input."""


class ConfigError(ValueError):
    """Raised when a configuration file cannot be parsed."""
