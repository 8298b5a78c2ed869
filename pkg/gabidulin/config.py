"""
Runtime settings loaded from the environment (and an optional ``.env`` file).
"""

import os
from functools import lru_cache

from dotenv import load_dotenv
from pydantic import BaseModel, Field, field_validator


class Settings(BaseModel):
    """Library and CLI settings."""

    workers: int = Field(default=1, ge=1)
    log_level: str = "WARNING"
    table_limit: int = Field(default=1 << 16, ge=2)
    exhaustive_limit: int = Field(default=1 << 24, ge=1)
    chase_limit: int = Field(default=1 << 20, ge=1)

    @field_validator("log_level")
    @classmethod
    def _upper_level(cls, value: str) -> str:
        value = value.strip().upper()
        if value not in {"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"}:
            raise ValueError(f"Unknown log level: {value}")
        return value


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    """
    Build settings from environment variables.

    Reads ``GABIDULIN_WORKERS``, ``GABIDULIN_LOG_LEVEL``, ``GABIDULIN_TABLE_LIMIT``,
    ``GABIDULIN_EXHAUSTIVE_LIMIT`` and ``GABIDULIN_CHASE_LIMIT``. Values from a
    ``.env`` file never override variables already set in the environment.

    Raises:
        pydantic.ValidationError: If a value is malformed or out of range
    """
    load_dotenv()
    return Settings(
        workers=os.getenv("GABIDULIN_WORKERS", "1"),
        log_level=os.getenv("GABIDULIN_LOG_LEVEL", "WARNING"),
        table_limit=os.getenv("GABIDULIN_TABLE_LIMIT", str(1 << 16)),
        exhaustive_limit=os.getenv("GABIDULIN_EXHAUSTIVE_LIMIT", str(1 << 24)),
        chase_limit=os.getenv("GABIDULIN_CHASE_LIMIT", str(1 << 20)),
    )
