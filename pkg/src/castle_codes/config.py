"""Runtime configuration for castle-codes.

Values come from environment variables prefixed with ``CASTLE_CODES_`` or from a
``.env`` file in the working directory.
"""

import logging
from functools import lru_cache

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


class Settings(BaseSettings):
    """Limits and defaults shared by the library and the CLI."""

    model_config = SettingsConfigDict(
        env_prefix="CASTLE_CODES_", env_file=".env", extra="ignore"
    )

    max_field_order: int = Field(2**16, description="Largest supported field cardinality")
    max_points: int = Field(128, description="Largest supported number of affine points")
    brute_force_cap: int = Field(2**20, description="Largest codeword count for exhaustive sweeps")
    sweep_chunk: int = Field(4096, description="Messages per vectorised sweep chunk")
    default_seed: int = Field(0, description="Channel seed used when none is given")
    jobs: int = Field(1, description="Worker threads for oracle sweeps")
    log_level: str = Field("WARNING", description="Root log level for the CLI")


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    """Return the process-wide settings instance."""
    return Settings()


def configure_logging(level: str | None = None) -> None:
    """Configure root logging once for command-line use.

    Args:
        level: Level name; falls back to the configured ``log_level``
    """
    name = (level or get_settings().log_level).upper()
    logging.basicConfig(level=getattr(logging, name, logging.WARNING), format=LOG_FORMAT)


__all__ = ["Settings", "get_settings", "configure_logging", "LOG_FORMAT"]
