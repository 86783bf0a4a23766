"""
Configuration

Runtime settings read from the environment (prefix ``UNILATTICE_``) and an
optional ``.env`` file.
"""

import logging
from functools import lru_cache
from pathlib import Path

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

logger = logging.getLogger(__name__)

FIXTURES_DIR = Path(__file__).parent / "fixtures"

# Enumeration never goes past this size, whatever the environment says.
HARD_LATTICE_CAP = 8


class Settings(BaseSettings):
    """Toolkit settings."""

    model_config = SettingsConfigDict(env_prefix="UNILATTICE_", env_file=".env", extra="ignore")

    lattice_cap: int = Field(7, ge=1, le=HARD_LATTICE_CAP, description="Largest lattice size enumerated")
    norm_domain_cap: int = Field(6, ge=1, description="Largest interval on which all t-norms/t-conorms are enumerated")
    jobs: int = Field(1, ge=1, description="Worker processes used by sweeps")
    log_level: str = Field("WARNING", description="Logging level for the command line")
    fixtures_dir: Path = Field(FIXTURES_DIR, description="Directory holding bundled .lat files")


@lru_cache()
def get_settings() -> Settings:
    settings = Settings()
    logger.debug(f"Loaded settings: {settings.model_dump()}")
    return settings
