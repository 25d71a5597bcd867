"""
Runtime settings for the spectral density toolkit.
Numeric defaults are fixed here; only logging reads the environment.
"""

import os
from pathlib import Path
from typing import Optional

from dotenv import load_dotenv
from pydantic import BaseModel, ConfigDict, Field


class Settings(BaseModel):
    """Defaults shared by the library entry points and the CLI."""
    model_config = ConfigDict(frozen=True)

    grid_size: int = Field(default=512, ge=1, description="Uniform lambda samples on [0, 1)")
    oracle_nodes_1d: int = Field(default=4096, ge=2, description="Midpoint nodes for rank-1 oracles")
    oracle_nodes_2d: int = Field(default=512, ge=2, description="Midpoint nodes per axis for rank-2 oracles")
    oracle_nodes_nd: int = Field(default=48, ge=2, description="Midpoint nodes per axis for rank >= 3")
    tower_tolerance: float = Field(default=0.05, gt=0, description="|last level - oracle| acceptance")
    seed: int = Field(default=0, ge=0)
    jacobi_max_sweeps: int = Field(default=100, ge=1)
    eigen_tolerance: float = Field(default=1e-12, gt=0, description="Off-diagonal stop, relative to ||m||_F")
    log_level: str = Field(default="WARNING")
    json_logs: bool = Field(default=False)

    def oracle_nodes(self, rank: int) -> int:
        """Default quadrature nodes per dimension for a deck group of the given rank."""
        if rank == 1:
            return self.oracle_nodes_1d
        if rank == 2:
            return self.oracle_nodes_2d
        return self.oracle_nodes_nd


def load_settings(env_file: Optional[Path] = None) -> Settings:
    """Build settings, picking up LOG_LEVEL / LOG_JSON from the environment or a .env file."""
    load_dotenv(dotenv_path=env_file or Path(".env"), override=False)
    return Settings(
        log_level=os.getenv("LOG_LEVEL", "WARNING").upper(),
        json_logs=os.getenv("LOG_JSON", "").lower() in ("1", "true", "yes"),
    )


DEFAULT_SETTINGS = Settings()
