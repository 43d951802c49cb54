"""Runtime settings read from the environment (and an optional .env file)."""

import os
from pathlib import Path

from dotenv import load_dotenv
from pydantic import BaseModel, ConfigDict, Field, ValidationError

from hyperuset.errors import InvalidInputError
from hyperuset.theta.config import ThetaConfig


class Settings(BaseModel):
    """Process-wide defaults. CLI flags take precedence over these."""

    model_config = ConfigDict(frozen=True)

    theta: ThetaConfig = Field(default_factory=ThetaConfig)
    seed: int = 0
    journal_dir: Path | None = None

    @classmethod
    def from_env(cls, dotenv: bool = True) -> "Settings":
        """
        Build settings from HYPERUSET_* environment variables.

        Args:
            dotenv: Load a .env file from the working directory first (if present)

        Raises:
            InvalidInputError: a variable is not a number or is out of range
        """
        if dotenv:
            load_dotenv()

        journal = os.getenv("HYPERUSET_JOURNAL_DIR")
        try:
            theta_overrides: dict[str, float | int] = {}
            if tol := os.getenv("HYPERUSET_TOL"):
                theta_overrides["tol"] = float(tol)
            if max_radius := os.getenv("HYPERUSET_MAX_RADIUS"):
                theta_overrides["max_radius"] = int(max_radius)
            if vanish_rel := os.getenv("HYPERUSET_VANISH_REL"):
                theta_overrides["vanish_rel"] = float(vanish_rel)
            return cls(
                theta=ThetaConfig(**theta_overrides),
                seed=int(os.getenv("HYPERUSET_SEED", "0")),
                journal_dir=Path(journal) if journal else None,
            )
        except (ValidationError, ValueError) as e:
            raise InvalidInputError(f"invalid HYPERUSET_* setting: {e}") from e
