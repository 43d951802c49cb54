"""Truncation and vanishing thresholds for theta evaluation."""

from pydantic import BaseModel, ConfigDict, Field


class ThetaConfig(BaseModel):
    """Controls for the truncated lattice sum and the vanishing test."""

    model_config = ConfigDict(frozen=True)

    tol: float = Field(default=1e-12, gt=0.0)
    max_radius: int = Field(default=60, ge=1)
    vanish_rel: float = Field(default=1e-8, gt=0.0, lt=1.0)
