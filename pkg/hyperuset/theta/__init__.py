"""Numerical Riemann theta: evaluation, two-torsion tables and the vanishing criterion."""

from hyperuset.theta.config import ThetaConfig
from hyperuset.theta.evaluate import ThetaSum, quasi_period_residual, theta, theta_parts, theta_sum, truncation_radius
from hyperuset.theta.tables import (
    CriterionReport,
    TwoTorsionTable,
    check_vanishing_criterion,
    two_torsion_table,
    vanishing_pattern,
)

__all__ = [
    "ThetaConfig",
    "quasi_period_residual",
    "theta",
    "ThetaSum",
    "theta_parts",
    "theta_sum",
    "truncation_radius",
    "CriterionReport",
    "TwoTorsionTable",
    "check_vanishing_criterion",
    "two_torsion_table",
    "vanishing_pattern",
]
