"""Bundled verification suites."""

from hyperuset.suites.base import Check, Suite, SuiteResult
from hyperuset.suites.group_orders import GroupOrderSuite
from hyperuset.suites.main_theorem import MainTheoremSuite

SUITES: dict[str, type[Suite]] = {
    "verify-main": MainTheoremSuite,
    "orders": GroupOrderSuite,
}

__all__ = ["Check", "Suite", "SuiteResult", "GroupOrderSuite", "MainTheoremSuite", "SUITES"]
