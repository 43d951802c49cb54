"""Base classes for verification suites."""

from abc import ABC, abstractmethod
from typing import Any

from pydantic import BaseModel, Field


class Check(BaseModel):
    """One named comparison inside a suite."""

    name: str
    passed: bool
    detail: dict[str, Any] = Field(default_factory=dict)


class SuiteResult(BaseModel):
    """Result from running a suite. A failed verification is success=False, never an exception."""

    success: bool
    output: str
    checks: list[Check] = Field(default_factory=list)
    metadata: dict[str, Any] = Field(default_factory=dict)
    error: str | None = None

    def to_json(self) -> dict[str, Any]:
        return {
            "verdict": "PASS" if self.success else "FAIL",
            "output": self.output,
            "checks": [c.model_dump() for c in self.checks],
            **self.metadata,
            **({"error": self.error} if self.error else {}),
        }


class Suite(ABC):
    """
    Base class for bundled verification suites.

    Subclasses must implement: name, description, and run()
    """

    @property
    @abstractmethod
    def name(self) -> str:
        """Suite name, also the CLI verb that runs it."""
        ...

    @property
    @abstractmethod
    def description(self) -> str:
        ...

    @abstractmethod
    def run(self, **kwargs: Any) -> SuiteResult:
        """
        Run the suite.

        Args:
            **kwargs: Suite-specific parameters

        Returns:
            SuiteResult with every check performed
        """
        ...

    @staticmethod
    def conclude(checks: list[Check], output: str, **metadata: Any) -> SuiteResult:
        return SuiteResult(success=all(c.passed for c in checks), output=output, checks=checks, metadata=metadata)

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}(name='{self.name}')"
