"""Exception hierarchy shared by every hyperuset module."""


class HyperUError(Exception):
    """Base class for library errors. `code` is the machine-readable tag used by the CLI."""

    code = "error"


class InvalidInputError(HyperUError, ValueError):
    """A precondition of an operation was violated."""

    code = "invalid_input"


class GenusLimitError(InvalidInputError):
    """Genus exceeds the limit an exhaustive operation supports."""

    code = "genus_limit"

    def __init__(self, g: int, limit: int, what: str = "operation") -> None:
        self.g = g
        self.limit = limit
        super().__init__(f"{what} supports genus <= {limit}, got g={g}")


class NumericalDegeneracyError(HyperUError, ArithmeticError):
    """A floating-point computation became too ill-conditioned to trust."""

    code = "numerical_degeneracy"


class TruncationError(HyperUError, ArithmeticError):
    """Theta summation did not settle before the radius cap."""

    code = "truncation_failure"

    def __init__(self, radius: int, previous: complex, current: complex) -> None:
        self.radius = radius
        self.previous = previous
        self.current = current
        super().__init__(
            f"theta series not converged at radius {radius}: last partial sums {previous!r} and {current!r}"
        )


class InternalError(HyperUError, RuntimeError):
    """An invariant the library guarantees was found broken."""

    code = "internal"
