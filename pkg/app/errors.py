"""Error hierarchy shared by the library, the CLI and the HTTP surface."""

from typing import Optional


class PhaseLabError(Exception):
    """Base class for all expected failures. Carries the CLI exit code."""

    exit_code = 1


# ------------------------------------------------------------
# Input errors (exit 2)
# ------------------------------------------------------------
class InputError(PhaseLabError):
    exit_code = 2


class PhaseSyntaxError(InputError):
    """Raised by the phase parser. `position` is the 0-based offset in the input."""

    def __init__(self, message: str, position: int, text: Optional[str] = None):
        self.position = position
        self.text = text
        super().__init__(f"{message} at position {position}")


class NotHomogeneous(InputError):
    pass


class DegeneratePhase(InputError):
    def __init__(self, message: str = "degenerate phase: all mixed coefficients vanish"):
        super().__init__(message)


class ZeroPolynomial(InputError):
    def __init__(self, message: str = "zero polynomial"):
        super().__init__(message)


class ZeroHessian(InputError):
    def __init__(self, message: str = "mixed Hessian vanishes identically"):
        super().__init__(message)


class NoMixedTerms(InputError):
    def __init__(self, message: str = "polynomial has no mixed terms"):
        super().__init__(message)


class OutOfHypothesis(InputError):
    pass


class OutOfRange(InputError):
    pass


class UndefinedExponent(InputError):
    pass


class EndpointIsRoot(InputError):
    def __init__(self, endpoint):
        self.endpoint = endpoint
        super().__init__(f"interval endpoint {endpoint} is a root")


class NonpositiveArgument(InputError):
    pass


class SingularDamping(InputError):
    pass


class ResolutionTooCoarse(InputError):
    pass


class ConfigError(InputError):
    pass


# ------------------------------------------------------------
# Assertion failures (exit 3)
# ------------------------------------------------------------
class ExperimentAssertionError(PhaseLabError):
    exit_code = 3


# ------------------------------------------------------------
# Budget errors (exit 4)
# ------------------------------------------------------------
class BudgetError(PhaseLabError):
    exit_code = 4


class BudgetExceeded(BudgetError):
    pass


class MemoryBudget(BudgetError):
    pass
