"""Exception hierarchy.

Every error carries a short machine-readable ``code`` and an ``exit_code``
used by the command-line front end (2 degenerate input, 3 validation
failure, 4 internal invariant violation).
"""


class M0nError(Exception):
    code = "Error"
    exit_code = 3

    def __init__(self, message: str = "", **details):
        super().__init__(message or self.code)
        self.details = details

    def reason(self) -> str:
        extra = " ".join(f"{k}={v}" for k, v in sorted(self.details.items()))
        return f"{self.code} {extra}".strip()


# -- validation failures (exit 3) ------------------------------------------

class ValidationError(M0nError):
    code = "ValidationError"


class NotSquarefree(ValidationError):
    code = "NotSquarefree"


class NotAUnit(ValidationError):
    code = "NotAUnit"


class ParentMismatch(ValidationError):
    code = "ParentMismatch"


class EvenDegree(ValidationError):
    code = "EvenDegree"


class DegreeTooSmall(ValidationError):
    code = "DegreeTooSmall"


class NotInZ(ValidationError):
    code = "NotInZ"


class MalformedChart(ValidationError):
    code = "MalformedChart"


class NotPrime(ValidationError):
    code = "NotPrime"


class NotDivision(ValidationError):
    code = "NotDivision"


class SquareParameter(ValidationError):
    code = "SquareParameter"


class NotSplitByE(ValidationError):
    code = "NotSplitByE"


class UnsupportedFactorDegree(ValidationError):
    code = "UnsupportedFactorDegree"


class Ramified(ValidationError):
    code = "Ramified"


class ZeroEntry(ValidationError):
    code = "ZeroEntry"


class HeightExceeded(ValidationError):
    code = "HeightExceeded"


# -- degenerate input (exit 2) ---------------------------------------------

class Degenerate(M0nError):
    code = "Degenerate"
    exit_code = 2


class NotInGeneralPosition(Degenerate):
    code = "NotInGeneralPosition"


class NotInDenseOrbit(Degenerate):
    code = "NotInDenseOrbit"


# -- internal (exit 4) -----------------------------------------------------

class InvariantViolation(M0nError):
    code = "InvariantViolation"
    exit_code = 4


class ContextDegenerate(InvariantViolation):
    code = "ContextDegenerate"
