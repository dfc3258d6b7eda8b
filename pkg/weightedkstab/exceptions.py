from typing import Optional

from weightedkstab.utils.exit_status import ExitCode


class KStabException(Exception):
    """Base class of every error raised by weightedkstab"""

    title = "Unknown error"
    exit_code = ExitCode.INTERNAL_ERROR

    def __init__(self, detail: str, title: Optional[str] = None, exit_code: Optional[ExitCode] = None):
        super().__init__(detail)
        self.detail = detail
        if title is not None:
            self.title = title
        if exit_code is not None:
            self.exit_code = exit_code

    def to_dict(self) -> dict:
        return {"title": self.title, "detail": self.detail, "exit_code": int(self.exit_code)}


class InputError(KStabException):
    title = "Invalid input"
    exit_code = ExitCode.USAGE_ERROR


class ArgumentOrderError(InputError):
    title = "Interval bounds out of order"


class ZeroPolynomialError(InputError):
    title = "Polynomial is identically zero"


class InvalidPolytopeError(InputError):
    title = "Invalid moment polytope"


class SliceOutOfRangeError(InputError):
    title = "Slice outside of the polytope"


class DomainError(InputError):
    title = "Parameter outside of the supported range"


class UnknownCaseError(InputError):
    title = "Unknown case"


class PolytopeFileError(InputError):
    title = "Invalid polytope file"


class WeightSyntaxError(InputError):
    title = "Invalid weight specification"


class NonPositiveWeightError(InputError):
    title = "Weight is not positive on the support"


class UnsupportedCaseError(InputError):
    title = "Operation not supported for this case"


class BracketError(KStabException):
    title = "No sign change in bracket"
    exit_code = ExitCode.NO_SIGN_CHANGE


class ConvergenceError(KStabException):
    title = "Quadrature did not converge"

    def __init__(self, detail: str, best_estimate: float, error_estimate: float):
        super().__init__(detail)
        self.best_estimate = best_estimate
        self.error_estimate = error_estimate


class SearchFailureError(KStabException):
    title = "Search budget exhausted"
