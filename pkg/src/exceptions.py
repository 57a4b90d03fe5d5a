"""
Error types raised by the dimspread kernels and mapped to CLI exit codes
"""


class SpreadError(Exception):
    """Base class for all dimspread errors"""

    exit_code: int = 2
    reason: str = "error"

    def describe(self) -> str:
        """Single-line, machine-parsable description `<reason>: <message>`"""
        message = " ".join(str(self).split())
        return f"{self.reason}: {message}"


class InvalidStateError(SpreadError, ValueError):
    """A quantum state violates one of its hyperquantum constraints"""

    reason = "invalid-state"


class DomainError(SpreadError, ValueError):
    """An argument lies outside the domain of a function"""

    reason = "domain"


class ConjugacyError(DomainError):
    """Rényi orders (p, q) are not conjugate, 1/p + 1/q != 2"""

    reason = "conjugacy"


class NotAvailableError(SpreadError, LookupError):
    """No closed form or direct route exists for the requested combination"""

    reason = "not-available"


class UnknownMeasureError(SpreadError, KeyError):
    """Measure identifier is not in the catalogue"""

    reason = "unknown-measure"

    def __str__(self) -> str:
        # KeyError quotes its argument
        return str(self.args[0]) if self.args else ""


class LogValueOverflowError(SpreadError, OverflowError):
    """Log-magnitude left the representable range"""

    reason = "overflow"


class DivergentIntegralError(SpreadError, ArithmeticError):
    """The requested integral does not exist for these parameters"""

    exit_code = 3
    reason = "divergent"


class NonConvergenceError(SpreadError, ArithmeticError):
    """Quadrature did not reach the requested tolerance"""

    exit_code = 4
    reason = "non-convergence"


class QuadratureError(SpreadError, ArithmeticError):
    """The Jacobi-matrix eigensolver failed"""

    exit_code = 4
    reason = "eigensolver"
