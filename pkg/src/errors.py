"""Exception hierarchy shared by the algebra kernels, engines and CLI."""

from typing import Optional


class GroebnerError(Exception):
    """Base class for all errors raised by this package."""


class DivisionByZeroError(GroebnerError, ZeroDivisionError):
    """Inverse of zero requested in a prime field."""


class NonPrimeModulusError(GroebnerError, ValueError):
    """Field modulus is not a prime in the supported range."""


class DimensionMismatchError(GroebnerError, ValueError):
    """Monomials or signatures of different variable counts were combined."""


class ExponentOverflowError(GroebnerError, OverflowError):
    """An exponent left the 16-bit unsigned range."""


class ZeroPolynomialError(GroebnerError, ValueError):
    """Leading data requested from the zero polynomial."""


class RingMismatchError(GroebnerError, ValueError):
    """Polynomials from different rings were mixed."""


class DehomogenizationError(GroebnerError, ValueError):
    """Dehomogenization requested in a ring without the homogenizing variable."""


class InvariantViolationError(GroebnerError, AssertionError):
    """A checked algorithm invariant failed (only raised when checks are on)."""


class EngineTimeoutError(GroebnerError, TimeoutError):
    """An engine run exceeded its configured deadline."""

    def __init__(self, elapsed_seconds: float, limit_seconds: float):
        super().__init__(
            f"engine exceeded {limit_seconds:.1f}s (ran {elapsed_seconds:.1f}s)"
        )
        self.elapsed_seconds = elapsed_seconds
        self.limit_seconds = limit_seconds


class ParseError(GroebnerError, ValueError):
    """Syntax error in an input file, with a 1-based position."""

    def __init__(self, message: str, line: int, column: int, source: Optional[str] = None):
        location = f"{source}:" if source else ""
        super().__init__(f"{location}{line}:{column}: {message}")
        self.message = message
        self.line = line
        self.column = column


class UnknownVariableError(ParseError):
    """A polynomial used a variable that the ring header did not declare."""

    def __init__(self, name: str, line: int, column: int, source: Optional[str] = None):
        super().__init__(f"unknown variable '{name}'", line, column, source)
        self.name = name
