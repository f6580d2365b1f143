"""Domain errors.

Every error carries a stable ``code`` that the command line prints in front of
the message, e.g. ``nevderiv: error[duplicate-abscissa]: ...``.
"""


class NevilleError(Exception):
    """Base class for all domain errors raised by nevderiv"""

    code = "neville-error"

    def __init__(self, message: str = ""):
        super().__init__(message or self.__class__.__doc__ or self.code)
        self.message = message or (self.__class__.__doc__ or self.code)

    def __str__(self) -> str:
        return self.message


class EmptyNodeSet(NevilleError):
    """A node set needs at least one point"""
    code = "empty-node-set"


class DuplicateAbscissa(NevilleError):
    """Two points share the same abscissa"""
    code = "duplicate-abscissa"

    def __init__(self, x: float):
        super().__init__(f"abscissa {x!r} occurs more than once")
        self.x = x


class NonFiniteInput(NevilleError):
    """Input value is NaN or infinite"""
    code = "non-finite-input"


class InvalidRange(NevilleError):
    """Interval lower bound must be below its upper bound"""
    code = "invalid-range"


class NonFiniteSample(NevilleError):
    """Sampled function returned NaN or infinity"""
    code = "non-finite-sample"


class ParseError(NevilleError):
    """Malformed table line"""
    code = "parse-error"

    def __init__(self, line_number: int, detail: str):
        super().__init__(f"line {line_number}: {detail}")
        self.line_number = line_number


class TooFewRows(NevilleError):
    """A table needs at least two samples"""
    code = "too-few-rows"


class InvalidDegree(NevilleError):
    """Interpolation degree out of range"""
    code = "invalid-degree"


class DegreeTooLarge(InvalidDegree):
    """Degree needs more points than the table holds"""
    code = "degree-too-large"


class OutOfDomain(NevilleError):
    """Abscissa lies outside the table range"""
    code = "out-of-domain"


class DerivativeVanished(NevilleError):
    """Newton step impossible, derivative below the usable floor"""
    code = "derivative-vanished"

    def __init__(self, x: float, derivative: float, floor: float, order: int = 1):
        super().__init__(
            f"|P^{order}({x!r})| = {abs(derivative):.3e} is below the floor {floor:.3e}"
        )
        self.x = x
        self.derivative = derivative


class EmptyPopulation(NevilleError):
    """Statistics need at least one difference"""
    code = "empty-population"


class IllConditioned(NevilleError):
    """Vandermonde oracle refuses degrees above its conditioning limit"""
    code = "ill-conditioned"


class InvalidConfig(NevilleError):
    """Configuration values violate their constraints"""
    code = "invalid-config"


class InvalidOrder(NevilleError):
    """Derivative order must be non-negative"""
    code = "invalid-order"


class TableUnreadable(NevilleError):
    """Table file cannot be opened"""
    code = "table-unreadable"


def error_line(error: NevilleError, prog: str = "nevderiv") -> str:
    """One-line, greppable rendering used on stderr"""
    return f"{prog}: error[{error.code}]: {error.message}"
