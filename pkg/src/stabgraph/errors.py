"""Exception hierarchy for the package.

Every error the library raises on bad input or a violated precondition derives
from StabgraphError. The class name doubles as the stable error code surfaced
by the CLI and the HTTP service, so names here are part of the public
interface: do not rename casually.
"""


class StabgraphError(Exception):
    """Base class for all library errors."""

    @property
    def code(self) -> str:
        return type(self).__name__


# exact scalar / polynomial arithmetic

class DivisionByZero(StabgraphError):
    pass


class NotDivisible(StabgraphError):
    pass


class VariableMismatch(StabgraphError):
    pass


class ZeroPolynomial(StabgraphError):
    pass


# z2-linear layer

class DegreeOverflow(StabgraphError):
    pass


class ZeroDenominator(StabgraphError):
    pass


# graph input and manipulation

class ParseError(StabgraphError):
    def __init__(self, message: str, line: int | None = None, col: int | None = None):
        where = ""
        if line is not None:
            where = f" (line {line}" + (f", col {col})" if col is not None else ")")
        super().__init__(message + where)
        self.line = line
        self.col = col


class InvalidT(StabgraphError):
    pass


class DuplicateEdge(ParseError):
    pass


class LoopEdge(ParseError):
    pass


class IndexOutOfRange(ParseError):
    pass


class UnsupportedLongForm(StabgraphError):
    pass


class TooLarge(StabgraphError):
    pass


class PreconditionViolated(StabgraphError):
    pass


# construction

class DegeneratePencil(StabgraphError):
    pass


class NotRealCoefficients(StabgraphError):
    pass


class DegreeTooSmall(StabgraphError):
    pass


# boundary analysis

class MinusOneInput(StabgraphError):
    pass


class ZeroB(StabgraphError):
    pass


# batch verification

class IoError(StabgraphError):
    pass


# contact order

class UnsupportedTarget(StabgraphError):
    pass


class NoBoundaryZero(StabgraphError):
    pass


class DegenerateR2(StabgraphError):
    pass


class ZeroPairing(StabgraphError):
    pass


class FitUnstable(StabgraphError):
    pass
