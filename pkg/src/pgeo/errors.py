"""Exception hierarchy shared by every module.

Each construction error names the geometric condition that failed; the
script evaluator wraps them in :class:`EvalError` with a source position.
"""


class GeometryError(Exception):
    """Base class for all construction and precondition failures."""


class DivisionByZero(GeometryError, ZeroDivisionError):
    pass


class ZeroVector(GeometryError):
    pass


class CoincidentPoints(GeometryError):
    pass


class CoincidentLines(GeometryError):
    pass


class PointOnBothLines(GeometryError):
    pass


class NotPerspectiveFromCenter(GeometryError):
    pass


class NotPerspectiveFromAxis(GeometryError):
    pass


class DegenerateQuadrangle(GeometryError):
    pass


class DegenerateTriangle(GeometryError):
    pass


# harmonic

class InvalidAuxiliary(GeometryError):
    pass


class CNotOnBaseLine(GeometryError):
    pass


class NotCollinear(GeometryError):
    pass


class DegenerateBasis(GeometryError):
    pass


class HarmonicMismatch(GeometryError):
    pass


# projectivity

class ElementNotOnCarrier(GeometryError):
    pass


class CarrierMismatch(GeometryError):
    pass


class DegenerateTriple(GeometryError):
    pass


class PerspectivityHasNoAxis(GeometryError):
    pass


class DegenerateQuad(GeometryError):
    pass


# conic

class PerspectiveProjectivity(GeometryError):
    pass


class DegenerateConic(GeometryError):
    pass


class ThreeCollinear(GeometryError):
    pass


class DuplicatePoints(GeometryError):
    pass


class NotOnConic(GeometryError):
    pass


class DegenerateHexagon(GeometryError):
    pass


class LineAvoidanceViolated(GeometryError):
    pass


class TangentLine(GeometryError):
    pass


class OutOfRationalScope(GeometryError):
    pass


# extension

class IdenticalPencils(GeometryError):
    pass


class UnresolvedStatus(GeometryError):
    pass


class IdenticalArguments(GeometryError):
    pass


class InternalInconsistency(AssertionError):
    """Two representations of the same object disagree.

    Raised when a cross-check between independent routes fails. This is a
    bug, never a user-facing precondition.
    """


# script

class ScriptError(Exception):
    """Problems in a script that are not geometric: names, kinds, arity."""


class UndefinedName(ScriptError):
    pass


class Redeclared(ScriptError):
    pass


class TypeMismatch(ScriptError):
    pass


class UnknownFunction(ScriptError):
    pass


class ParseError(Exception):
    def __init__(self, line, column, expected, found=None):
        self.line = line
        self.column = column
        self.expected = tuple(sorted(set(expected)))
        self.found = found
        exp = ", ".join(self.expected)
        msg = f"{line}:{column}: expected one of {{{exp}}}"
        if found is not None:
            msg += f", found {found!r}"
        super().__init__(msg)


class EvalError(Exception):
    def __init__(self, line, column, cause, message=None):
        self.line = line
        self.column = column
        self.cause = cause
        self.kind = type(cause).__name__ if cause is not None else "EvalError"
        text = message if message is not None else str(cause)
        self.message = text
        super().__init__(f"{line}:{column}: {self.kind}: {text}")
