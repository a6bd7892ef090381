"""Exception hierarchy.

Errors split into two families so the CLI can map them onto exit codes:
``PreconditionError`` subclasses mean the caller handed us an input the
operation does not accept; ``InvariantError`` means an internal identity
failed to hold and something is wrong with the engine itself.
"""


class LatticeCountError(Exception):
    pass


class PreconditionError(LatticeCountError):
    pass


class InvariantError(LatticeCountError):
    pass


class SingularMatrix(PreconditionError):
    pass


class DependentRows(PreconditionError):
    pass


class DimensionMismatch(PreconditionError):
    pass


class Unbounded(PreconditionError):
    pass


class Empty(PreconditionError):
    pass


class DegenerateInput(PreconditionError):
    pass


class NotPointed(PreconditionError):
    pass


class NotSimple(PreconditionError):
    pass


class DegenerateDirection(PreconditionError):
    pass


class MissingSourceCone(PreconditionError):
    pass


class NoValidDirection(InvariantError):
    pass


class NotPolynomial(InvariantError):
    """The t^-k coefficients of a specialized sum did not cancel."""
