"""Exception types shared across the package."""


class PadicCurvatureError(Exception):
    """Base class for all package errors."""


class InsufficientPrecision(PadicCurvatureError):
    """An operation needs more pi-adic digits than the operand carries."""


class DivisionNotExact(PadicCurvatureError):
    """Division by pi attempted on an element with nonzero residue."""


class NotAUnit(PadicCurvatureError):
    pass


class NotInBaseField(PadicCurvatureError):
    pass


class NotAnAutomorphism(PadicCurvatureError):
    pass


class NotNormalized(PadicCurvatureError):
    pass


class SingularLinearization(PadicCurvatureError):
    """The residue metric (or base point) is not invertible."""


class NonUnitDiagonal(PadicCurvatureError):
    pass


class NotAbelian(PadicCurvatureError):
    pass


class NotConformal(PadicCurvatureError):
    pass


class NonDiagonal(PadicCurvatureError):
    pass


class NoSquareRoot(PadicCurvatureError):
    pass


class ConstraintUnsatisfiable(PadicCurvatureError):
    pass


class SchemaError(PadicCurvatureError):
    """Scenario input failed validation; message carries a path diagnostic."""
