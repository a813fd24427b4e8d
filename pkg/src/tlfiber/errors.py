"""Exception hierarchy.

Two families: InputError covers malformed requests (bad shapes, bad
indices, mixed scalar fields), MathError covers well-formed requests whose
answer does not exist (singular matrix, inadmissible multiplicity data,
parity obstruction, ...). The CLI maps the families to exit codes 2 and 3.
"""


class TLFiberError(Exception):
    pass


class InputError(TLFiberError):
    pass


class FieldMismatch(InputError):
    """Operands live over different scalar fields."""


class ShapeMismatch(InputError):
    """Dimensions do not line up."""


class IndexOutOfRange(InputError):
    """Strand or generator index outside the legal range."""


class InvalidWord(InputError):
    """A cap/cup letter sequence that no planar diagram realizes."""


class MatrixTooLarge(InputError):
    """Dense kernel operations reject matrices beyond 64 x 64."""


class InvalidParameter(InputError):
    """A parameter value outside its documented domain."""


class MathError(TLFiberError):
    pass


class SingularMatrix(MathError):
    """Inversion of a matrix without an inverse."""


class NotInvertible(SingularMatrix):
    """An operation requiring invertibility met a singular operand."""


class IrrationalSpectrum(MathError):
    """Exact spectrum fell outside the scalar field; carries residual degree.

    Callers can switch to the approximate field or pass eigenvalues they
    obtained elsewhere (jordan_multiplicities accepts eigenvalues=).
    """

    def __init__(self, message, residual_degree=None):
        super().__init__(message)
        self.residual_degree = residual_degree


class InadmissibleMultiplicity(MathError):
    """Multiplicity data that no bilinear form realizes."""


class ParityObstruction(MathError):
    """sign = -1 forces even dimension; the request was odd."""


class BadDimension(MathError):
    """Dimension value outside the realizable range."""


class InvalidList(MathError):
    """Spectral data that is not closed under inversion."""


class NoConvergence(MathError):
    """An iteration hit its cap before meeting its tolerance."""
