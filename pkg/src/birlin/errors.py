"""Exception hierarchy shared across the toolkit."""


class BirlinError(Exception):
    """Base class for all toolkit errors."""


class ParseError(BirlinError):
    """Malformed polynomial text; carries position information."""

    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class VariableMismatchError(BirlinError):
    """Operands declared over different variable lists."""


class MissingAssignmentError(BirlinError):
    """Substitution lacks an image for some variable."""


class ZeroInputError(BirlinError):
    """An operation received zero where a nonzero value is required."""


class ArityError(BirlinError):
    """Wrong number of components or coordinates."""


class DegreeError(BirlinError):
    """Degree constraint violated (inhomogeneous or unequal degrees)."""


class IndeterminatePointError(BirlinError):
    """All map components vanish at the given point."""


class DegenerateCompositionError(BirlinError):
    """Composition is identically zero before reduction."""


class DegenerateParameterError(BirlinError):
    """Family specialization vanished identically."""


class NotClosedAtDegree(BirlinError):
    """Pullback left the degree-m space; retry with other degree or seeds."""

    def __init__(self, message, degree=None):
        self.degree = degree
        super().__init__(message)


class DimCapExceeded(BirlinError):
    """Invariant closure grew past the configured dimension cap."""


class NotInSpan(BirlinError):
    """A pullback image is not a combination of the basis."""


class NotRealValued(BirlinError):
    """Defining polynomial breaks Hermitian coefficient symmetry."""


class NotOnBoundary(BirlinError):
    """Point does not satisfy r(p, conj p) = 0."""


class NotSmooth(BirlinError):
    """All first-order Wirtinger partials vanish at the boundary point."""


class CertificateError(BirlinError):
    """Certificate file malformed or its exact identity fails."""
