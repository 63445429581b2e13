"""Exception hierarchy with stable error codes for CLI exit statuses."""


class HkdynError(Exception):
    """Base class for all library errors.

    ``exit_code`` follows the CLI convention: 2 parse/schema,
    3 precondition, 4 theorem-violation (internal defect signal).
    """

    exit_code = 3


class ParseError(HkdynError):
    exit_code = 2


class SchemaError(HkdynError):
    exit_code = 2


class PreconditionError(HkdynError):
    exit_code = 3


class NotSymmetric(PreconditionError):
    pass


class DegenerateForm(PreconditionError):
    pass


class DimensionMismatch(PreconditionError):
    pass


class IsotropicVector(PreconditionError):
    pass


class NonIntegral(PreconditionError):
    pass


class NotAnIsometry(PreconditionError):
    pass


class NotHyperbolic(PreconditionError):
    pass


class DegreeOutOfRange(PreconditionError):
    pass


class AlphaNotExpanding(PreconditionError):
    pass


class InvalidSpace(PreconditionError):
    pass


class IndexOutOfRange(PreconditionError):
    pass


class TheoremViolationError(HkdynError):
    """A statement that is a theorem failed on concrete data: a defect signal."""

    exit_code = 4


class UnexpectedSpectrum(TheoremViolationError):
    pass


class PropositionViolated(TheoremViolationError):
    pass
