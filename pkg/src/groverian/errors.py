"""Exception types raised across the package."""


class GroverianError(ValueError):
    """Base class for all validation and numerical errors in this package."""


class ZeroState(GroverianError):
    pass


class NotNormalized(GroverianError):
    pass


class NotUnitary(GroverianError):
    pass


class NotHermitian(GroverianError):
    pass


class UnknownKind(GroverianError):
    pass


class DecompositionFailure(GroverianError):
    pass


class DegenerateTransform(GroverianError):
    pass


class NoRealRoot(GroverianError):
    pass


class UnknownFamily(GroverianError):
    pass


class OutOfRange(GroverianError):
    pass


class NoCandidateMatches(GroverianError):
    pass


class InvalidForm(GroverianError):
    pass


class UnknownSuite(GroverianError):
    pass


class ParseError(GroverianError):
    """Input file is not valid JSON or does not follow the state-file schema."""


class NotConverged(GroverianError):
    pass
