"""Exception types shared across the package."""


class ParameterDomainError(ValueError):
    """Input outside the domain a construction or formula is defined for."""


class ForeignVertexError(ValueError):
    """A vertex that does not belong to the graph it was used with."""


class SizeCapError(ValueError):
    """Instance exceeds an exact-search size cap."""


class CoverageError(ValueError):
    """Color classes do not partition the vertex set."""


class ShapeError(ValueError):
    """A class has the wrong size or shape for the requested operation."""


class SearchExhaustedError(RuntimeError):
    """A bounded search ran out of budget without finding a certificate."""


class CertificateError(RuntimeError):
    """A construction failed its own verification; output is withheld."""
