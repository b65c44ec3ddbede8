"""Exception hierarchy shared by all fqg modules."""


class FqgError(Exception):
    """Base class for all errors raised by this package."""


class ParameterError(FqgError, ValueError):
    """An argument is outside the supported range (e.g. Sekine index k < 2)."""


class DimensionError(FqgError, ValueError):
    """Vector/matrix shapes or ambient dimensions do not match."""


class SignatureError(FqgError, ValueError):
    """Two algebra elements or tensors live over different block signatures."""


class UnsupportedInputError(FqgError, ValueError):
    """The input is valid but outside the implemented scope
    (e.g. group algebra of a nonabelian group)."""


class StructuralError(FqgError):
    """A structural expectation failed: no/ambiguous Haar solution,
    integral space not one-dimensional, malformed Hopf data."""


class NotAStateError(FqgError, ValueError):
    """A functional fed to a state-only operation is not normalized."""


class ResourceLimitError(FqgError):
    """A configured enumeration or size bound was exceeded.

    Carries a ``partial`` attribute with whatever the computation had
    established before giving up.
    """

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial
