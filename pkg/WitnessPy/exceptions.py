"""Module contains exceptions that will be raised by `WitnessPy`."""


class WitnessPyError(Exception):
    """Base class of every exception raised by `WitnessPy`.

    Args:
        message: Exception message.
    """

    def __init__(self, message: str = "witnesspy error"):
        self.message = message
        super().__init__(self.message)


class InvalidArgument(WitnessPyError):
    """Provided argument is invalid.

    Args:
        message: Exception message.
    """

    def __init__(self, message: str = "invalid argument"):
        super().__init__(message)


class DimensionMismatch(InvalidArgument):
    """Matrix shape does not agree with the declared tensor factor dimensions.

    Args:
        message: Exception message.
    """

    def __init__(self, message: str = "dimension mismatch"):
        super().__init__(message)


class NotHermitian(InvalidArgument):
    """Hermitian matrix required but the input deviates from its adjoint.

    Args:
        message: Exception message.
    """

    def __init__(self, message: str = "matrix is not hermitian"):
        super().__init__(message)


class NotAProjector(InvalidArgument):
    """Orthogonal projector required but the input is not idempotent.

    Args:
        message: Exception message.
    """

    def __init__(self, message: str = "matrix is not a projector"):
        super().__init__(message)


class NotAWitness(WitnessPyError):
    """Operator has no negative eigenvalue and cannot be approximated structurally.

    Args:
        message: Exception message.
    """

    def __init__(self, message: str = "operator is not an entanglement witness"):
        super().__init__(message)


class NumericalInconsistency(WitnessPyError):
    """An identity that holds analytically failed its numerical tolerance.

    Args:
        message: Exception message.
    """

    def __init__(self, message: str = "numerical identity violated"):
        super().__init__(message)


class OutputError(WitnessPyError):
    """Output artifact cannot be written.

    Args:
        message: Exception message.
    """

    def __init__(self, message: str = "cannot write output"):
        super().__init__(message)
