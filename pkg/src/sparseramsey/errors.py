"""Exception hierarchy shared by all modules."""


class RamseyDensityError(Exception):
    """Base class for errors raised by this package."""


class InvalidParameterError(RamseyDensityError, ValueError):
    pass


class ParameterUndefinedError(RamseyDensityError, ValueError):
    pass


class SizeLimitError(RamseyDensityError):
    pass


class InvalidFamilyError(RamseyDensityError, ValueError):
    pass


class InvalidBipartitionError(RamseyDensityError, ValueError):
    pass


class NotAForestError(RamseyDensityError, ValueError):
    pass


class InfeasibleError(RamseyDensityError):
    """Raised when a certificate cannot exist; ``witness`` is the obstruction."""

    def __init__(self, message, witness=None, value=None):
        super().__init__(message)
        self.witness = witness
        self.value = value


class PreconditionError(RamseyDensityError):
    pass


class BudgetExhaustedError(RamseyDensityError):
    def __init__(self, message, nodes=0):
        super().__init__(message)
        self.nodes = nodes


class NotFoundError(RamseyDensityError):
    pass


class CertificateError(RamseyDensityError):
    """An engine produced output that failed its own verification."""


class TableParseError(RamseyDensityError, ValueError):
    def __init__(self, message, lineno=None):
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)
        self.lineno = lineno


class TableContradictionError(TableParseError):
    pass


class TableMissError(RamseyDensityError, KeyError):
    def __str__(self):
        return str(self.args[0]) if self.args else "table miss"


class BoundsInconsistencyError(RamseyDensityError):
    pass
