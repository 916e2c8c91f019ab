"""Exception types shared across the package."""


class DeltaError(ValueError):
    """Base class for invalid shapes or values."""


class LengthMismatch(DeltaError):
    pass


class OutOfRange(DeltaError):
    def __init__(self, message, index=None):
        super().__init__(message)
        self.index = index


class NotMonotone(DeltaError):
    def __init__(self, message, index=None):
        super().__init__(message)
        self.index = index


class SourceTargetMismatch(DeltaError):
    pass


class SourceMismatch(SourceTargetMismatch):
    pass


class TargetMismatch(SourceTargetMismatch):
    pass


class LevelMismatch(DeltaError):
    pass


class IndexOutOfRange(DeltaError):
    pass


class NotInCell(DeltaError):
    pass


class ParameterOutOfRange(DeltaError):
    pass


class BadLiteral(DeltaError):
    pass
