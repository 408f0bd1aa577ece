"""Exception hierarchy shared by every module."""


class EulerDataError(Exception):
    """Base class; ``status`` is the name surfaced in CLI reports."""

    @property
    def status(self) -> str:
        return type(self).__name__


class ParseError(EulerDataError):
    def __init__(self, message: str, position: int, text: str = "", source: str | None = None):
        self.message = message
        self.position = position
        self.text = text
        self.source = source
        where = f"{source}: " if source else ""
        super().__init__(f"{where}{message} at position {position}")


class InvalidSubstitution(EulerDataError):
    pass


class SizeError(EulerDataError):
    pass


class ResourceLimit(EulerDataError):
    pass


class NotZeroDimensional(EulerDataError):
    pass


class GenericityFailure(EulerDataError):
    pass


class DimensionMismatch(EulerDataError):
    pass


class NonIsolatedSingularity(EulerDataError):
    pass


class UnsupportedSingularLocus(EulerDataError):
    pass


class UnsupportedInput(EulerDataError):
    """Input shape outside what an operation handles (e.g. not a hypersurface)."""


class ConsistencyFailure(EulerDataError):
    pass


class FixtureError(EulerDataError):
    pass


class CommonComponent(EulerDataError):
    pass
