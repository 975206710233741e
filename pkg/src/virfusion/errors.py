"""Typed errors. The class name doubles as the stable error name used by the CLI."""


class VirasoroError(Exception):
    """Base class for every domain error raised by this package."""

    @property
    def name(self) -> str:
        return type(self).__name__


class PoleAtPoint(VirasoroError, ZeroDivisionError):
    pass


class LevelTooLarge(VirasoroError):
    pass


class NoSingularVector(VirasoroError):
    pass


class AmbiguousKernel(VirasoroError):
    pass


class InvalidT(VirasoroError):
    pass


class NonGenericMode(VirasoroError):
    pass


class OrderTooLarge(VirasoroError):
    pass


class ParseError(VirasoroError, ValueError):
    pass
