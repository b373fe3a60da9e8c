"""Exception hierarchy for the engine."""


class LinkageError(Exception):
    """Base class for all engine errors."""


class DivisionByZero(LinkageError, ZeroDivisionError):
    pass


class FieldMismatch(LinkageError):
    pass


class RingMismatch(LinkageError):
    pass


class AmbientMismatch(LinkageError):
    pass


class ParseError(LinkageError):
    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class UnknownVariable(ParseError):
    pass


class ZeroModule(LinkageError):
    pass


class NotCohenMacaulay(LinkageError):
    pass


class AmbientNotCM(LinkageError):
    pass


class NotSemidualizing(LinkageError):
    pass


class ImproperIdeal(LinkageError):
    pass


class AnnihilationFailure(LinkageError):
    pass


class DimensionZero(LinkageError):
    pass
