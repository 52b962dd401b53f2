"""Exception hierarchy.  Every library failure is a ``HypersetError``."""


class HypersetError(ValueError):
    """Base class for domain errors (bad input, violated precondition)."""


class AccessibilityError(HypersetError):
    pass


class UnknownNameError(HypersetError):
    pass


class CrossStoreError(HypersetError):
    pass


class NotWellFoundedError(HypersetError):
    pass


class PreconditionError(HypersetError):
    pass


class ParseError(HypersetError):
    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class LanguageError(HypersetError):
    pass


class UnboundVariableError(HypersetError):
    pass
