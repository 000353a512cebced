"""Exception hierarchy.

Every domain error carries its class name through to the CLI, so the names
below are part of the public surface.
"""


class DownUpError(Exception):
    """Base class for all errors raised by this package."""


class ModeMismatch(DownUpError, TypeError):
    pass


class DivisionByZero(DownUpError, ZeroDivisionError):
    pass


class ZeroInput(DownUpError, ValueError):
    pass


class InvalidParameter(DownUpError, ValueError):
    pass


class PresentationMismatch(DownUpError, ValueError):
    pass


class ParameterMismatch(DownUpError, ValueError):
    pass


class UnverifiedMap(DownUpError, ValueError):
    pass


class ZeroVector(DownUpError, ValueError):
    pass


class TorsionParameter(DownUpError, ValueError):
    pass


class TorsionRequired(DownUpError, ValueError):
    pass


class DegenerateBeta(DownUpError, ValueError):
    pass


class RIsOne(DownUpError, ValueError):
    pass


class ZeroLambda(DownUpError, ValueError):
    pass


class ZeroGamma(DownUpError, ValueError):
    pass


class RootMismatch(DownUpError, ValueError):
    pass


class NonNoetherian(DownUpError, ValueError):
    pass


class ParseError(DownUpError, ValueError):
    """Syntax error in an expression; ``pos`` is the 0-based column."""

    def __init__(self, message: str, text: str = "", pos: int = 0):
        self.text = text
        self.pos = pos
        super().__init__(f"{message} at position {pos}")

    def diagnostic(self) -> str:
        return f"{self.args[0]}\n  {self.text}\n  {' ' * self.pos}^"
