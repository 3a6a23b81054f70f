"""Exception hierarchy shared by every rpq_lab module."""

from typing import Optional


class RpqLabError(Exception):
    """Base class for all errors raised by rpq_lab."""


class ConcatError(RpqLabError):
    """Two walks do not meet at a common junction vertex."""


class RenamingError(RpqLabError):
    """A renaming or relabeling is not a namespace-preserving bijection."""


class CharacteristicError(RpqLabError):
    """A characteristic database or expression cannot be built."""


class ContractError(RpqLabError):
    """A caller-supplied object breaks a documented contract."""


class InputError(RpqLabError):
    """Invalid user input: unknown vertex, missing cost, bad file, and so on."""


class GraphFormatError(InputError):
    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ParseError(InputError):
    def __init__(self, message: str, position: int):
        self.position = position
        super().__init__(f"{message} at position {position}")


class InconsistentWalk(InputError):
    """A walk refers to elements or incidences absent from the database."""


class ResultCapError(RpqLabError):
    def __init__(self, cap: int, what: str = "result"):
        self.cap = cap
        super().__init__(f"{what} exceeded the cap of {cap} walks (set RPQLAB_CAP to raise it)")
