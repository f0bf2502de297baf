from typing import Optional


class UDGError(Exception):
    """Base class for every error raised by the solver package."""


class InputError(UDGError, ValueError):
    """Bad point data or an index that does not belong to the instance."""


class ParseError(InputError):
    """
    Malformed instance or solution text.

    Args:
        message (str): What went wrong.
        line (Optional[int]): 1-based line number of the offending line, if known.
    """

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ParameterError(UDGError, ValueError):
    """Invalid d, k, generator or settings value."""


class OracleCapExceeded(ParameterError):
    def __init__(self, n: int, cap: int):
        self.n = n
        self.cap = cap
        super().__init__(f"oracle refused: instance has {n} points, cap is {cap}")


class InfeasibleSolutionError(UDGError):
    """
    Raised when a produced solution fails verification.

    The report and a serialized copy of the offending instance travel with the
    error so the CLI can dump them.
    """

    def __init__(self, message: str, report=None, instance_dump: str = ""):
        self.report = report
        self.instance_dump = instance_dump
        super().__init__(message)
