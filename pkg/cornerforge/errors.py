"""
Exceptions and process exit codes for cornerforge.
"""

from typing import Optional


EXIT_OK = 0
EXIT_CORNER_FOUND = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3


class CornerForgeError(Exception):
    """Base class for all cornerforge errors."""

    exit_code = EXIT_USAGE


class DomainError(CornerForgeError, ValueError):
    """An argument violates a documented precondition."""


class PointFileError(DomainError):
    """A point-set file could not be parsed."""

    def __init__(self, message: str, line: Optional[int] = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class ResourceError(CornerForgeError):
    """A configured size or work cap would be exceeded."""

    exit_code = EXIT_RESOURCE

    def __init__(self, message: str, count: Optional[int] = None):
        super().__init__(message)
        self.count = count


def exit_code_for(exc: BaseException) -> int:
    """
    Map an exception to the command-line exit code.

    Args:
        exc: Exception raised while running a command

    Returns:
        Exit code (2 for usage/domain problems, 3 for resource caps)
    """
    if isinstance(exc, CornerForgeError):
        return exc.exit_code
    return EXIT_USAGE
