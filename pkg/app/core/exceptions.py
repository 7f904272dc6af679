"""Custom exception classes and the exit-code handler used by the command line."""

from typing import Any

from pydantic import ValidationError

from app.core.logging import get_logger

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_NUMERICAL_FAILURE = 1
EXIT_USAGE = 2


class SeriesError(Exception):
    """Base exception for all series evaluation errors."""

    pass


class DomainError(SeriesError, ValueError):
    """Exception raised when an argument lies outside a function's domain."""

    pass


class ConfigurationError(SeriesError, ValueError):
    """Exception raised when an engine configuration is inconsistent."""

    pass


class ConvergenceError(SeriesError):
    """Exception raised when an escalation schedule fails to stabilize.

    Attributes:
        previous: Value of the second-to-last configuration tried.
        last: Value of the last configuration tried.
    """

    def __init__(self, message: str, previous: Any, last: Any) -> None:
        super().__init__(message)
        self.previous = previous
        self.last = last


def exit_code_for(exc: BaseException) -> int:
    """Map an exception to a process exit code and log it.

    Args:
        exc: The exception that ended the command.

    Returns:
        1 for numerical or convergence failures, 2 for usage and configuration errors.
    """
    exit_code = EXIT_NUMERICAL_FAILURE
    if isinstance(exc, ConfigurationError | ValidationError):
        exit_code = EXIT_USAGE

    logger.error(
        "cli.command.run_failed",
        error_type=type(exc).__name__,
        error_message=str(exc),
        exit_code=exit_code,
        exc_info=exc,
    )
    return exit_code
