"""Structured logging configuration.

This module provides centralized logging setup with:
- JSON output on stderr (stdout is reserved for computed results)
- Run ID correlation using context variables
- Hybrid dotted namespace pattern (domain.component.action_state)
- Exception formatting with exc_info for stack traces

Event Naming Pattern:
    Format: {domain}.{component}.{action}_{state}

    Examples:
        - tables.build.table_started
        - series.quadrature.tail_completed
        - engine.romberg.evaluate_started
        - engine.constant.escalation_step
"""

import logging
import sys
import uuid
from contextvars import ContextVar

import structlog
from structlog.typing import EventDict, WrappedLogger

# Context variable for run correlation ID (one per command invocation)
run_id_var: ContextVar[str] = ContextVar("run_id", default="")


def get_run_id() -> str:
    """Get the current run ID from context.

    Returns:
        The current run ID, or empty string if not set.
    """
    return run_id_var.get()


def set_run_id(run_id: str | None = None) -> str:
    """Set run ID in context, generating one if not provided.

    Args:
        run_id: Optional run ID to set. If None, generates a new UUID.

    Returns:
        The run ID that was set.
    """
    if not run_id:
        run_id = str(uuid.uuid4())
    run_id_var.set(run_id)
    return run_id


def add_run_id(_logger: WrappedLogger, _method_name: str, event_dict: EventDict) -> EventDict:
    """Processor to add run ID to all log entries.

    Args:
        _logger: The logger instance (unused, required by structlog).
        _method_name: The logging method name (unused, required by structlog).
        event_dict: The event dictionary to process.

    Returns:
        The modified event dictionary with run_id added.
    """
    run_id = get_run_id()
    if run_id:
        event_dict["run_id"] = run_id
    return event_dict


def setup_logging(log_level: str | None = None) -> None:
    """Configure structured logging.

    Sets up structlog with JSON output and the following processors:
    - Run ID correlation
    - Context variables merging
    - Log level addition
    - ISO timestamp
    - Stack info rendering
    - Exception formatting with full tracebacks
    - JSON rendering

    Args:
        log_level: The logging level (DEBUG, INFO, WARNING, ERROR, CRITICAL).
            Defaults to the LOG_LEVEL setting of get_settings().
    """
    if log_level is None:
        # Deferred: config imports modules that log
        from app.core.config import get_settings

        log_level = get_settings().log_level

    # Convert string log level to integer using logging constants
    # logging.getLevelName(str) is deprecated in Python 3.12+
    level_int = getattr(logging, log_level.upper())

    structlog.configure(
        processors=[
            add_run_id,  # Add run ID to every log entry
            structlog.contextvars.merge_contextvars,  # Merge context variables
            structlog.processors.add_log_level,  # Add log level
            structlog.processors.TimeStamper(fmt="iso"),  # ISO 8601 timestamps
            structlog.processors.StackInfoRenderer(),  # Render stack info
            structlog.processors.format_exc_info,  # Format exception tracebacks
            structlog.processors.JSONRenderer(),  # One JSON object per line
        ],
        wrapper_class=structlog.make_filtering_bound_logger(level_int),
        context_class=dict,
        # stdout carries computed results only
        logger_factory=structlog.PrintLoggerFactory(file=sys.stderr),
        # Loggers must pick up reconfiguration between runs
        cache_logger_on_first_use=False,
    )


def get_logger(name: str) -> WrappedLogger:
    """Get a logger instance for a module.

    Use the hybrid dotted namespace pattern: domain.component.action_state

    Args:
        name: The logger name, typically __name__.

    Returns:
        A configured structlog logger instance.

    Example:
        >>> logger = get_logger(__name__)
        >>> logger.info("engine.em.evaluate_started", alpha=2, switch_index=20)
    """
    return structlog.get_logger(name)
