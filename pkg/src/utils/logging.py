"""
Logging configuration for the spectral density toolkit.
Structured logging to stderr; stdout is reserved for reports and CSV.
"""

import logging
import os
import sys
from typing import Any, Optional

import structlog
from structlog.dev import ConsoleRenderer
from structlog.processors import JSONRenderer, TimeStamper, add_log_level
from structlog.stdlib import LoggerFactory

SERVICE_NAME = "specdens"


def setup_logging(
    level: Optional[str] = None,
    json_output: Optional[bool] = None,
    service_name: str = SERVICE_NAME,
) -> None:
    """
    Set up structured logging configuration.

    Args:
        level: Log level (DEBUG, INFO, WARNING, ERROR); defaults to $LOG_LEVEL or WARNING
        json_output: Whether to render JSON lines; defaults to $LOG_JSON
        service_name: Service name to include in logs
    """
    if level is None:
        level = os.getenv("LOG_LEVEL", "WARNING")
    level = level.upper()

    if json_output is None:
        json_output = os.getenv("LOG_JSON", "").lower() in ("1", "true", "yes")

    processors = [
        structlog.stdlib.filter_by_level,
        structlog.stdlib.add_logger_name,
        add_log_level,
        TimeStamper(fmt="iso"),
        structlog.processors.StackInfoRenderer(),
        structlog.processors.format_exc_info,
        add_service_context(service_name),
    ]

    if json_output:
        processors.append(JSONRenderer())
    else:
        processors.append(ConsoleRenderer(colors=False))

    structlog.configure(
        processors=processors,
        wrapper_class=structlog.stdlib.BoundLogger,
        logger_factory=LoggerFactory(),
        cache_logger_on_first_use=True,
    )

    root = logging.getLogger()
    for handler in list(root.handlers):
        root.removeHandler(handler)
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("%(message)s"))
    root.addHandler(handler)
    root.setLevel(getattr(logging, level, logging.WARNING))


def add_service_context(service_name: str):
    """Add service context to all log entries."""
    def processor(logger, method_name, event_dict):
        event_dict["service"] = service_name
        event_dict["version"] = os.getenv("SERVICE_VERSION", "unknown")
        return event_dict
    return processor


def log_verification_event(
    logger,
    check: str,
    subject: str,
    passed: bool,
    **data: Any,
) -> None:
    """Log the outcome of one verification with structured data."""
    log_data = {"check": check, "subject": subject, "passed": passed, **data}
    if passed:
        logger.info(f"Verification passed: {check}", **log_data)
    else:
        logger.warning(f"Verification failed: {check}", **log_data)


def get_logger(name: Optional[str] = None):
    """Get a configured logger instance."""
    if name is None:
        name = __name__
    return structlog.get_logger(name)


# Initialize logging on module import
if not structlog.is_configured():
    setup_logging()
