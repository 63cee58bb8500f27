"""
Logging setup for the library and the CLI.

Everything goes to stderr: stdout is reserved for the single JSON document
the CLI prints.
"""

import logging
import sys

import structlog

_CONFIGURED = False


class _Stderr:
    """Resolves sys.stderr at write time, so redirected or captured streams are honoured."""

    def write(self, s: str) -> int:
        return sys.stderr.write(s)

    def flush(self) -> None:
        sys.stderr.flush()


def setup_logging(level: str = "INFO", json_lines: bool = False) -> None:
    """
    Configure structlog once. Console rendering by default, JSON lines on request.
    """
    global _CONFIGURED
    log_level = getattr(logging, level.upper(), logging.INFO)
    renderer = structlog.processors.JSONRenderer() if json_lines else structlog.dev.ConsoleRenderer(colors=False)
    structlog.configure(
        processors=[
            structlog.contextvars.merge_contextvars,
            structlog.processors.add_log_level,
            structlog.processors.TimeStamper(fmt="%H:%M:%S"),
            renderer,
        ],
        wrapper_class=structlog.make_filtering_bound_logger(log_level),
        logger_factory=structlog.PrintLoggerFactory(file=_Stderr()),
        cache_logger_on_first_use=False,
    )
    _CONFIGURED = True


def get_logger(name: str):
    if not _CONFIGURED:
        from ..config import get_settings
        s = get_settings()
        setup_logging(s.LOG_LEVEL, s.LOG_JSON)
    return structlog.get_logger(name)


def log_info(msg: str, **kw):
    get_logger("qalink").info(msg, **kw)

def log_warn(msg: str, **kw):
    get_logger("qalink").warning(msg, **kw)

def log_error(msg: str, **kw):
    get_logger("qalink").error(msg, **kw)
