"""Structured logging for hopfext.

Log lines go to stderr so reports on stdout stay clean. Each CLI command
runs inside log_context(), which tags every record with the command and
the (G, p) it is working on.
"""

import logging
import os
import sys
from collections.abc import Iterator
from contextlib import contextmanager
from contextvars import ContextVar
from typing import Any

import orjson

CONTEXT_FIELDS = ("command", "group", "prime", "suite")

_context: ContextVar[dict[str, Any]] = ContextVar("hopfext_log_context", default={})


@contextmanager
def log_context(**fields: Any) -> Iterator[dict[str, Any]]:
    """Attach run fields to every record logged inside the block.

    None values are dropped; nested blocks extend the outer fields.
    """
    merged = {**_context.get(), **{k: v for k, v in fields.items() if v is not None}}
    token = _context.set(merged)
    try:
        yield merged
    finally:
        _context.reset(token)


def current_context() -> dict[str, Any]:
    return dict(_context.get())


class RunContextFilter(logging.Filter):
    """Copy the active log_context() fields onto the record."""

    def filter(self, record: logging.LogRecord) -> bool:
        record.context = current_context()
        return True


class StructuredFormatter(logging.Formatter):
    """JSON lines with LOG_FORMAT=json, otherwise one readable line per record.

    Run context is a flat set of keys in JSON and a `key=value` suffix in text.
    """

    def __init__(self, use_json: bool = False):
        super().__init__()
        self.use_json = use_json

    def format(self, record: logging.LogRecord) -> str:
        context = getattr(record, "context", None) or {}
        if self.use_json:
            log_data = {
                "timestamp": self.formatTime(record),
                "level": record.levelname,
                "logger": record.name,
                "message": record.getMessage(),
                **context,
            }
            if record.exc_info:
                log_data["exception"] = self.formatException(record.exc_info)
            return orjson.dumps(log_data, default=str).decode()
        base = f"{self.formatTime(record)} [{record.levelname}] {record.name}: {record.getMessage()}"
        if context:
            tags = " ".join(f"{key}={context[key]}" for key in CONTEXT_FIELDS if key in context)
            base += f" ({tags})"
        if record.exc_info:
            base += f"\n{self.formatException(record.exc_info)}"
        return base


def setup_logging(
    level: str | None = None,
    use_json: bool | None = None,
) -> logging.Logger:
    """Configure the hopfext logger.

    Args:
        level: Log level (DEBUG, INFO, WARNING, ERROR).
               Defaults to LOG_LEVEL env var or WARNING.
        use_json: If True, output JSON lines.
                  Defaults to LOG_FORMAT=json env var.

    Returns:
        The "hopfext" package logger
    """
    if level is None:
        level = os.getenv("LOG_LEVEL", "WARNING")

    if use_json is None:
        use_json = os.getenv("LOG_FORMAT", "").lower() == "json"

    logger = logging.getLogger("hopfext")
    logger.setLevel(getattr(logging, level.upper()))
    logger.handlers.clear()

    handler = logging.StreamHandler(sys.stderr)
    handler.addFilter(RunContextFilter())
    handler.setFormatter(StructuredFormatter(use_json=use_json))
    logger.addHandler(handler)

    # Reports go to stdout; keep the root logger out of it
    logger.propagate = False

    return logger


_root_logger = setup_logging()
