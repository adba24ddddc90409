"""Utility modules for hopfext."""

from hopfext.utils.logging import log_context, setup_logging
from hopfext.utils.templates import load_template, render_template

__all__ = [
    "log_context",
    "setup_logging",
    "load_template",
    "render_template",
]
