"""Tests for hopfext.config and hopfext.utils.logging."""

import logging
import os

import orjson

from hopfext.config import (
    DEFAULT_SEED,
    MAX_AUTOMORPHISMS,
    MAX_GROUP_ORDER,
    MAX_ORACLE_ORDER,
    OUTPUTS_DIR,
    PACKAGE_ROOT,
    TEMPLATES_DIR,
    VALID_FORMATS,
    WORKING_DIR,
)
from hopfext.utils.logging import RunContextFilter, StructuredFormatter, current_context, log_context, setup_logging


class TestPaths:
    """Tests for path configuration."""

    def test_package_root_exists(self):
        assert PACKAGE_ROOT.is_dir()

    def test_templates_dir_has_yaml_files(self):
        """Report and presentation templates ship with the package."""
        names = {path.stem for path in TEMPLATES_DIR.glob("*.yaml")}
        assert {"report", "presentation"} <= names

    def test_outputs_dir_path(self):
        """Outputs default to WORKING_DIR/outputs unless overridden."""
        if "HOPFEXT_OUTPUT_DIR" not in os.environ:
            assert OUTPUTS_DIR == WORKING_DIR / "outputs"


class TestBudgets:
    """Tests for budget defaults."""

    def test_budgets_positive(self):
        assert MAX_GROUP_ORDER > 0
        assert MAX_AUTOMORPHISMS > 0
        assert MAX_ORACLE_ORDER > 0
        assert DEFAULT_SEED >= 0

    def test_formats(self):
        assert set(VALID_FORMATS) >= {"json", "text"}


class TestLogging:
    """Tests for setup_logging() and StructuredFormatter."""

    def test_setup_level(self):
        logger = setup_logging(level="DEBUG")
        try:
            assert logger.name == "hopfext"
            assert logger.level == logging.DEBUG
            assert len(logger.handlers) == 1
            assert logger.propagate is False
        finally:
            setup_logging()

    def test_json_format(self):
        record = logging.LogRecord("hopfext.census", logging.INFO, __file__, 1, "counted %d", (10,), None)
        data = orjson.loads(StructuredFormatter(use_json=True).format(record))
        assert data["level"] == "INFO"
        assert data["logger"] == "hopfext.census"
        assert data["message"] == "counted 10"

    def test_text_format(self):
        record = logging.LogRecord("hopfext.orbits", logging.WARNING, __file__, 1, "odd orbit", (), None)
        assert "[WARNING] hopfext.orbits: odd orbit" in StructuredFormatter().format(record)

    def test_handler_attaches_run_context(self):
        logger = setup_logging()
        try:
            assert any(isinstance(f, RunContextFilter) for f in logger.handlers[0].filters)
        finally:
            setup_logging()


class TestLogContext:
    """Tests for log_context() and the fields it adds to records."""

    @staticmethod
    def _record() -> logging.LogRecord:
        record = logging.LogRecord("hopfext.oracle", logging.DEBUG, __file__, 1, "lattice built", (), None)
        RunContextFilter().filter(record)
        return record

    def test_fields_in_json(self):
        """Context fields become top-level JSON keys."""
        with log_context(command="classify", group="Z3xZ3", prime=3):
            record = self._record()
        data = orjson.loads(StructuredFormatter(use_json=True).format(record))
        assert data["command"] == "classify"
        assert data["group"] == "Z3xZ3"
        assert data["prime"] == 3
        assert data["message"] == "lattice built"

    def test_fields_in_text(self):
        """Text lines end with the fields in a fixed order."""
        with log_context(prime=5, command="verify", suite="counts"):
            record = self._record()
        assert StructuredFormatter().format(record).endswith("lattice built (command=verify prime=5 suite=counts)")

    def test_nesting_and_reset(self):
        """Inner blocks extend the outer fields and drop None values."""
        with log_context(command="verify"):
            with log_context(group="Z2xZ2", prime=None):
                assert current_context() == {"command": "verify", "group": "Z2xZ2"}
            assert current_context() == {"command": "verify"}
        assert current_context() == {}

    def test_no_context(self):
        """Outside any block the text line has no suffix."""
        assert StructuredFormatter().format(self._record()).endswith("hopfext.oracle: lattice built")
