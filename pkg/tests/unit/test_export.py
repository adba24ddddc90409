"""Tests for hopfext.storage.export - report rendering."""

import orjson
import pytest

from hopfext.algebra.groups import parse_group
from hopfext.census import classify
from hopfext.models.schemas import CriterionResult, SuiteVerdict
from hopfext.storage.export import (
    TSV_COLUMNS,
    render,
    to_json,
)


@pytest.fixture(scope="module")
def report():
    """Classification of Z2 x Z2 with p = 2."""
    return classify(parse_group("Z2xZ2"), 2)


@pytest.fixture
def verdict() -> SuiteVerdict:
    return SuiteVerdict(
        suite="counts",
        criteria=[
            CriterionResult(name="dim p^3 at p=3", passed=True, observed=4, expected=4),
            CriterionResult(name="dim p^3 at p=5", passed=False, observed=3, expected=4),
        ],
    )


class TestRender:
    """Tests for render()."""

    def test_json(self, report):
        """JSON carries totals and one entry per class."""
        data = orjson.loads(render(report, "json"))
        assert data["group"] == "Z2xZ2"
        assert data["prime"] == 2
        assert data["total"] == report.total
        assert len(data["classes"]) == 2

    def test_json_is_deterministic(self, report):
        """Same report, same bytes, newline-terminated."""
        first = to_json(report)
        assert first == to_json(report)
        assert first.endswith(b"\n")

    def test_tsv(self, report):
        """Comment header, column row, one row per orbit."""
        lines = render(report, "tsv").splitlines()
        assert lines[0] == "# group\tZ2xZ2"
        header = lines.index("\t".join(TSV_COLUMNS))
        rows = lines[header + 1 :]
        assert len(rows) == sum(len(entry.orbits) for entry in report.classes)
        assert all(len(row.split("\t")) == len(TSV_COLUMNS) for row in rows)

    def test_text(self, report):
        """Text names the group and every family."""
        text = render(report, "text")
        assert "G = Z2xZ2" in text
        assert "[trivial]" in text
        assert "[elementary-two-swap]" in text

    def test_suite_text(self, verdict):
        """A failing criterion marks the suite FAIL."""
        text = render(verdict, "text")
        assert text.startswith("counts: FAIL")
        assert "✗ dim p^3 at p=5" in text

    def test_tsv_needs_classification(self, verdict):
        with pytest.raises(ValueError, match="only defined for classification"):
            render(verdict, "tsv")

