"""Tests for hopfext.utils.templates."""

import pytest

from hopfext.utils.templates import (
    extract_variables,
    load_template,
    render_template,
    resolve_template_path,
)


class TestExtractVariables:
    """Tests for extract_variables()."""

    def test_simple(self):
        assert extract_variables("{{ label }} of {{ dimension }}") == {"label", "dimension"}

    def test_loop_variables_excluded(self):
        """Loop targets and loop helpers are not inputs."""
        source = "{% for row in delta_t %}{{ elements[loop.index0] }} {{ row }}{% endfor %}"
        assert extract_variables(source) == {"delta_t", "elements"}

    def test_tuple_loop(self):
        source = "{% for key, block in blocks.items() %}{{ key }}{{ block.label }}{% endfor %}"
        assert extract_variables(source) == {"blocks"}

    def test_negated_condition(self):
        """`not` is a keyword, never a variable."""
        assert extract_variables("{% if not passed %}x{% endif %}") == set()


class TestRenderTemplate:
    """Tests for template loading and rendering."""

    def test_packaged_templates_load(self):
        assert set(load_template("presentation")) == {"text"}
        assert {"text", "suite"} <= set(load_template("report"))

    def test_missing_file(self, tmp_path):
        with pytest.raises(FileNotFoundError, match="Template not found"):
            resolve_template_path("absent", tmp_path)

    def test_missing_section(self, tmp_path):
        (tmp_path / "demo.yaml").write_text("text: 'hello'\n")
        with pytest.raises(KeyError, match="no section 'other'"):
            render_template("demo", "other", {}, tmp_path)

    def test_missing_variable(self, tmp_path):
        """All variables must be supplied up front."""
        (tmp_path / "demo.yaml").write_text("text: '{{ group }} at p={{ prime }}'\n")
        with pytest.raises(ValueError, match="Missing required variable.*prime"):
            render_template("demo", "text", {"group": "Z3"}, tmp_path)

    def test_render(self, tmp_path):
        (tmp_path / "demo.yaml").write_text("text: '{{ group }} at p={{ prime }}'\n")
        assert render_template("demo", "text", {"group": "Z3", "prime": 3}, tmp_path) == "Z3 at p=3"
