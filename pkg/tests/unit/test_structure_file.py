"""Tests for hopfext.storage.structure_file."""

import numpy as np
import pytest

from hopfext.hopf.axioms import corrupt_comult
from hopfext.hopf.builder import build, group_algebra
from hopfext.models.schemas import AxiomViolationError
from hopfext.storage.structure_file import (
    HEADER,
    StructureFileError,
    export_algebra,
    format_structure,
    load_structure,
    write_structure,
)


@pytest.fixture(scope="module")
def h8(swap_class_2, swap_X_2):
    """The 8-dimensional noncommutative, noncocommutative algebra."""
    from hopfext.orbits import orbits

    point = next(r.representative for r in orbits(swap_X_2).orbits if not r.cocommutative)
    return build(swap_class_2, point, swap_X_2)


class TestFormat:
    """Tests for format_structure()."""

    def test_header_lines(self, h8):
        lines = format_structure(h8).splitlines()
        assert lines[0] == HEADER
        assert "dimension 8" in lines
        assert "group Z2xZ2" in lines
        assert "action 0,1;1,0" in lines

    def test_group_algebra_twist_empty(self, swap_class_2):
        """The zero class writes an empty [twist] section."""
        text = format_structure(group_algebra(swap_class_2.representative))
        assert text.rstrip().endswith("[twist]")


class TestLoad:
    """Tests for write_structure() and load_structure()."""

    def test_round_trip(self, h8, tmp_path):
        """Every table survives a write and load."""
        loaded = load_structure(write_structure(h8, tmp_path / "h8.hopf"))
        assert loaded.label == h8.label
        assert loaded.t == h8.t
        for name in ("mult", "comult_left", "comult_right", "comult_exp", "antipode_target", "counit", "twist"):
            assert np.array_equal(getattr(loaded, name), getattr(h8, name)), name

    def test_group_algebra_round_trip(self, swap_class_2, tmp_path):
        """An empty [twist] loads as zeros."""
        H = group_algebra(swap_class_2.representative)
        loaded = load_structure(write_structure(H, tmp_path / "ga.hopf"))
        assert loaded.twist.shape == (4, 4)
        assert not loaded.twist.any()

    def test_missing_header(self, tmp_path):
        path = tmp_path / "bad.hopf"
        path.write_text("dimension 8\n")
        with pytest.raises(StructureFileError, match="Missing header"):
            load_structure(path)

    def test_missing_section(self, h8, tmp_path):
        path = tmp_path / "cut.hopf"
        path.write_text(format_structure(h8).split("[antipode]")[0])
        with pytest.raises(StructureFileError, match="Missing section"):
            load_structure(path)

    def test_wrong_row_count(self, h8, tmp_path):
        """A dropped mult row is caught by the shape check."""
        lines = format_structure(h8).splitlines()
        del lines[lines.index("[mult]") + 1]
        path = tmp_path / "short.hopf"
        path.write_text("\n".join(lines) + "\n")
        with pytest.raises(StructureFileError, match=r"\[mult\] has shape"):
            load_structure(path)


class TestExportAlgebra:
    """Tests for export_algebra()."""

    def test_writes_structure_and_presentation(self, h8, tmp_path):
        paths = export_algebra(h8, tmp_path)
        assert [p.suffix for p in paths] == [".hopf", ".txt"]
        assert all(p.exists() for p in paths)
        assert "#" not in paths[0].name

    def test_refuses_failing_structure(self, h8, tmp_path):
        """Nothing is written for a structure that fails an axiom."""
        with pytest.raises(AxiomViolationError):
            export_algebra(corrupt_comult(h8), tmp_path / "out")
        assert not (tmp_path / "out").exists()
