"""Tests for hopfext.verification - named acceptance suites."""

import pytest

from hopfext.constants import VerifySuite
from hopfext.models.schemas import CriterionResult, SuiteVerdict
from hopfext.verification import run_suite, summary_row


class TestRunSuite:
    """Tests for run_suite()."""

    def test_sections(self):
        """The section search suite passes."""
        verdict = run_suite("sections")
        assert verdict.suite == "sections"
        assert verdict.passed, [c.name for c in verdict.criteria if not c.passed]

    def test_dim8(self):
        """H8 is found, verified and has four grouplikes."""
        verdict = run_suite(VerifySuite.DIM_8)
        assert verdict.passed, [c.name for c in verdict.criteria if not c.passed]
        assert len(verdict.criteria) == 6

    def test_oracle_small_bound(self):
        """A small sweep bound keeps the oracle suite quick."""
        verdict = run_suite(VerifySuite.ORACLE, max_order=4)
        assert verdict.criteria
        assert verdict.passed

    @pytest.mark.slow
    def test_axioms_reach_dimension_625(self):
        """Dimensions 81, 125 and 625 are checked and the corrupted control is caught."""
        verdict = run_suite(VerifySuite.AXIOMS)
        assert verdict.passed, [c.name for c in verdict.criteria if not c.passed]
        names = [c.name for c in verdict.criteria]
        assert sum(name.endswith("(dim 81)") for name in names) >= 4
        assert any(name.endswith("(dim 125)") for name in names)
        assert any(name.endswith("(dim 625)") for name in names)
        assert "corrupted Δ fails comultiplicativity with a witness" in names

    def test_all_alias_rejected(self):
        with pytest.raises(ValueError, match="run_all"):
            run_suite("all")

    def test_unknown_suite(self):
        with pytest.raises(ValueError):
            run_suite("everything")


class TestSummaryRow:
    """Tests for summary_row()."""

    def test_failed_names(self):
        verdict = SuiteVerdict(
            suite="counts",
            criteria=[
                CriterionResult(name="a", passed=True),
                CriterionResult(name="b", passed=False),
            ],
        )
        assert summary_row(verdict) == {"suite": "counts", "passed": False, "criteria": 2, "failed": ["b"]}

    def test_runnable_excludes_all(self):
        assert VerifySuite.ALL not in VerifySuite.runnable()
        assert VerifySuite.runnable()[0] is VerifySuite.COUNTS
