"""Tests for hopfext.models.run_config.RunConfig."""

import pytest
from pydantic import ValidationError

from hopfext import config
from hopfext.constants import ReportFormat, VerifySuite
from hopfext.models.run_config import RunConfig
from hopfext.models.schemas import BudgetExceededError, GroupDescriptorError


class TestRunConfigValid:
    """Accepted configurations."""

    def test_classify(self):
        """Group commands parse their group once validated."""
        cfg = RunConfig(command="classify", group="Z3xZ3", prime=3, format="json")
        assert cfg.format is ReportFormat.JSON
        assert cfg.abelian_group.order == 9

    def test_defaults_follow_config(self):
        """Budgets and seed default to the module config."""
        cfg = RunConfig(command="verify")
        assert cfg.max_group_order == config.MAX_GROUP_ORDER
        assert cfg.seed == config.DEFAULT_SEED
        assert cfg.suite is VerifySuite.ALL

    def test_families_sorted_and_deduplicated(self):
        """Repeated --family flags collapse."""
        cfg = RunConfig(
            command="classify", group="Z3xZ3", prime=3, families=["trivial", "elementary-regular", "trivial"]
        )
        assert cfg.families == ["elementary-regular", "trivial"]

    def test_apply_budgets(self):
        """apply_budgets installs the run's caps."""
        RunConfig(command="verify", max_group_order=50, max_automorphisms=10).apply_budgets()
        assert config.MAX_GROUP_ORDER == 50
        assert config.MAX_AUTOMORPHISMS == 10


class TestRunConfigInvalid:
    """Rejected configurations."""

    def test_unknown_command(self):
        with pytest.raises(ValidationError, match="Unknown command"):
            RunConfig(command="solve")

    def test_group_command_needs_prime(self):
        """classify without --prime is incomplete."""
        with pytest.raises(ValidationError, match="needs --group and --prime"):
            RunConfig(command="classify", group="Z3xZ3")

    def test_bad_descriptor(self):
        """An unparseable group fails before any computation."""
        with pytest.raises((ValidationError, GroupDescriptorError)):
            RunConfig(command="classify", group="Q8", prime=2)

    def test_group_over_budget(self):
        """|G| above max_group_order fails fast."""
        with pytest.raises((ValidationError, BudgetExceededError), match="group order"):
            RunConfig(command="classify", group="Z3xZ3", prime=3, max_group_order=8)

    def test_unknown_family(self):
        with pytest.raises(ValidationError, match="Unknown action families"):
            RunConfig(command="classify", group="Z3xZ3", prime=3, families=["exotic"])

    def test_bad_format(self):
        with pytest.raises(ValidationError, match="Format must be one of"):
            RunConfig(command="verify", format="xml")

    def test_composite_scan_prime(self):
        """Scan primes must be prime."""
        with pytest.raises(ValidationError, match="Not prime"):
            RunConfig(command="scan", primes=[3, 9])

    def test_export_needs_selection(self):
        """export takes --all or --rep."""
        with pytest.raises(ValidationError, match="--all or --rep"):
            RunConfig(command="export", group="Z2xZ2", prime=2)

    def test_export_selection_exclusive(self):
        with pytest.raises(ValidationError, match="mutually exclusive"):
            RunConfig(command="export", group="Z2xZ2", prime=2, all_reps=True, reps=[0, 1])
