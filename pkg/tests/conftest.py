"""Shared test fixtures for hopfext tests.

Groups, action classes and classifying groups used across unit tests.
Building X(⊳) is the expensive step, so the common ones are session-scoped.
"""

import pytest

from hopfext import config
from hopfext.actions import ActionClass, catalog_actions
from hopfext.algebra.groups import AbelianGroup, parse_group
from hopfext.classifying import ClassifyingGroup, build_X
from hopfext.constants import ActionFamily

# =============================================================================
# Budgets
# =============================================================================


@pytest.fixture(autouse=True)
def restore_budgets(monkeypatch):
    """RunConfig.apply_budgets writes module globals; undo after each test."""
    monkeypatch.setattr(config, "MAX_GROUP_ORDER", config.MAX_GROUP_ORDER)
    monkeypatch.setattr(config, "MAX_AUTOMORPHISMS", config.MAX_AUTOMORPHISMS)


# =============================================================================
# Groups
# =============================================================================


@pytest.fixture
def z3xz3() -> AbelianGroup:
    return parse_group("Z3xZ3")


@pytest.fixture
def z2xz2() -> AbelianGroup:
    return parse_group("Z2xZ2")


@pytest.fixture
def z9xz3() -> AbelianGroup:
    return parse_group("Z9xZ3")


# =============================================================================
# Action classes and classifying groups
# =============================================================================


def _by_family(classes: list[ActionClass], family: ActionFamily) -> ActionClass:
    return next(c for c in classes if c.family is family)


@pytest.fixture(scope="session")
def z3xz3_classes() -> list[ActionClass]:
    """Trivial and regular classes of C_3 on Z_3 x Z_3."""
    return catalog_actions(parse_group("Z3xZ3"), 3)


@pytest.fixture(scope="session")
def regular_class_3(z3xz3_classes) -> ActionClass:
    return _by_family(z3xz3_classes, ActionFamily.ELEMENTARY_REGULAR)


@pytest.fixture(scope="session")
def trivial_class_3(z3xz3_classes) -> ActionClass:
    return _by_family(z3xz3_classes, ActionFamily.TRIVIAL)


@pytest.fixture(scope="session")
def regular_X_3(regular_class_3) -> ClassifyingGroup:
    return build_X(regular_class_3)


@pytest.fixture(scope="session")
def z2xz2_classes() -> list[ActionClass]:
    """Trivial and swap classes of C_2 on Z_2 x Z_2."""
    return catalog_actions(parse_group("Z2xZ2"), 2)


@pytest.fixture(scope="session")
def swap_class_2(z2xz2_classes) -> ActionClass:
    return _by_family(z2xz2_classes, ActionFamily.ELEMENTARY_TWO_SWAP)


@pytest.fixture(scope="session")
def swap_X_2(swap_class_2) -> ClassifyingGroup:
    return build_X(swap_class_2)


# =============================================================================
# Outputs
# =============================================================================


@pytest.fixture
def outputs_dir(tmp_path, monkeypatch):
    """Redirect the default structure export directory to a temp directory."""
    target = tmp_path / "outputs"
    monkeypatch.setattr(config, "OUTPUTS_DIR", target)
    return target
