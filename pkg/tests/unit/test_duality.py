"""Tests for hopfext.hopf.duality - duals in dimension p^3."""

import numpy as np
import pytest

from hopfext.actions import catalog_actions
from hopfext.algebra.groups import parse_group
from hopfext.constants import ActionFamily
from hopfext.hopf.builder import build_from_cocycle
from hopfext.hopf.duality import (
    dual_cocycle_p3,
    dual_cocycle_table,
    duality_is_involutive,
    e_wedge_f,
    scaled_point,
)
from hopfext.models.schemas import PreconditionError


@pytest.fixture(scope="module")
def duality_3(regular_class_3, regular_X_3):
    return dual_cocycle_p3(regular_class_3, regular_X_3)


class TestWedge:
    """Tests for the e*∧f* table."""

    def test_alternating(self, regular_X_3):
        """e*∧f*(a, a) = 0 and the table is antisymmetric."""
        table = e_wedge_f(regular_X_3)
        M = regular_X_3.modulus
        assert not np.diag(table).any()
        assert not ((table + table.T) % M).any()

    def test_noncocommutative_class(self, regular_X_3):
        """e*∧f* has a nonzero alternating part."""
        point = regular_X_3.classify_cocycle(e_wedge_f(regular_X_3))
        assert any(regular_X_3.element(point).alt_coords)


class TestDualCocycle:
    """Tests for dual_cocycle_p3()."""

    def test_coefficient_p3(self, duality_3):
        """For p = 3 the dual class is (p-1)/2 times the input."""
        assert duality_3.prime == 3
        assert duality_3.coefficient == 1
        assert duality_3.legendre == 1

    def test_self_dual_p3(self, duality_3):
        """p = 3: the dual lies in the orbit of the input."""
        assert duality_3.same_orbit
        assert duality_3.self_dual

    def test_nonresidue_p5(self):
        """p = 5: coefficient 2 is a nonresidue, so the dual leaves the orbit."""
        regular = next(
            c for c in catalog_actions(parse_group("Z5xZ5"), 5) if c.family is ActionFamily.ELEMENTARY_REGULAR
        )
        result = dual_cocycle_p3(regular)
        assert result.coefficient == 2
        assert result.legendre == -1
        assert not result.self_dual

    def test_symmetric_part_killed(self, duality_3):
        """The coboundary part of the dual cocycle lies in ker φ."""
        assert duality_3.coboundary_in_ker_phi

    def test_dual_table_is_cocycle_class(self, regular_class_3, regular_X_3):
        """The dual table classifies to a point of X."""
        H = build_from_cocycle(regular_class_3.representative, e_wedge_f(regular_X_3))
        table = dual_cocycle_table(H)
        point = regular_X_3.classify_cocycle(table)
        assert 0 <= point < regular_X_3.order

    def test_involutive(self, regular_class_3, regular_X_3, duality_3):
        """Dualizing twice returns to the orbit of the input."""
        assert duality_is_involutive(regular_class_3, duality_3, regular_X_3)

    def test_trivial_class_rejected(self, trivial_class_3):
        """Only the regular action is covered."""
        with pytest.raises(PreconditionError, match="regular action"):
            dual_cocycle_p3(trivial_class_3)

    def test_p2_rejected(self, swap_class_2):
        """p = 2 is outside the recipe."""
        with pytest.raises(PreconditionError):
            dual_cocycle_p3(swap_class_2)


class TestScaledPoint:
    """Tests for scaled_point()."""

    def test_small_factors(self, regular_X_3):
        """0·x = 0, 1·x = x, 2·x = x + x."""
        x = regular_X_3.classify_cocycle(e_wedge_f(regular_X_3))
        assert scaled_point(regular_X_3, x, 0) == 0
        assert scaled_point(regular_X_3, x, 1) == x
        assert scaled_point(regular_X_3, x, 2) == regular_X_3.add(x, x)
