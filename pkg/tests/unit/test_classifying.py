"""Tests for hopfext.classifying - the classifying group X(⊳)."""

import numpy as np
import pytest

from hopfext.actions import catalog_actions
from hopfext.algebra.groups import parse_group
from hopfext.classifying import (
    build_X,
    coboundary,
    cocycle_modulus,
    p2_carrier,
)
from hopfext.constants import ActionFamily, CarrierKind
from hopfext.models.schemas import UnsupportedInputError
from hopfext.oracle import cocycle_identity_ok, oracle_report


class TestModulus:
    """Tests for cocycle_modulus()."""

    @pytest.mark.parametrize(
        "descriptor,p,expected",
        [("Z3xZ3", 3, 9), ("Z9xZ3", 3, 27), ("Z2xZ2", 2, 4), ("Z15xZ15", 2, 30)],
    )
    def test_modulus(self, descriptor, p, expected):
        """M = p·exp(G)."""
        assert cocycle_modulus(parse_group(descriptor), p) == expected


class TestCoboundary:
    """Tests for coboundaries of potentials."""

    def test_coboundary_is_cocycle(self, z9xz3):
        """δf satisfies the 2-cocycle identity and is symmetric."""
        rng = np.random.default_rng(0)
        f = rng.integers(0, 27, size=z9xz3.order)
        f[0] = 0
        table = coboundary(f, z9xz3, 27)
        assert cocycle_identity_ok(table, z9xz3, 27)
        assert np.array_equal(table, table.T)


class TestCarrier:
    """Tests for the carrier chosen by build_X()."""

    def test_odd_order_direct_product(self, regular_X_3):
        """|G| odd uses the direct-product model."""
        assert regular_X_3.carrier is CarrierKind.DIRECT_PRODUCT

    def test_p2_trivial(self, z2xz2_classes):
        """Trivial C_2-action on Z_2 x Z_2 uses the transversal model."""
        X = build_X(z2xz2_classes[0])
        assert X.carrier is CarrierKind.P2_TRIVIAL
        assert X.transversal is not None

    def test_p2_elementary(self, swap_X_2):
        """The swap on Z_2 x Z_2 uses the elementary 2-group model."""
        assert swap_X_2.carrier is CarrierKind.P2_ELEMENTARY

    def test_cyclic_characters_only(self):
        """Cyclic groups have no alternating forms."""
        classes = catalog_actions(parse_group("Z9"), 3)
        X = build_X(classes[1])
        assert X.carrier is CarrierKind.CHARACTERS_ONLY
        assert X.alt_size == 1

    @pytest.mark.parametrize("descriptor", ["Z3", "Z27"])
    def test_odd_cyclic_is_characters_only(self, descriptor):
        """Odd order with Alt_N = 0 still uses the characters-only model."""
        for action_class in catalog_actions(parse_group(descriptor), 3):
            X = build_X(action_class)
            assert X.carrier is CarrierKind.CHARACTERS_ONLY
            assert X.order == X.quotient.order

    def test_trivial_c2_on_odd_group(self):
        """For p = 2 the trivial norm 2β vanishes only at β = 0 on Alt(Z_3 x Z_3)."""
        trivial = catalog_actions(parse_group("Z3xZ3"), 2, include_nontrivial=False)[0]
        assert build_X(trivial).carrier is CarrierKind.CHARACTERS_ONLY

    def test_p2_carrier_needs_elementary_two_group(self, regular_class_3):
        """p2_carrier rejects odd p."""
        with pytest.raises(UnsupportedInputError, match="p = 2"):
            p2_carrier(regular_class_3)


class TestPoints:
    """Tests for points of X and their cocycles."""

    def test_zero_point(self, regular_X_3):
        """Point 0 is the zero class: trivial characters, no alternating part."""
        element = regular_X_3.element(0)
        assert element.is_cocommutative
        assert not any(element.char_coords)
        assert not regular_X_3.representative_cocycle(0).any()

    def test_order_splits(self, regular_X_3):
        """|X| = |Q|·|Alt part|."""
        assert regular_X_3.order == regular_X_3.quotient.order * regular_X_3.alt_size

    def test_representative_cocycles_are_killed_by_norm(self, regular_X_3):
        """Every representative τ(t) lies in Z²_N."""
        from hopfext.classifying import pullback_table

        act = regular_X_3.act
        M = regular_X_3.modulus
        for index in range(regular_X_3.order):
            table = regular_X_3.representative_cocycle(index)
            assert cocycle_identity_ok(table, act.group, M)
            assert not pullback_table(table, act.permutations, M).any()

    def test_classify_cocycle_recovers_point(self, regular_X_3):
        """The representative of each point classifies back to that point."""
        for index in range(regular_X_3.order):
            table = regular_X_3.representative_cocycle(index)
            assert regular_X_3.classify_cocycle(table) == index

    def test_classify_ignores_norm_free_coboundaries(self, regular_X_3):
        """Adding δ(g - g∘t), which Φ sends to 0, does not change the class."""
        group = regular_X_3.group
        M = regular_X_3.modulus
        rng = np.random.default_rng(1)
        g = rng.integers(0, M, size=group.order)
        g[0] = 0
        f = (g - g[regular_X_3.act.permutations[1]]) % M
        for index in range(regular_X_3.order):
            bumped = (regular_X_3.representative_cocycle(index) + coboundary(f, group, M)) % M
            assert regular_X_3.classify_cocycle(bumped) == index


class TestOracleAgreement:
    """|X| agrees with the lattice computation of |H²_c|."""

    def test_regular(self, regular_class_3, regular_X_3):
        """Z3 x Z3, regular action."""
        report = oracle_report(regular_class_3)
        assert report.x_order == regular_X_3.order
        assert report.matches

    def test_swap(self, swap_class_2):
        """Z2 x Z2, swap action."""
        assert oracle_report(swap_class_2).matches

    @pytest.mark.parametrize("descriptor,p", [("Z3", 3), ("Z4", 2), ("Z9", 3), ("Z2^3", 2)])
    def test_small_groups(self, descriptor, p):
        """Every cataloged class on small groups."""
        for action_class in catalog_actions(parse_group(descriptor), p):
            report = oracle_report(action_class)
            assert report.matches, f"{action_class.label}: {report}"

    def test_trivial_family_tag(self, trivial_class_3):
        """Reports carry the family tag."""
        assert oracle_report(trivial_class_3).family == ActionFamily.TRIVIAL.value
