"""Tests for hopfext.hopf.builder - structure constants of H(τ, ⊳)."""

import numpy as np
import pytest

from hopfext.hopf.builder import (
    antipode_squared_is_identity,
    build,
    build_from_cocycle,
    group_algebra,
    grouplike_count,
)
from hopfext.models.schemas import PreconditionError
from hopfext.orbits import orbits


def _noncocommutative_point(X) -> int:
    return next(r.representative for r in orbits(X).orbits if not r.cocommutative)


class TestBuild:
    """Tests for build() and build_from_cocycle()."""

    def test_dimension_and_labels(self, regular_class_3, regular_X_3):
        """dim H = |G|·p; labels name class and point."""
        H = build(regular_class_3, 1, regular_X_3)
        assert H.dimension == 27
        assert H.label == "R2#1"
        assert H.modulus == 9

    def test_point_out_of_range(self, regular_class_3, regular_X_3):
        """Points outside X are rejected."""
        with pytest.raises(PreconditionError, match="outside X"):
            build(regular_class_3, regular_X_3.order, regular_X_3)

    def test_multiplication_rule(self, regular_class_3, regular_X_3):
        """(p_a t^i)(p_b t^j) = [b = t^i(a)] p_a t^{i+j}."""
        H = build(regular_class_3, 1, regular_X_3)
        perms = H.act.permutations
        a, i = 4, 1
        x = H.basis_index(a, i)
        for b in range(9):
            y = H.basis_index(b, 2)
            expected = H.basis_index(a, 0) if b == perms[i][a] else -1
            assert H.mult[x, y] == expected

    def test_counit(self, regular_class_3, regular_X_3):
        """ε(p_a t^i) = [a = 0]."""
        H = build(regular_class_3, 1, regular_X_3)
        assert H.counit.sum() == H.p
        assert all(H.counit[H.basis_index(0, i)] == 1 for i in range(H.p))

    def test_cocycle_tables_read_back(self, regular_class_3, regular_X_3):
        """The comult table stores τ(t) at i = 1."""
        point = _noncocommutative_point(regular_X_3)
        H = build(regular_class_3, point, regular_X_3)
        tau = regular_X_3.representative_cocycle(point)
        assert np.array_equal(H.cocycle_tables()[1], tau % H.modulus)

    def test_unkilled_cocycle_rejected(self, trivial_class_3):
        """build_from_cocycle validates φ_p·τ(t) = 0."""
        with pytest.raises(PreconditionError):
            build_from_cocycle(trivial_class_3.representative, np.ones((9, 9), dtype=np.int64))


class TestElements:
    """Tests for element arithmetic inside H."""

    def test_unit_is_identity(self, regular_class_3, regular_X_3):
        """1·t = t·1 = t."""
        H = build(regular_class_3, 1, regular_X_3)
        t = H.t_element()
        assert H.multiply(H.one(), t) == t
        assert H.multiply(t, H.one()) == t

    def test_t_has_order_p(self, regular_class_3, regular_X_3):
        """t^p = 1."""
        H = build(regular_class_3, _noncocommutative_point(regular_X_3), regular_X_3)
        assert H.power(H.t_element(), 3) == H.one()

    def test_characters_multiply(self, regular_class_3, regular_X_3):
        """χ·ψ is the character χ + ψ."""
        H = build(regular_class_3, 1, regular_X_3)
        product = H.multiply(H.character([1, 0]), H.character([0, 2]))
        assert product == H.character([1, 2])


class TestInvariants:
    """Tests for grouplikes and S²."""

    def test_group_algebra_grouplikes(self, regular_class_3):
        """Every f·t^i is grouplike in the group algebra."""
        H = group_algebra(regular_class_3.representative)
        assert not H.twist.any()
        assert grouplike_count(H) == 27

    def test_noncocommutative_grouplikes(self, regular_class_3, regular_X_3):
        """With an alternating part only Ĝ stays grouplike."""
        H = build(regular_class_3, _noncocommutative_point(regular_X_3), regular_X_3)
        assert grouplike_count(H) == 9

    def test_antipode_squared(self, regular_class_3, regular_X_3):
        """S² = id on every orbit representative."""
        for record in orbits(regular_X_3).orbits:
            H = build(regular_class_3, record.representative, regular_X_3)
            assert antipode_squared_is_identity(H)

    def test_copy_is_independent(self, regular_class_3, regular_X_3):
        """copy() does not share tables."""
        H = build(regular_class_3, 1, regular_X_3)
        clone = H.copy()
        clone.comult_exp[0, 0] += 1
        assert clone.comult_exp[0, 0] != H.comult_exp[0, 0]
