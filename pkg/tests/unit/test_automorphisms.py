"""Tests for hopfext.algebra.automorphisms."""

import pytest

from hopfext import config
from hopfext.algebra.automorphisms import (
    aut_generators,
    automorphism_count,
    brute_force_automorphisms,
    closure,
    enumerate_automorphisms,
    gamma_family,
    general_linear,
    is_gamma_group,
)
from hopfext.algebra.groups import parse_group
from hopfext.models.schemas import BudgetExceededError


class TestAutomorphismCount:
    """Tests for the closed-form |Aut(G)|."""

    @pytest.mark.parametrize(
        "descriptor,expected",
        [
            ("Z3xZ3", 48),
            ("Z9xZ3", 108),
            ("Z4xZ2", 8),
            ("Z2^3", 168),
            ("Z9", 6),
            ("Z15xZ15", 48 * 480),
        ],
    )
    def test_closed_form(self, descriptor, expected):
        """Known orders of automorphism groups."""
        assert automorphism_count(parse_group(descriptor)) == expected


class TestEnumeration:
    """Tests for the enumeration routes."""

    def test_general_linear(self):
        """GL_2(F_3) has 48 elements."""
        assert len(general_linear(parse_group("Z3xZ3"))) == 48

    def test_gamma_family(self):
        """Aut(Z9 x Z3) via the gamma parametrization."""
        group = parse_group("Z9xZ3")
        assert is_gamma_group(group)
        autos = gamma_family(group)
        assert len(autos) == 108
        assert all(a.is_automorphism() for a in autos)

    def test_brute_force_agrees(self):
        """Exhaustive search on Z4 x Z2 matches the dispatcher."""
        group = parse_group("Z4xZ2")
        assert enumerate_automorphisms(group) == brute_force_automorphisms(group)

    def test_generators_close_to_full_group(self):
        """Transvections and unit scalings generate Aut(G)."""
        group = parse_group("Z4xZ2")
        assert len(closure(aut_generators(group))) == automorphism_count(group)

    def test_sorted_lexicographically(self):
        """Enumeration order is lexicographic in the matrix entries."""
        autos = enumerate_automorphisms(parse_group("Z3xZ3"))
        keys = [a.key for a in autos]
        assert keys == sorted(keys)

    def test_budget(self, monkeypatch):
        """Enumeration fails fast above MAX_AUTOMORPHISMS."""
        monkeypatch.setattr(config, "MAX_AUTOMORPHISMS", 10)
        with pytest.raises(BudgetExceededError, match="automorphism enumeration"):
            enumerate_automorphisms(parse_group("Z3xZ3"))

    def test_not_gamma(self):
        """Z3 x Z3 is not of the form Z_{p^e} x Z_p with e > 1."""
        assert not is_gamma_group(parse_group("Z3xZ3"))
