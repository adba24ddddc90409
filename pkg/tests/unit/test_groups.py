"""Tests for hopfext.algebra.groups - descriptors, indexing, endomorphisms."""

import numpy as np
import pytest

from hopfext.algebra.groups import (
    AbelianGroup,
    Character,
    Endomorphism,
    GroupElement,
    abelian_groups,
    determinant_mod_prime,
    pair,
    parse_group,
)
from hopfext.models.schemas import GroupDescriptorError, InvalidHomomorphismError


class TestParseGroup:
    """Tests for parse_group()."""

    def test_product_descriptor(self):
        """Factors are kept as given when already prime powers."""
        group = parse_group("Z9xZ3")
        assert group.cyclic_orders == (9, 3)
        assert group.order == 27
        assert group.exponent == 9

    def test_power_descriptor(self):
        """Z3^2 is Z3 x Z3."""
        assert parse_group("Z3^2") == parse_group("Z3xZ3")

    def test_composite_orders_split(self):
        """Z15 splits into its primary parts, ordered by prime."""
        group = parse_group("Z15xZ15")
        assert group.cyclic_orders == (3, 3, 5, 5)
        assert group.primes == (3, 5)
        assert group.smallest_prime == 3

    def test_factor_order_normalized(self):
        """Within a prime, larger cyclic orders come first."""
        assert parse_group("Z3xZ9").cyclic_orders == (9, 3)

    def test_descriptor_round_trip(self):
        """descriptor re-parses to the same group."""
        group = parse_group("Z4xZ2")
        assert parse_group(group.descriptor) == group

    @pytest.mark.parametrize("bad", ["", "Q8", "Z", "Z3xx", "Z0"])
    def test_malformed_descriptor(self, bad):
        """Malformed descriptors raise GroupDescriptorError."""
        with pytest.raises(GroupDescriptorError):
            parse_group(bad)

    def test_non_prime_power_factor_rejected(self):
        """AbelianGroup itself only accepts prime-power orders."""
        with pytest.raises(GroupDescriptorError, match="not a prime power"):
            AbelianGroup((6,))


class TestAbelianGroups:
    """Tests for abelian_groups()."""

    @pytest.mark.parametrize("order,count", [(2, 1), (12, 2), (16, 5), (27, 3), (36, 4), (64, 11)])
    def test_counts(self, order, count):
        """One group per partition of each prime exponent."""
        groups = abelian_groups(order)
        assert len(groups) == count
        assert len(set(groups)) == count
        assert all(g.order == order for g in groups)

    def test_order_sixteen(self):
        """Z16, Z8xZ2, Z4xZ4, Z4xZ2xZ2 and Z2^4."""
        expected = {parse_group(d) for d in ["Z16", "Z8xZ2", "Z4xZ4", "Z4xZ2xZ2", "Z2^4"]}
        assert set(abelian_groups(16)) == expected

    def test_order_below_two(self):
        """The trivial group is not enumerated."""
        with pytest.raises(GroupDescriptorError):
            abelian_groups(1)


class TestIndexing:
    """Tests for mixed-radix element indexing."""

    def test_index_and_element_agree(self, z9xz3):
        """element(index(x)) == x for every element."""
        for idx in range(z9xz3.order):
            assert z9xz3.index(z9xz3.element(idx)) == idx

    def test_index_reduces_coordinates(self, z3xz3):
        """Coordinates are read modulo the cyclic orders."""
        assert z3xz3.index((4, -1)) == z3xz3.index((1, 2))

    def test_addition_table(self, z3xz3):
        """addition_table[a, b] is the index of a + b."""
        a = z3xz3.index((1, 2))
        b = z3xz3.index((2, 2))
        assert z3xz3.addition_table[a, b] == z3xz3.index((0, 1))

    def test_negation(self, z9xz3):
        """a + (-a) = 0."""
        add = z9xz3.addition_table
        assert (add[np.arange(z9xz3.order), z9xz3.negation] == 0).all()

    def test_basis_indices(self, z3xz3):
        """Generators sit at the unit coordinate vectors."""
        assert [z3xz3.element(i) for i in z3xz3.basis_indices()] == [(1, 0), (0, 1)]


class TestCharacters:
    """Tests for characters, elements and the pairing."""

    def test_pairing_exponent(self, z9xz3):
        """χ(g) = Σ χ_i g_i (m / d_i) mod m."""
        chi = Character(z9xz3, (1, 1))
        g = GroupElement(z9xz3, (2, 1))
        value = pair(chi, g, modulus=27)
        assert value.exponent == (1 * 2 * 3 + 1 * 1 * 9) % 27

    def test_pairing_default_modulus(self, z3xz3):
        """Default modulus is p·exp(G)."""
        value = pair(Character(z3xz3, (1, 0)), GroupElement(z3xz3, (1, 0)))
        assert value.modulus == 9
        assert value.exponent == 3

    def test_pairing_rejects_bad_modulus(self, z9xz3):
        """The modulus must be a multiple of exp(G)."""
        with pytest.raises(ValueError, match="not a multiple"):
            pair(Character(z9xz3, (1, 0)), GroupElement(z9xz3, (1, 0)), modulus=6)

    def test_character_values_match_pair(self, z9xz3):
        """Vectorized character values agree with pair()."""
        chars = np.array([[2, 1]])
        values = z9xz3.character_values(chars, 27)[0]
        for idx in range(z9xz3.order):
            g = GroupElement(z9xz3, z9xz3.element(idx))
            assert values[idx] == pair(Character(z9xz3, (2, 1)), g, 27).exponent


class TestEndomorphism:
    """Tests for column-convention endomorphisms."""

    def test_congruence_constraint(self, z9xz3):
        """An entry from Z3 into Z9 must be divisible by 3."""
        with pytest.raises(InvalidHomomorphismError, match="divisible by 3"):
            Endomorphism(z9xz3, ((1, 1), (0, 1)))
        Endomorphism(z9xz3, ((1, 3), (0, 1)))

    def test_shape_constraint(self, z3xz3):
        """Matrix must be rank x rank."""
        with pytest.raises(InvalidHomomorphismError, match="2x2"):
            Endomorphism(z3xz3, ((1,),))

    def test_apply_column_convention(self, z3xz3):
        """Column j is the image of g_j."""
        endo = Endomorphism(z3xz3, ((1, 0), (1, 1)))
        assert endo.apply((1, 0)) == (1, 1)
        assert endo.apply((0, 1)) == (0, 1)

    def test_permutation_matches_apply(self, z9xz3):
        """permutation[index(x)] == index(φ(x))."""
        endo = Endomorphism(z9xz3, ((2, 3), (1, 1)))
        for idx in range(z9xz3.order):
            assert endo.permutation[idx] == z9xz3.index(endo.apply(z9xz3.element(idx)))

    def test_order_and_inverse(self, z3xz3):
        """A transvection on Z3 x Z3 has order 3."""
        endo = Endomorphism(z3xz3, ((1, 0), (1, 1)))
        assert endo.order() == 3
        assert endo.compose(endo.inverse()).is_identity()
        assert endo.power(-1) == endo.inverse()

    def test_non_invertible(self, z3xz3):
        """Singular maps have no inverse or order."""
        endo = Endomorphism(z3xz3, ((1, 1), (1, 1)))
        assert not endo.is_automorphism()
        with pytest.raises(InvalidHomomorphismError):
            endo.inverse()

    def test_dual_transposes_pairing(self, z9xz3):
        """χ(φ(g)) == (Dχ)(g) for the dual matrix D."""
        endo = Endomorphism(z9xz3, ((2, 3), (1, 1)))
        D = endo.dual()
        for chi_coords in [(1, 0), (0, 1), (4, 2)]:
            chi = Character(z9xz3, chi_coords)
            moved = Character(z9xz3, D.apply(chi_coords))
            for idx in range(z9xz3.order):
                g = z9xz3.element(idx)
                left = pair(chi, GroupElement(z9xz3, endo.apply(g)), 27)
                right = pair(moved, GroupElement(z9xz3, g), 27)
                assert left == right


class TestDeterminant:
    """Tests for determinant_mod_prime()."""

    def test_determinant(self):
        """det [[1,2],[3,4]] = -2 ≡ 1 mod 3."""
        assert determinant_mod_prime(np.array([[1, 2], [3, 4]]), 3) == 1

    def test_singular(self):
        """Singular matrices have determinant 0."""
        assert determinant_mod_prime(np.array([[1, 2], [2, 4]]), 5) == 0
