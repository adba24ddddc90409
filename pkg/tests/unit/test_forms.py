"""Tests for hopfext.algebra.forms - alternating bimultiplicative forms."""

import numpy as np

from hopfext.algebra.forms import AltSpace, alternating_coords, antisymmetrize
from hopfext.algebra.groups import Endomorphism, parse_group


class TestAltSpace:
    """Tests for AltSpace coordinates."""

    def test_elementary_rank_three(self):
        """Alt(Z3^3) has three coordinates mod 3."""
        space = AltSpace(parse_group("Z3^3"))
        assert space.pairs == ((0, 1), (0, 2), (1, 2))
        assert space.moduli.tolist() == [3, 3, 3]
        assert space.order == 27

    def test_mixed_orders(self):
        """Alt(Z9 x Z3) ≅ Z/gcd(9, 3)."""
        space = AltSpace(parse_group("Z9xZ3"))
        assert space.moduli.tolist() == [3]
        assert space.coordinates.shape == (3, 1)

    def test_cyclic_has_no_forms(self):
        """Alt of a cyclic group is trivial."""
        space = AltSpace(parse_group("Z9"))
        assert space.dimension == 0
        assert space.order == 1

    def test_codes_index_coordinates(self):
        """codes() is the row index into coordinates."""
        space = AltSpace(parse_group("Z3^3"))
        assert space.codes(space.coordinates).tolist() == list(range(27))


class TestTables:
    """Tests for form tables and their alternating parts."""

    def test_table_is_alternating(self):
        """β(x, x) = 0 and β(x, y) = -β(y, x)."""
        group = parse_group("Z9xZ3")
        space = AltSpace(group)
        table = space.table([1], 27)
        assert not (np.diag(table) % 27).any()
        assert not ((table + table.T) % 27).any()

    def test_half_table_antisymmetrizes_to_form(self):
        """a(s_b) = β: coordinates are recovered from the half table."""
        group = parse_group("Z3^3")
        space = AltSpace(group)
        coords = np.array([1, 2, 1])
        alt = antisymmetrize(space.half_table(coords, 9), 9)
        assert alternating_coords(alt, group, 9).tolist() == coords.tolist()

    def test_transform_matrix_matches_pullback(self):
        """W·coords(β) == coords(β∘(L×L))."""
        group = parse_group("Z3^3")
        space = AltSpace(group)
        L = Endomorphism.from_array(group, [[1, 0, 0], [1, 1, 0], [0, 1, 1]])
        W = space.transform_matrix(L)
        for coords in space.coordinates[:10]:
            expected = space.pullback(coords, L)
            assert space.apply(W, coords[None, :])[0].tolist() == expected.tolist()
