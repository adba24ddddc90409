"""Bimultiplicative forms on G with values in μ_E, E = exp(G).

An alternating form β is determined by b_ij = β(g_i, g_j) for i < j, with
b_ij ∈ Z/gcd(d_i, d_j); its exponent matrix over Z/E has
B[i][j] = b_ij·E/gcd(d_i, d_j) and B[j][i] = -B[i][j]. The upper-triangular
half of the same data, s_b(x, y) = Σ_{i<j} x_i y_j B[i][j], is a
bimultiplicative cocycle with a(s_b) = β.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from hopfext.algebra.groups import AbelianGroup, Endomorphism


@dataclass(frozen=True)
class AltSpace:
    """Coordinates and actions on Alt(G)."""

    group: AbelianGroup

    @cached_property
    def pairs(self) -> tuple[tuple[int, int], ...]:
        return tuple(itertools.combinations(range(self.group.rank), 2))

    @cached_property
    def moduli(self) -> np.ndarray:
        return np.array(
            [self.group.gcd_orders(i, j) for i, j in self.pairs], dtype=np.int64
        ).reshape(len(self.pairs))

    @property
    def dimension(self) -> int:
        return len(self.pairs)

    @property
    def order(self) -> int:
        return int(math.prod(self.moduli.tolist()))

    @cached_property
    def coordinates(self) -> np.ndarray:
        """All of Alt(G) as an (|Alt|, K) array in lexicographic order."""
        ranges = [range(int(m)) for m in self.moduli]
        flat = np.array(list(itertools.product(*ranges)), dtype=np.int64)
        return flat.reshape(self.order, self.dimension)

    @cached_property
    def strides(self) -> np.ndarray:
        mods = self.moduli.tolist()
        return np.array(
            [math.prod(mods[k + 1 :]) for k in range(len(mods))], dtype=np.int64
        ).reshape(len(mods))

    def codes(self, coords: np.ndarray) -> np.ndarray:
        """Mixed-radix code of each coordinate row (index into `coordinates`)."""
        coords = np.asarray(coords, dtype=np.int64)
        if self.dimension == 0:
            return np.zeros(coords.shape[0], dtype=np.int64)
        return (coords % self.moduli) @ self.strides

    def exponent_matrix(self, coords) -> np.ndarray:
        """Antisymmetric B over Z/E."""
        E = self.group.exponent
        n = self.group.rank
        B = np.zeros((n, n), dtype=np.int64)
        for (i, j), b, g in zip(self.pairs, np.asarray(coords).tolist(), self.moduli.tolist(), strict=True):
            B[i][j] = (b * (E // g)) % E
            B[j][i] = (-B[i][j]) % E
        return B

    def coords_of(self, B: np.ndarray) -> np.ndarray:
        """Coordinates of an antisymmetric exponent matrix."""
        E = self.group.exponent
        return np.array(
            [(int(B[i][j]) % E) // (E // g) for (i, j), g in zip(self.pairs, self.moduli.tolist(), strict=True)],
            dtype=np.int64,
        ).reshape(self.dimension)

    def pullback(self, coords, endo: Endomorphism) -> np.ndarray:
        """Coordinates of β∘(L×L)."""
        E = self.group.exponent
        B = self.exponent_matrix(coords)
        L = endo.array
        return self.coords_of((L.T @ B @ L) % E)

    def transform_matrix(self, endo: Endomorphism) -> np.ndarray:
        """W with coords(β∘(L×L)) = W·coords(β) (row k reduced mod moduli[k])."""
        K = self.dimension
        W = np.zeros((K, K), dtype=np.int64)
        for col in range(K):
            unit = np.zeros(K, dtype=np.int64)
            unit[col] = 1
            W[:, col] = self.pullback(unit, endo)
        return W

    def apply(self, W: np.ndarray, coords: np.ndarray) -> np.ndarray:
        """Apply a transform matrix to an (N, K) array of coordinates."""
        if self.dimension == 0:
            return np.asarray(coords, dtype=np.int64)
        return (np.asarray(coords, dtype=np.int64) @ W.T) % self.moduli

    def table(self, coords, modulus: int) -> np.ndarray:
        """Values β(x, y) as exponents mod `modulus`, indexed by element indices."""
        E = self.group.exponent
        X = self.group.elements
        B = self.exponent_matrix(coords)
        return ((X @ B @ X.T) % E) * (modulus // E)

    def half_table(self, coords, modulus: int) -> np.ndarray:
        """s(x, y) = Σ_{i<j} x_i y_j B[i][j] as exponents mod `modulus`."""
        E = self.group.exponent
        X = self.group.elements
        upper = np.triu(self.exponent_matrix(coords), k=1)
        return ((X @ upper @ X.T) % E) * (modulus // E)


def antisymmetrize(values: np.ndarray, modulus: int) -> np.ndarray:
    """a(s)(x, y) = s(x, y) - s(y, x) on a cocycle table."""
    return (values - values.T) % modulus


def alternating_coords(values: np.ndarray, group: AbelianGroup, modulus: int) -> np.ndarray:
    """Read an alternating bimultiplicative table back into Alt coordinates."""
    space = AltSpace(group)
    basis = group.basis_indices()
    scale = modulus // group.exponent
    B = np.zeros((group.rank, group.rank), dtype=np.int64)
    for i, j in space.pairs:
        value = int(values[basis[i], basis[j]]) % modulus
        if value % scale:
            raise ValueError("Table is not valued in μ_E")
        B[i][j] = value // scale
        B[j][i] = -B[i][j]
    return space.coords_of(B % group.exponent)


__all__ = ["AltSpace", "antisymmetrize", "alternating_coords"]
