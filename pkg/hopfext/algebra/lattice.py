"""Kernels of integer matrices over residue rings.

kernel_mod solves A·x ≡ 0 with a modulus per row. The modulus is split into
prime powers (CRT); over each local ring Z/q^k a Smith form is computed with
pivots of minimal q-valuation, which reads the kernel off the diagonal. The
local generators are lifted back to Z/L through CRT idempotents.
"""

from __future__ import annotations

import itertools
import logging
import math
from dataclasses import dataclass

import numpy as np
from sympy import factorint

from hopfext.models.schemas import BudgetExceededError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class KernelLattice:
    """Subgroup of (Z/L)^n given as a direct sum of cyclic generators."""

    modulus: int
    generators: np.ndarray  # (k, n)
    orders: tuple[int, ...]

    @property
    def order(self) -> int:
        return math.prod(self.orders)

    @property
    def ncols(self) -> int:
        return self.generators.shape[1]

    def elements(self, budget: int = 1_000_000) -> np.ndarray:
        """Enumerate every element; rows are distinct."""
        if self.order > budget:
            raise BudgetExceededError("kernel enumeration", self.order, budget)
        elems = np.zeros((1, self.ncols), dtype=np.int64)
        for gen, order in zip(self.generators, self.orders, strict=True):
            multiples = (np.arange(order, dtype=np.int64)[:, None] * gen[None, :]) % self.modulus
            elems = ((elems[:, None, :] + multiples[None, :, :]) % self.modulus).reshape(
                -1, self.ncols
            )
        return elems


def _local_kernel(matrix: np.ndarray, q: int, k: int) -> tuple[list[np.ndarray], list[int]]:
    """Kernel of matrix over Z/q^k as generators with orders."""
    Q = q**k
    work = np.array(matrix, dtype=np.int64) % Q
    nrows, ncols = work.shape
    V = np.eye(ncols, dtype=np.int64)
    valuations: list[int] = []

    s = 0
    while s < min(nrows, ncols):
        sub = work[s:, s:]
        if not sub.any():
            break
        v = 0
        while True:
            mask = (sub % q ** (v + 1)) != 0
            if mask.any():
                break
            v += 1
        rr, cc = (int(x) for x in np.argwhere(mask)[0])
        if rr:
            work[[s, s + rr]] = work[[s + rr, s]]
        if cc:
            work[:, [s, s + cc]] = work[:, [s + cc, s]]
            V[:, [s, s + cc]] = V[:, [s + cc, s]]

        qv = q**v
        unit = int(work[s, s]) // qv
        work[s] = (work[s] * pow(unit % Q, -1, Q)) % Q

        below = np.nonzero(work[s + 1 :, s])[0] + s + 1
        if below.size:
            factors = work[below, s] // qv
            work[below] = (work[below] - np.outer(factors, work[s])) % Q

        right = work[s, s + 1 :] // qv
        if right.any():
            V[:, s + 1 :] = (V[:, s + 1 :] - np.outer(V[:, s], right)) % Q
            work[s, s + 1 :] = 0

        valuations.append(v)
        s += 1

    generators: list[np.ndarray] = []
    orders: list[int] = []
    for col, v in enumerate(valuations):
        if v > 0:
            generators.append((V[:, col] * q ** (k - v)) % Q)
            orders.append(q**v)
    for col in range(len(valuations), ncols):
        generators.append(V[:, col] % Q)
        orders.append(Q)
    return generators, orders


def kernel_mod(
    matrix,
    row_moduli,
    modulus: int | None = None,
) -> KernelLattice:
    """Solution lattice of A·x ≡ 0 (mod m_i on row i), x ∈ (Z/L)^n.

    Args:
        matrix: Integer matrix of shape (rows, n)
        row_moduli: One modulus per row, or a single modulus for all rows
        modulus: Domain modulus L; defaults to lcm of the row moduli.
            Every row modulus must divide it.

    Returns:
        KernelLattice with independent cyclic generators
    """
    A = np.atleast_2d(np.array(matrix, dtype=np.int64))
    nrows, ncols = A.shape
    if np.isscalar(row_moduli) or np.ndim(row_moduli) == 0:
        moduli = np.full(nrows, int(row_moduli), dtype=np.int64)
    else:
        moduli = np.array(row_moduli, dtype=np.int64)
    if moduli.size != nrows:
        raise ValueError(f"Expected {nrows} row moduli, got {moduli.size}")

    L = math.lcm(*(int(m) for m in moduli)) if nrows else 1
    if modulus is not None:
        if modulus % L:
            raise ValueError(f"Row moduli must divide the domain modulus {modulus}")
        L = modulus

    if ncols == 0:
        return KernelLattice(L, np.zeros((0, 0), dtype=np.int64), ())

    # A·x ≡ 0 mod m_i  <=>  (L/m_i)·A·x ≡ 0 mod L
    scaled = (A % moduli[:, None]) * (L // moduli)[:, None] if nrows else A

    logger.debug(f"kernel_mod: {nrows}x{ncols} over Z/{L}")

    generators: list[np.ndarray] = []
    orders: list[int] = []
    for q, k in sorted(factorint(L).items()):
        Q = q**k
        cofactor = L // Q
        lift = cofactor * pow(cofactor % Q, -1, Q) if cofactor > 1 else 1
        local = scaled % Q if nrows else np.zeros((0, ncols), dtype=np.int64)
        if local.shape[0] == 0:
            local_gens = [np.eye(ncols, dtype=np.int64)[c] for c in range(ncols)]
            local_orders = [Q] * ncols
        else:
            local_gens, local_orders = _local_kernel(local, q, k)
        for gen, order in zip(local_gens, local_orders, strict=True):
            generators.append((gen * lift) % L)
            orders.append(order)

    gens = np.array(generators, dtype=np.int64).reshape(len(generators), ncols)
    return KernelLattice(L, gens, tuple(orders))


def element_order(vector: np.ndarray, moduli: np.ndarray) -> int:
    """Additive order of a vector in ∏ Z/moduli."""
    order = 1
    for x, m in zip(np.asarray(vector).tolist(), np.asarray(moduli).tolist(), strict=True):
        order = math.lcm(order, m // math.gcd(int(x) % m, m))
    return order


def additive_closure(generators, moduli, budget: int = 2_000_000) -> np.ndarray:
    """Subgroup of ∏ Z/moduli generated by `generators`, as sorted unique rows."""
    moduli = np.asarray(moduli, dtype=np.int64)
    n = moduli.size
    elems = np.zeros((1, n), dtype=np.int64)
    for gen in generators:
        gen = np.asarray(gen, dtype=np.int64) % moduli
        order = element_order(gen, moduli)
        if order == 1:
            continue
        if elems.shape[0] * order > budget:
            raise BudgetExceededError("subgroup closure", elems.shape[0] * order, budget)
        multiples = (np.arange(order, dtype=np.int64)[:, None] * gen[None, :]) % moduli
        elems = ((elems[:, None, :] + multiples[None, :, :]) % moduli).reshape(-1, n)
        elems = np.unique(elems, axis=0)
    return elems


def brute_force_kernel(matrix, row_moduli, modulus: int) -> np.ndarray:
    """Every x ∈ (Z/modulus)^n with A·x ≡ 0; for cross-checking small cases."""
    A = np.atleast_2d(np.array(matrix, dtype=np.int64))
    moduli = np.broadcast_to(np.asarray(row_moduli, dtype=np.int64), (A.shape[0],))
    candidates = np.array(
        list(itertools.product(range(modulus), repeat=A.shape[1])), dtype=np.int64
    ).reshape(-1, A.shape[1])
    residues = (candidates @ A.T) % moduli
    return candidates[~residues.any(axis=1)]


__all__ = [
    "KernelLattice",
    "kernel_mod",
    "additive_closure",
    "element_order",
    "brute_force_kernel",
]
