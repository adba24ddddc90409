"""Finite abelian groups in primary decomposition.

Elements and characters are residue vectors; every scalar is an additive
exponent modulo a fixed modulus, so no floating-point roots of unity ever
appear. Elements are indexed by a mixed-radix bijection with the first
coordinate most significant, which makes index order equal to lexicographic
order of coordinate vectors.
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass
from functools import cached_property

import numpy as np
from sympy import factorint
from sympy.utilities.iterables import partitions

from hopfext.models.schemas import GroupDescriptorError, InvalidHomomorphismError

_FACTOR_RE = re.compile(r"^Z(\d+)(?:\^(\d+))?$", re.IGNORECASE)
_SEPARATOR_RE = re.compile(r"\s*[x×*]\s*")


def _prime_of(order: int) -> int:
    factors = factorint(order)
    if len(factors) != 1:
        raise GroupDescriptorError(f"Cyclic order {order} is not a prime power")
    return next(iter(factors))


@dataclass(frozen=True)
class AbelianGroup:
    """Finite abelian group ⊕ Z/d_i with prime-power orders d_i.

    Generators are grouped by prime (ascending) and, within a prime, by
    descending order. The trivial group has no cyclic factors.
    """

    cyclic_orders: tuple[int, ...]

    def __post_init__(self) -> None:
        for d in self.cyclic_orders:
            if d < 2:
                raise GroupDescriptorError(f"Cyclic order must exceed 1, got {d}")
            _prime_of(d)

    @classmethod
    def from_orders(cls, orders: list[int] | tuple[int, ...]) -> AbelianGroup:
        """Build a group from prime-power orders in any order."""
        indexed = [(_prime_of(d), -d, pos, d) for pos, d in enumerate(orders)]
        return cls(tuple(item[3] for item in sorted(indexed)))

    # -- invariants ---------------------------------------------------------

    @property
    def rank(self) -> int:
        return len(self.cyclic_orders)

    @property
    def order(self) -> int:
        return math.prod(self.cyclic_orders)

    @property
    def exponent(self) -> int:
        return math.lcm(*self.cyclic_orders) if self.cyclic_orders else 1

    @cached_property
    def prime_of(self) -> tuple[int, ...]:
        return tuple(_prime_of(d) for d in self.cyclic_orders)

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(sorted(set(self.prime_of)))

    @property
    def smallest_prime(self) -> int | None:
        return self.primes[0] if self.primes else None

    @property
    def descriptor(self) -> str:
        if not self.cyclic_orders:
            return "Z1"
        return "x".join(f"Z{d}" for d in self.cyclic_orders)

    def is_p_group(self, p: int) -> bool:
        return all(q == p for q in self.prime_of)

    def is_elementary(self, p: int | None = None) -> bool:
        """True when every cyclic factor has prime order (equal to p if given)."""
        if not self.cyclic_orders:
            return True
        if p is None:
            p = self.cyclic_orders[0]
        return all(d == p for d in self.cyclic_orders)

    def primary_component(self, q: int) -> tuple[int, ...]:
        """Coordinate positions belonging to the q-primary component."""
        return tuple(i for i, prime in enumerate(self.prime_of) if prime == q)

    def gcd_orders(self, i: int, j: int) -> int:
        return math.gcd(self.cyclic_orders[i], self.cyclic_orders[j])

    def __str__(self) -> str:
        return self.descriptor

    # -- indexing -----------------------------------------------------------

    @cached_property
    def orders_array(self) -> np.ndarray:
        return np.array(self.cyclic_orders, dtype=np.int64)

    @cached_property
    def strides(self) -> np.ndarray:
        strides = [math.prod(self.cyclic_orders[i + 1 :]) for i in range(self.rank)]
        return np.array(strides, dtype=np.int64)

    @cached_property
    def elements(self) -> np.ndarray:
        """All elements as an (|G|, rank) array, in index order."""
        ranges = [range(d) for d in self.cyclic_orders]
        flat = np.array(list(itertools.product(*ranges)), dtype=np.int64)
        return flat.reshape(self.order, self.rank)

    def index(self, coords) -> int:
        reduced = np.asarray(coords, dtype=np.int64) % self.orders_array
        return int(reduced @ self.strides) if self.rank else 0

    def indices(self, coords: np.ndarray) -> np.ndarray:
        """Vectorized index of an (N, rank) array of coordinate rows."""
        coords = np.asarray(coords, dtype=np.int64)
        if self.rank == 0:
            return np.zeros(coords.shape[0], dtype=np.int64)
        return (coords % self.orders_array) @ self.strides

    def element(self, idx: int) -> tuple[int, ...]:
        return tuple(int(c) for c in self.elements[idx])

    @cached_property
    def addition_table(self) -> np.ndarray:
        """table[a, b] = index(a + b)."""
        summed = self.elements[:, None, :] + self.elements[None, :, :]
        return self.indices(summed.reshape(-1, self.rank)).reshape(
            self.order, self.order
        )

    @cached_property
    def negation(self) -> np.ndarray:
        return self.indices(-self.elements)

    def basis_indices(self) -> list[int]:
        """Indices of the standard generators g_i."""
        return [self.index(np.eye(self.rank, dtype=np.int64)[i]) for i in range(self.rank)]

    def character_values(self, chars: np.ndarray, modulus: int) -> np.ndarray:
        """Exponents χ(g) mod `modulus` for an (N, rank) array of characters.

        Returns an (N, |G|) array.
        """
        scale = modulus // self.orders_array
        weighted = (np.asarray(chars, dtype=np.int64) % self.orders_array) * scale
        return (weighted @ self.elements.T) % modulus


def parse_group(descriptor: str) -> AbelianGroup:
    """Parse a descriptor such as "Z9xZ3", "Z3^2" or "Z15xZ15".

    Composite cyclic orders are split into their prime-power parts.

    Raises:
        GroupDescriptorError: If the descriptor is malformed
    """
    text = descriptor.strip()
    if not text:
        raise GroupDescriptorError("Empty group descriptor")

    orders: list[int] = []
    for token in _SEPARATOR_RE.split(text):
        match = _FACTOR_RE.match(token.strip())
        if not match:
            raise GroupDescriptorError(f"Bad factor {token!r} in {descriptor!r}")
        n = int(match.group(1))
        power = int(match.group(2) or 1)
        if n < 1 or power < 1:
            raise GroupDescriptorError(f"Bad factor {token!r} in {descriptor!r}")
        for _ in range(power):
            orders.extend(q**e for q, e in sorted(factorint(n).items()))
    return AbelianGroup.from_orders(orders)


def abelian_groups(order: int) -> list[AbelianGroup]:
    """One group per isomorphism type of abelian groups of the given order.

    Each prime q^e dividing the order contributes the partitions of e.
    """
    if order < 2:
        raise GroupDescriptorError(f"Group order must be at least 2, got {order}")
    per_prime = []
    for q, e in sorted(factorint(order).items()):
        shapes = []
        for parts in partitions(e):
            shapes.append([q**k for k, mult in sorted(parts.items(), reverse=True) for _ in range(mult)])
        per_prime.append(shapes)
    return [
        AbelianGroup.from_orders([d for block in combo for d in block])
        for combo in itertools.product(*per_prime)
    ]


@dataclass(frozen=True)
class GroupElement:
    group: AbelianGroup
    coords: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.coords) != self.group.rank:
            raise ValueError(f"Expected {self.group.rank} coordinates, got {len(self.coords)}")
        reduced = tuple(c % d for c, d in zip(self.coords, self.group.cyclic_orders, strict=True))
        object.__setattr__(self, "coords", reduced)

    def __add__(self, other: GroupElement) -> GroupElement:
        return GroupElement(self.group, tuple(a + b for a, b in zip(self.coords, other.coords, strict=True)))


@dataclass(frozen=True)
class Character:
    """χ(g_i) = ζ_{d_i}^{coords[i]}."""

    group: AbelianGroup
    coords: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.coords) != self.group.rank:
            raise ValueError(f"Expected {self.group.rank} coordinates, got {len(self.coords)}")
        reduced = tuple(c % d for c, d in zip(self.coords, self.group.cyclic_orders, strict=True))
        object.__setattr__(self, "coords", reduced)

    def __add__(self, other: Character) -> Character:
        return Character(self.group, tuple(a + b for a, b in zip(self.coords, other.coords, strict=True)))


def pair(chi: Character, g: GroupElement, modulus: int | None = None):
    """Evaluate χ(g) as a root of unity ζ_m^e.

    Args:
        chi: Character of G
        g: Element of G
        modulus: m, a multiple of exp(G); defaults to p·exp(G)

    Returns:
        CyclotomicScalar with exponent Σ χ_i g_i (m/d_i) mod m
    """
    from hopfext.algebra.cyclotomic import CyclotomicScalar

    if chi.group != g.group:
        raise ValueError("Character and element belong to different groups")
    group = g.group
    if modulus is None:
        modulus = (group.smallest_prime or 1) * group.exponent
    if modulus % group.exponent:
        raise ValueError(f"Modulus {modulus} is not a multiple of exp(G)={group.exponent}")
    exponent = sum(
        c * x * (modulus // d)
        for c, x, d in zip(chi.coords, g.coords, group.cyclic_orders, strict=True)
    )
    return CyclotomicScalar(modulus, exponent % modulus)


@dataclass(frozen=True)
class Endomorphism:
    """Endomorphism of G in column convention.

    matrix[i][j] is the coefficient of g_i in the image of g_j. An entry
    from a factor of order d_j into one of order d_i must be divisible by
    d_i / gcd(d_i, d_j).
    """

    group: AbelianGroup
    matrix: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        n = self.group.rank
        if len(self.matrix) != n or any(len(row) != n for row in self.matrix):
            raise InvalidHomomorphismError(f"Matrix must be {n}x{n}")
        orders = self.group.cyclic_orders
        reduced = tuple(
            tuple(int(entry) % orders[i] for entry in row)
            for i, row in enumerate(self.matrix)
        )
        for i in range(n):
            for j in range(n):
                step = orders[i] // math.gcd(orders[i], orders[j])
                if reduced[i][j] % step:
                    raise InvalidHomomorphismError(
                        f"Entry ({i},{j})={reduced[i][j]} must be divisible by {step} "
                        f"for orders {orders[i]}, {orders[j]}"
                    )
        object.__setattr__(self, "matrix", reduced)

    @classmethod
    def from_array(cls, group: AbelianGroup, array) -> Endomorphism:
        return cls(group, tuple(tuple(int(x) for x in row) for row in np.asarray(array)))

    @classmethod
    def identity(cls, group: AbelianGroup) -> Endomorphism:
        return cls.from_array(group, np.eye(group.rank, dtype=np.int64))

    @classmethod
    def scalar(cls, group: AbelianGroup, k: int) -> Endomorphism:
        return cls.from_array(group, k * np.eye(group.rank, dtype=np.int64))

    @cached_property
    def array(self) -> np.ndarray:
        return np.array(self.matrix, dtype=np.int64).reshape(self.group.rank, self.group.rank)

    @property
    def key(self) -> tuple[int, ...]:
        """Flattened matrix, for lexicographic ordering."""
        return tuple(itertools.chain.from_iterable(self.matrix))

    def apply(self, coords) -> tuple[int, ...]:
        image = (self.array @ np.asarray(coords, dtype=np.int64)) % self.group.orders_array
        return tuple(int(c) for c in image)

    @cached_property
    def permutation(self) -> np.ndarray:
        """perm[index(x)] = index(φ(x))."""
        if self.group.rank == 0:
            return np.zeros(1, dtype=np.int64)
        images = self.group.elements @ self.array.T
        return self.group.indices(images)

    def compose(self, other: Endomorphism) -> Endomorphism:
        """self ∘ other."""
        return Endomorphism.from_array(self.group, self.array @ other.array)

    def power(self, n: int) -> Endomorphism:
        if n < 0:
            return self.inverse().power(-n)
        result = Endomorphism.identity(self.group)
        base = self
        while n:
            if n & 1:
                result = result.compose(base)
            base = base.compose(base)
            n >>= 1
        return result

    def is_identity(self) -> bool:
        return self == Endomorphism.identity(self.group)

    def order(self) -> int:
        """Multiplicative order; raises for non-invertible maps."""
        if not self.is_automorphism():
            raise InvalidHomomorphismError("Only automorphisms have finite order")
        current, n = self, 1
        while not current.is_identity():
            current = current.compose(self)
            n += 1
        return n

    def is_automorphism(self) -> bool:
        """Invertible iff each primary block is invertible mod its prime."""
        for q in self.group.primes:
            block = self.group.primary_component(q)
            sub = self.array[np.ix_(block, block)] % q
            if determinant_mod_prime(sub, q) == 0:
                return False
        return True

    def inverse(self) -> Endomorphism:
        if not self.is_automorphism():
            raise InvalidHomomorphismError("Endomorphism is not invertible")
        inverse_perm = np.empty_like(self.permutation)
        inverse_perm[self.permutation] = np.arange(self.permutation.size)
        columns = [
            self.group.elements[inverse_perm[idx]] for idx in self.group.basis_indices()
        ]
        return Endomorphism.from_array(self.group, np.array(columns).T)

    def dual(self) -> Endomorphism:
        """Matrix D with coords(χ∘φ) = D·coords(χ)."""
        orders = self.group.cyclic_orders
        n = self.group.rank
        dual = np.zeros((n, n), dtype=np.int64)
        for i in range(n):
            for k in range(n):
                g = math.gcd(orders[i], orders[k])
                dual[i][k] = (self.matrix[k][i] // (orders[k] // g)) * (orders[i] // g)
        return Endomorphism.from_array(self.group, dual)


def determinant_mod_prime(matrix: np.ndarray, q: int) -> int:
    """Determinant of a square integer matrix over F_q by Gaussian elimination."""
    work = [[int(x) % q for x in row] for row in np.asarray(matrix)]
    n = len(work)
    det = 1
    for col in range(n):
        pivot = next((r for r in range(col, n) if work[r][col]), None)
        if pivot is None:
            return 0
        if pivot != col:
            work[col], work[pivot] = work[pivot], work[col]
            det = -det
        det = det * work[col][col] % q
        inv = pow(work[col][col], -1, q)
        for r in range(col + 1, n):
            factor = work[r][col] * inv % q
            if factor:
                work[r] = [(a - factor * b) % q for a, b in zip(work[r], work[col], strict=True)]
    return det % q


def hom_entry_steps(group: AbelianGroup) -> np.ndarray:
    """steps[i, j] = d_i / gcd(d_i, d_j), the divisibility of entry (i, j)."""
    orders = group.cyclic_orders
    n = group.rank
    return np.array(
        [[orders[i] // math.gcd(orders[i], orders[j]) for j in range(n)] for i in range(n)],
        dtype=np.int64,
    ).reshape(n, n)


__all__ = [
    "AbelianGroup",
    "GroupElement",
    "Character",
    "Endomorphism",
    "parse_group",
    "abelian_groups",
    "pair",
    "determinant_mod_prime",
    "hom_entry_steps",
]
