"""Automorphism groups of finite abelian groups.

Three routes: a closed-form order (used to fail fast on budgets), a small
generating set (transvections and unit scalings), and full enumeration with
fast paths for GL_n(F_p) and for Z_{p^e}⊕Z_p.
"""

from __future__ import annotations

import itertools
import logging
import math
from collections import deque

import numpy as np
from sympy import primitive_root

from hopfext import config
from hopfext.algebra.groups import AbelianGroup, Endomorphism, hom_entry_steps
from hopfext.models.schemas import BudgetExceededError

logger = logging.getLogger(__name__)


def _primary_aut_count(q: int, exponents: list[int]) -> int:
    e = sorted(exponents)
    n = len(e)
    # 1-based d_k = max{l : e_l = e_k}, c_k = min{l : e_l = e_k}
    d = [max(m + 1 for m in range(n) if e[m] == e[k]) for k in range(n)]
    c = [min(m + 1 for m in range(n) if e[m] == e[k]) for k in range(n)]
    count = 1
    for k in range(n):
        count *= q ** d[k] - q**k
    for j in range(n):
        count *= (q ** e[j]) ** (n - d[j])
    for i in range(n):
        count *= (q ** (e[i] - 1)) ** (n - c[i] + 1)
    return count


def automorphism_count(group: AbelianGroup) -> int:
    """|Aut(G)| from the closed formula, factor by factor over primes."""
    total = 1
    for q in group.primes:
        exponents = [
            round(math.log(group.cyclic_orders[i], q)) for i in group.primary_component(q)
        ]
        total *= _primary_aut_count(q, exponents)
    return total


def _unit_generators(d: int) -> list[int]:
    if d <= 2:
        return []
    if d % 2 == 0 and d >= 8:
        return [d - 1, 5]
    return [int(primitive_root(d))]


def aut_generators(group: AbelianGroup) -> list[Endomorphism]:
    """Transvections g_j ↦ g_j + s·g_i and unit scalings; they generate Aut(G)."""
    steps = hom_entry_steps(group)
    n = group.rank
    gens: list[Endomorphism] = []
    for q in group.primes:
        block = group.primary_component(q)
        for i, j in itertools.permutations(block, 2):
            matrix = np.eye(n, dtype=np.int64)
            matrix[i][j] = steps[i][j]
            gens.append(Endomorphism.from_array(group, matrix))
        for i in block:
            for u in _unit_generators(group.cyclic_orders[i]):
                matrix = np.eye(n, dtype=np.int64)
                matrix[i][i] = u
                gens.append(Endomorphism.from_array(group, matrix))
    return sorted(set(gens), key=lambda g: g.key)


def closure(generators: list[Endomorphism], budget: int | None = None) -> list[Endomorphism]:
    """All products of the generators (a finite group), sorted lexicographically."""
    if not generators:
        return []
    budget = budget or config.MAX_AUTOMORPHISMS
    identity = Endomorphism.identity(generators[0].group)
    seen = {identity}
    queue = deque([identity])
    while queue:
        current = queue.popleft()
        for gen in generators:
            product = gen.compose(current)
            if product not in seen:
                seen.add(product)
                if len(seen) > budget:
                    raise BudgetExceededError("automorphism closure", len(seen), budget)
                queue.append(product)
    return sorted(seen, key=lambda g: g.key)


def hom_space_size(group: AbelianGroup) -> int:
    return math.prod(
        group.gcd_orders(i, j) for i in range(group.rank) for j in range(group.rank)
    )


def brute_force_automorphisms(group: AbelianGroup) -> list[Endomorphism]:
    """Every invertible matrix in Hom(G, G), by exhaustive search."""
    size = hom_space_size(group)
    if size > config.MAX_AUTOMORPHISMS:
        raise BudgetExceededError("brute-force Hom(G,G)", size, config.MAX_AUTOMORPHISMS)
    steps = hom_entry_steps(group)
    n = group.rank
    choices = [
        [steps[i][j] * u for u in range(group.gcd_orders(i, j))]
        for i in range(n)
        for j in range(n)
    ]
    result = []
    for entries in itertools.product(*choices):
        endo = Endomorphism.from_array(group, np.array(entries, dtype=np.int64).reshape(n, n))
        if endo.is_automorphism():
            result.append(endo)
    return sorted(result, key=lambda g: g.key)


def general_linear(group: AbelianGroup) -> list[Endomorphism]:
    """GL_n(F_p) for elementary G, by choosing independent columns."""
    p = group.cyclic_orders[0]
    n = group.rank
    vectors = [np.array(v, dtype=np.int64) for v in itertools.product(range(p), repeat=n)]

    def span_of(columns: list[np.ndarray]) -> set[tuple[int, ...]]:
        span = {tuple([0] * n)}
        for col in columns:
            span = {tuple((np.array(s) + k * col) % p) for s in span for k in range(p)}
        return span

    result: list[Endomorphism] = []

    def extend(columns: list[np.ndarray]) -> None:
        if len(columns) == n:
            result.append(Endomorphism.from_array(group, np.array(columns).T))
            return
        span = span_of(columns)
        for v in vectors:
            if tuple(v) not in span:
                extend([*columns, v])

    extend([])
    return sorted(result, key=lambda g: g.key)


def gamma_family(group: AbelianGroup) -> list[Endomorphism]:
    """Aut(Z_{p^e}⊕Z_p) as the matrices [[a, c·p^{e-1}], [b, d]]."""
    big, p = group.cyclic_orders
    result = []
    for a in range(big):
        if a % p == 0:
            continue
        for b, c, d in itertools.product(range(p), range(p), range(1, p)):
            result.append(Endomorphism(group, ((a, c * (big // p)), (b, d))))
    return sorted(result, key=lambda g: g.key)


def is_gamma_group(group: AbelianGroup) -> bool:
    if group.rank != 2 or len(group.primes) != 1:
        return False
    big, small = group.cyclic_orders
    return small == group.primes[0] and big > small


def enumerate_automorphisms(group: AbelianGroup) -> list[Endomorphism]:
    """Every automorphism of G, sorted lexicographically by matrix.

    Raises:
        BudgetExceededError: If |G| or |Aut(G)| exceeds its budget
    """
    if group.order > config.MAX_GROUP_ORDER:
        raise BudgetExceededError("group order", group.order, config.MAX_GROUP_ORDER)
    count = automorphism_count(group)
    if count > config.MAX_AUTOMORPHISMS:
        raise BudgetExceededError("automorphism enumeration", count, config.MAX_AUTOMORPHISMS)

    logger.debug(f"Enumerating |Aut({group})| = {count}")
    if group.rank == 0:
        return [Endomorphism.identity(group)]
    if len(group.primes) == 1 and group.is_elementary():
        return general_linear(group)
    if is_gamma_group(group):
        return gamma_family(group)
    if hom_space_size(group) <= config.MAX_AUTOMORPHISMS:
        return brute_force_automorphisms(group)
    return closure(aut_generators(group))


__all__ = [
    "automorphism_count",
    "aut_generators",
    "closure",
    "enumerate_automorphisms",
    "brute_force_automorphisms",
    "general_linear",
    "gamma_family",
    "is_gamma_group",
    "hom_space_size",
]
