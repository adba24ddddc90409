"""C_p-actions on G: canonical representatives, symmetries and intertwiners.

An action ⊳ is an automorphism t of G with t^p = 1; a ⊳ t^i is t^i(a).
Everything commuting with t preserves the primary decomposition, so
centralizers and intertwiners are solved one primary block at a time with
kernel_mod and then assembled block-diagonally.
"""

from __future__ import annotations

import itertools
import logging
import math
import random
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np
from sympy import isprime
from sympy.ntheory.residue_ntheory import legendre_symbol

from hopfext import config
from hopfext.algebra.automorphisms import (
    aut_generators,
    automorphism_count,
    enumerate_automorphisms,
    is_gamma_group,
)
from hopfext.algebra.groups import AbelianGroup, Endomorphism, hom_entry_steps
from hopfext.algebra.lattice import additive_closure, kernel_mod
from hopfext.config import DEFAULT_SEED
from hopfext.constants import ActionFamily
from hopfext.models.schemas import (
    BudgetExceededError,
    PreconditionError,
    UnsupportedInputError,
)

logger = logging.getLogger(__name__)


# =============================================================================
# Actions
# =============================================================================


@dataclass(frozen=True)
class CpAction:
    """An automorphism t of G with t^p = 1."""

    group: AbelianGroup
    p: int
    t: Endomorphism

    def __post_init__(self) -> None:
        if not isprime(self.p):
            raise PreconditionError(f"p={self.p} is not prime")
        if not self.t.is_automorphism():
            raise PreconditionError("t is not an automorphism")
        if not self.t.power(self.p).is_identity():
            raise PreconditionError(f"t^{self.p} is not the identity")

    @classmethod
    def trivial(cls, group: AbelianGroup, p: int) -> CpAction:
        return cls(group, p, Endomorphism.identity(group))

    @classmethod
    def from_matrix(cls, group: AbelianGroup, p: int, matrix) -> CpAction:
        return cls(group, p, Endomorphism.from_array(group, np.asarray(matrix)))

    @property
    def is_trivial(self) -> bool:
        return self.t.is_identity()

    @cached_property
    def dual_t(self) -> Endomorphism:
        return self.t.dual()

    def power(self, i: int) -> Endomorphism:
        return self.t.power(i % self.p)

    @cached_property
    def powers(self) -> tuple[Endomorphism, ...]:
        result = [Endomorphism.identity(self.group)]
        for _ in range(1, self.p):
            result.append(self.t.compose(result[-1]))
        return tuple(result)

    @cached_property
    def permutations(self) -> np.ndarray:
        """(p, |G|) array: row i is the permutation of t^i on element indices."""
        return np.stack([power.permutation for power in self.powers])

    def phi_dual(self, count: int) -> np.ndarray:
        """Σ_{i<count} D(t^i): the action of φ_count on character coordinates."""
        total = np.zeros((self.group.rank, self.group.rank), dtype=np.int64)
        for power in self.powers[:count]:
            total = total + power.dual().array
        return total % self.group.orders_array[:, None] if self.group.rank else total

    @cached_property
    def norm_dual(self) -> np.ndarray:
        return self.phi_dual(self.p)

    def matrix(self) -> list[list[int]]:
        return [list(row) for row in self.t.matrix]


def validate_pair(group: AbelianGroup, p: int) -> None:
    """Reject (G, p) outside the standing hypotheses.

    Raises:
        UnsupportedInputError: If p is not prime, exceeds the smallest prime
            divisor of |G|, G is trivial or |G| exceeds the group budget
    """
    if not isprime(p):
        raise UnsupportedInputError(f"p={p} is not prime")
    if group.order == 1:
        raise UnsupportedInputError("G must be nontrivial")
    if p > group.smallest_prime:
        raise UnsupportedInputError(
            f"p={p} exceeds the smallest prime divisor {group.smallest_prime} of |G|"
        )
    if group.order > config.MAX_GROUP_ORDER:
        raise BudgetExceededError("group order", group.order, config.MAX_GROUP_ORDER)


def dual_action(act: CpAction) -> Endomorphism:
    """Matrix of χ ↦ χ∘t on character coordinates."""
    return act.dual_t


def twist(act: CpAction, k: int) -> CpAction:
    """The action ⊳^k, generated by t^k."""
    if k % act.p == 0:
        raise PreconditionError(f"k={k} is not a unit mod {act.p}")
    return CpAction(act.group, act.p, act.power(k))


# =============================================================================
# Block-wise linear algebra
# =============================================================================


def _block_group(group: AbelianGroup, block: tuple[int, ...]) -> AbelianGroup:
    return AbelianGroup(tuple(group.cyclic_orders[i] for i in block))


def _block_matrix(endo: Endomorphism, block: tuple[int, ...]) -> np.ndarray:
    return endo.array[np.ix_(block, block)]


def _is_scalar(matrix: np.ndarray, orders: np.ndarray) -> int | None:
    """c when matrix ≡ c·I (row-wise mod orders), else None."""
    c = int(matrix[0][0])
    scalar = (c * np.eye(len(orders), dtype=np.int64)) % orders[:, None]
    return c if np.array_equal(matrix % orders[:, None], scalar) else None


def _intertwining_space(group: AbelianGroup, T1: np.ndarray, T2: np.ndarray) -> np.ndarray:
    """All endomorphisms Λ of G with Λ·T1 = T2·Λ, as an (N, n, n) array in lex order."""
    n = group.rank
    steps = hom_entry_steps(group)
    rows, moduli = [], []
    for i in range(n):
        for j in range(n):
            row = np.zeros(n * n, dtype=np.int64)
            for k in range(n):
                row[i * n + k] += steps[i][k] * T1[k][j]
                row[k * n + j] -= T2[i][k] * steps[k][j]
            rows.append(row)
            moduli.append(group.cyclic_orders[i])
    lattice = kernel_mod(np.array(rows), moduli, modulus=group.exponent)
    gcds = np.array(
        [group.gcd_orders(i, j) for i in range(n) for j in range(n)], dtype=np.int64
    )
    solutions = additive_closure(lattice.generators, gcds)
    return (solutions * steps.reshape(-1)).reshape(-1, n, n)


def _dets_mod(mats: np.ndarray, q: int) -> np.ndarray:
    """Determinants mod q of a stack of square matrices."""
    m = mats.shape[1]
    a = mats % q
    if m == 1:
        return a[:, 0, 0] % q
    if m == 2:
        return (a[:, 0, 0] * a[:, 1, 1] - a[:, 0, 1] * a[:, 1, 0]) % q
    if m == 3:
        return (
            a[:, 0, 0] * (a[:, 1, 1] * a[:, 2, 2] - a[:, 1, 2] * a[:, 2, 1])
            - a[:, 0, 1] * (a[:, 1, 0] * a[:, 2, 2] - a[:, 1, 2] * a[:, 2, 0])
            + a[:, 0, 2] * (a[:, 1, 0] * a[:, 2, 1] - a[:, 1, 1] * a[:, 2, 0])
        ) % q
    from hopfext.algebra.groups import determinant_mod_prime

    return np.array([determinant_mod_prime(mat, q) for mat in a], dtype=np.int64)


def _units(mats: np.ndarray, q: int) -> np.ndarray:
    return mats[_dets_mod(mats, q) != 0]


def _compose(a: np.ndarray, b: np.ndarray, orders: np.ndarray) -> np.ndarray:
    return (a @ b) % orders[:, None]


def _closure_keys(gens: list[np.ndarray], orders: np.ndarray, limit: int) -> set[bytes]:
    identity = np.eye(len(orders), dtype=np.int64)
    seen = {identity.tobytes()}
    queue = deque([identity])
    while queue:
        current = queue.popleft()
        for gen in gens:
            product = _compose(gen, current, orders)
            key = product.tobytes()
            if key not in seen:
                seen.add(key)
                if len(seen) > limit:
                    raise BudgetExceededError("symmetry closure", len(seen), limit)
                queue.append(product)
    return seen


def extract_generators(
    units: np.ndarray, orders: np.ndarray, seed: int = DEFAULT_SEED
) -> list[np.ndarray]:
    """A seeded random subset of `units` generating the whole group."""
    target = units.shape[0]
    order = list(range(target))
    random.Random(seed).shuffle(order)
    gens: list[np.ndarray] = []
    closure = {np.eye(len(orders), dtype=np.int64).tobytes()}
    for idx in order:
        if len(closure) == target:
            break
        if units[idx].tobytes() in closure:
            continue
        gens.append(units[idx])
        closure = _closure_keys(gens, orders, target)
    if len(closure) != target:
        raise PreconditionError("Matrix set is not closed under composition")
    return gens


def _embed(group: AbelianGroup, block: tuple[int, ...], sub: np.ndarray) -> Endomorphism:
    full = np.eye(group.rank, dtype=np.int64)
    full[np.ix_(block, block)] = sub
    return Endomorphism.from_array(group, full)


def _block_diagonal(group: AbelianGroup, blocks: list[tuple[tuple[int, ...], np.ndarray]]) -> Endomorphism:
    full = np.zeros((group.rank, group.rank), dtype=np.int64)
    for block, sub in blocks:
        full[np.ix_(block, block)] = sub
    return Endomorphism.from_array(group, full)


def _block_intertwiners(
    group: AbelianGroup, block: tuple[int, ...], t1: Endomorphism, t2: Endomorphism
) -> np.ndarray:
    """Invertible Λ on one primary block with Λ t1 = t2 Λ, lex ordered."""
    sub_group = _block_group(group, block)
    T1, T2 = _block_matrix(t1, block), _block_matrix(t2, block)
    orders = sub_group.orders_array
    c1, c2 = _is_scalar(T1, orders), _is_scalar(T2, orders)
    if c1 is not None and c2 is not None:
        if (c1 - c2) % sub_group.exponent:
            return np.zeros((0, len(block), len(block)), dtype=np.int64)
        autos = enumerate_automorphisms(sub_group)
        return np.array([a.array for a in autos], dtype=np.int64).reshape(-1, len(block), len(block))
    space = _intertwining_space(sub_group, T1, T2)
    return _units(space, sub_group.primes[0])


def intertwiners(a1: CpAction, a2: CpAction) -> list[Endomorphism]:
    """All automorphisms λ with λ∘t1 = t2∘λ, sorted lexicographically.

    Empty exactly when (G, ⊳1) and (G, ⊳2) are inequivalent.
    """
    if a1.group != a2.group or a1.p != a2.p:
        raise PreconditionError("Actions live on different (G, p)")
    group = a1.group
    per_block = []
    for q in group.primes:
        block = group.primary_component(q)
        mats = _block_intertwiners(group, block, a1.t, a2.t)
        if mats.shape[0] == 0:
            return []
        per_block.append((block, mats))
    total = math.prod(mats.shape[0] for _, mats in per_block)
    if total > config.MAX_AUTOMORPHISMS:
        raise BudgetExceededError("intertwiner enumeration", total, config.MAX_AUTOMORPHISMS)
    result = [
        _block_diagonal(group, [(block, mat) for (block, _), mat in zip(per_block, combo, strict=True)])
        for combo in itertools.product(*[mats for _, mats in per_block])
    ]
    return sorted(result, key=lambda e: e.key)


def first_intertwiner(a1: CpAction, a2: CpAction) -> Endomorphism | None:
    """Lexicographically first intertwiner, without enumerating all of them."""
    group = a1.group
    blocks = []
    for q in group.primes:
        block = group.primary_component(q)
        T1 = _block_matrix(a1.t, block)
        T2 = _block_matrix(a2.t, block)
        orders = _block_group(group, block).orders_array
        c1, c2 = _is_scalar(T1, orders), _is_scalar(T2, orders)
        if c1 is not None and c2 is not None:
            if (c1 - c2) % int(orders.max()):
                return None
            blocks.append((block, np.eye(len(block), dtype=np.int64)))
            continue
        mats = _block_intertwiners(group, block, a1.t, a2.t)
        if mats.shape[0] == 0:
            return None
        blocks.append((block, mats[0]))
    return _block_diagonal(group, blocks)


# =============================================================================
# Symmetry groups
# =============================================================================


@dataclass(frozen=True)
class SymmetryGroup:
    """Generators of G(⊳) = A(⊳)·{λ_k : k ∈ C(⊳)}."""

    a_generators: tuple[Endomorphism, ...]
    a_order: int
    stabilizer: tuple[int, ...] = (1,)
    omega_generators: tuple[tuple[int, Endomorphism], ...] = ()

    @property
    def intertwiner_map(self) -> dict[int, Endomorphism]:
        return dict(self.omega_generators)

    def omega_generator(self, p: int) -> tuple[int, Endomorphism] | None:
        """(k0, λ_k0) with k0 generating C(⊳) ⊆ (Z/p)^×, or None when C(⊳) = {1}."""
        size = len(self.stabilizer)
        if size <= 1:
            return None
        for k, lam in self.omega_generators:
            if len({pow(k, i, p) for i in range(size)}) == size:
                return k, lam
        return None


def centralizer_A(act: CpAction, seed: int = DEFAULT_SEED) -> SymmetryGroup:
    """A(⊳): automorphisms commuting with t, as generators and order.

    Blocks where t is a scalar use the transvection generators of
    Aut(block) and the closed-form order; other blocks are solved with
    kernel_mod and their units reduced to a generating set.
    """
    group = act.group
    generators: list[Endomorphism] = []
    order = 1
    for q in group.primes:
        block = group.primary_component(q)
        sub_group = _block_group(group, block)
        T = _block_matrix(act.t, block)
        if _is_scalar(T, sub_group.orders_array) is not None:
            order *= automorphism_count(sub_group)
            generators.extend(_embed(group, block, g.array) for g in aut_generators(sub_group))
            continue
        units = _units(_intertwining_space(sub_group, T, T), q)
        order *= units.shape[0]
        for gen in extract_generators(units, sub_group.orders_array, seed):
            generators.append(_embed(group, block, gen))
    logger.debug(f"|A(⊳)| = {order} with {len(generators)} generators")
    return SymmetryGroup(tuple(sorted(set(generators), key=lambda e: e.key)), order)


def symmetry_group(
    act: CpAction,
    closed_forms: dict[int, np.ndarray] | None = None,
    seed: int = DEFAULT_SEED,
) -> SymmetryGroup:
    """A(⊳) together with C(⊳) and one intertwiner λ_k per k ∈ C(⊳)."""
    a_part = centralizer_A(act, seed)
    closed_forms = closed_forms or {}
    stabilizer = [1]
    omegas: list[tuple[int, Endomorphism]] = []
    for k in range(2, act.p):
        target = twist(act, k)
        lam = None
        if k in closed_forms:
            candidate = Endomorphism.from_array(act.group, closed_forms[k])
            if candidate.is_automorphism() and candidate.compose(act.t) == target.t.compose(candidate):
                lam = candidate
            else:
                logger.warning(f"Closed-form λ_{k} does not intertwine; searching instead")
        if lam is None:
            lam = first_intertwiner(act, target)
        if lam is not None:
            stabilizer.append(k)
            omegas.append((k, lam))
    return SymmetryGroup(a_part.a_generators, a_part.a_order, tuple(stabilizer), tuple(omegas))


# =============================================================================
# Catalog
# =============================================================================


@dataclass(frozen=True)
class ActionClass:
    """A class [⊳] with its canonical representative and symmetries."""

    representative: CpAction
    family: ActionFamily
    label: str
    symmetry: SymmetryGroup = field(compare=False)

    def members(self) -> list[Endomorphism]:
        """eq(⊳): every conjugate λ^{-1} t λ, sorted lexicographically."""
        group = self.representative.group
        t = self.representative.t
        conjugates = {lam.inverse().compose(t).compose(lam) for lam in enumerate_automorphisms(group)}
        return sorted(conjugates, key=lambda e: e.key)

    def summary(self) -> dict:
        return {
            "family": str(self.family),
            "label": self.label,
            "matrix": self.representative.matrix(),
            "a_order": self.symmetry.a_order,
            "stabilizer": list(self.symmetry.stabilizer),
        }


@dataclass
class _Candidate:
    family: ActionFamily
    label: str
    matrix: np.ndarray
    closed_forms: dict[int, np.ndarray] = field(default_factory=dict)


def _diag(*entries: int) -> np.ndarray:
    return np.diag(np.array(entries, dtype=np.int64))


def _elementary_candidates(group: AbelianGroup, p: int) -> list[_Candidate]:
    n = group.rank
    if p == 2:
        if n > 4:
            raise UnsupportedInputError(
                f"Elementary 2-groups of rank {n} > 4 are outside the supported catalog"
            )
        result = []
        for m in range(1, n // 2 + 1):
            perm = list(range(n))
            for i in range(m):
                perm[2 * i], perm[2 * i + 1] = perm[2 * i + 1], perm[2 * i]
            matrix = np.eye(n, dtype=np.int64)[:, perm]
            result.append(_Candidate(ActionFamily.ELEMENTARY_TWO_SWAP, f"swap-{m}", matrix))
        return result
    if n == 2:
        closed = {k: _diag(1, k) for k in range(2, p)}
        return [_Candidate(ActionFamily.ELEMENTARY_REGULAR, "R2", np.array([[1, 0], [1, 1]]), closed)]
    if n == 3:
        split = np.array([[1, 0, 0], [1, 1, 0], [0, 0, 1]])
        uniserial = np.array([[1, 0, 0], [1, 1, 0], [0, 1, 1]])
        split_closed = {k: _diag(1, k, 1) for k in range(2, p)}
        uniserial_closed = {
            k: np.array([[1, 0, 0], [0, k, 0], [0, k * (k - 1) // 2, k * k]]) for k in range(2, p)
        }
        return [
            _Candidate(ActionFamily.ELEMENTARY_DECOMPOSABLE, "R2+R1", split, split_closed),
            _Candidate(ActionFamily.ELEMENTARY_R3, "R3", uniserial, uniserial_closed),
        ]
    raise UnsupportedInputError(
        f"Elementary {p}-groups of rank {n} > 3 are outside the supported catalog"
    )


def least_nonresidue(p: int) -> int:
    return next(z for z in range(2, p) if legendre_symbol(z, p) == -1)


def _gamma_candidates(group: AbelianGroup, p: int) -> list[_Candidate]:
    big = group.cyclic_orders[0]
    P = big // p
    zeta = least_nonresidue(p)
    inverse = {k: pow(k, -1, p) for k in range(2, p)}
    return [
        _Candidate(ActionFamily.GAMMA_CENTRAL, "central", _diag(1 + P, 1)),
        _Candidate(
            ActionFamily.GAMMA_LOWER_TRIANGULAR,
            "lower-triangular",
            np.array([[1, P], [0, 1]]),
            {k: _diag(1, inverse[k]) for k in range(2, p)},
        ),
        _Candidate(
            ActionFamily.GAMMA_CYCLIC_0,
            "cyclic-0",
            np.array([[1, 0], [1, 1]]),
            {k: _diag(1, k) for k in range(2, p)},
        ),
        _Candidate(ActionFamily.GAMMA_CYCLIC_1, "cyclic-1", np.array([[1, P], [1, 1]])),
        _Candidate(
            ActionFamily.GAMMA_CYCLIC_NONRESIDUE,
            f"cyclic-{zeta}",
            np.array([[1, P], [zeta, 1]]),
        ),
    ]


def _cyclic_candidates(group: AbelianGroup, p: int) -> list[_Candidate]:
    d = group.cyclic_orders[0]
    units = [u for u in range(2, d) if math.gcd(u, d) == 1 and pow(u, p, d) == 1]
    if not units:
        return []
    if group.primes[0] != 2:
        # the units of order p form one cyclic subgroup: a single class up to twist
        units = units[:1]
    return [
        _Candidate(ActionFamily.CYCLIC_UNIT, f"unit-{u}", np.array([[u]])) for u in units
    ]


def _two_n_candidates(group: AbelianGroup) -> list[_Candidate]:
    blocks = [group.primary_component(q) for q in group.primes]
    options = {
        "id": lambda d: _diag(1, 1),
        "-id": lambda d: _diag(d - 1, d - 1),
        "split": lambda d: _diag(1, d - 1),
    }
    result = []
    for labels in itertools.product(options, repeat=len(blocks)):
        if all(label == "id" for label in labels):
            continue
        matrix = np.zeros((group.rank, group.rank), dtype=np.int64)
        for block, label in zip(blocks, labels, strict=True):
            matrix[np.ix_(block, block)] = options[label](group.cyclic_orders[block[0]])
        name = ",".join(f"{q}:{label}" for q, label in zip(group.primes, labels, strict=True))
        result.append(_Candidate(ActionFamily.TWO_N_SPLIT, name, matrix))
    return result


def is_two_n_group(group: AbelianGroup) -> bool:
    if group.order % 2 == 0 or group.order == 1:
        return False
    for q in group.primes:
        block = group.primary_component(q)
        orders = {group.cyclic_orders[i] for i in block}
        if len(block) != 2 or len(orders) != 1:
            return False
    return True


def two_n_side(group: AbelianGroup) -> int:
    """n for G = Z_n × Z_n."""
    return math.isqrt(group.order)


def _nontrivial_candidates(group: AbelianGroup, p: int) -> list[_Candidate]:
    if automorphism_count(group) % p:
        return []
    if group.is_p_group(p) and group.is_elementary(p):
        return _elementary_candidates(group, p)
    if p != 2 and is_gamma_group(group) and group.primes[0] == p:
        return _gamma_candidates(group, p)
    if group.rank == 1:
        return _cyclic_candidates(group, p)
    if p == 2 and is_two_n_group(group):
        return _two_n_candidates(group)
    raise UnsupportedInputError(
        f"Nontrivial C_{p}-actions on {group} are outside the supported catalog "
        "(elementary p-groups of rank <= 3, Z_p^e+Z_p, cyclic groups, "
        "Z_n x Z_n with p=2, elementary 2-groups of rank <= 4)"
    )


def make_class(
    act: CpAction,
    family: ActionFamily,
    label: str,
    closed_forms: dict[int, np.ndarray] | None = None,
    seed: int = DEFAULT_SEED,
) -> ActionClass:
    if act.is_trivial:
        a_part = centralizer_A(act, seed)
        identity = Endomorphism.identity(act.group)
        ks = tuple(range(1, act.p))
        symmetry = SymmetryGroup(
            a_part.a_generators, a_part.a_order, ks, tuple((k, identity) for k in ks[1:])
        )
    else:
        symmetry = symmetry_group(act, closed_forms, seed)
    logger.info(
        f"Action {label} on {act.group}: |A|={symmetry.a_order}, C={list(symmetry.stabilizer)}"
    )
    return ActionClass(act, family, label, symmetry)


def catalog_actions(
    group: AbelianGroup,
    p: int,
    *,
    include_nontrivial: bool = True,
    seed: int = DEFAULT_SEED,
) -> list[ActionClass]:
    """Every class [⊳] of C_p-actions on G, trivial class first.

    Raises:
        UnsupportedInputError: If (G, p) is outside the supported families
    """
    validate_pair(group, p)
    classes = [make_class(CpAction.trivial(group, p), ActionFamily.TRIVIAL, "trivial", seed=seed)]
    if not include_nontrivial:
        return classes
    for candidate in _nontrivial_candidates(group, p):
        act = CpAction.from_matrix(group, p, candidate.matrix)
        classes.append(make_class(act, candidate.family, candidate.label, candidate.closed_forms, seed))
    return classes


def equivalent_up_to_twist(a1: CpAction, a2: CpAction) -> bool:
    """True when ⊳2 is conjugate to some twist of ⊳1."""
    return any(first_intertwiner(twist(a1, k), a2) is not None for k in range(1, a1.p))


__all__ = [
    "CpAction",
    "ActionClass",
    "SymmetryGroup",
    "validate_pair",
    "dual_action",
    "twist",
    "intertwiners",
    "first_intertwiner",
    "centralizer_A",
    "symmetry_group",
    "catalog_actions",
    "make_class",
    "extract_generators",
    "equivalent_up_to_twist",
    "least_nonresidue",
    "is_two_n_group",
    "two_n_side",
]
