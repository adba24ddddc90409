"""The classifying group X(⊳) and the action of G(⊳) on it.

Cocycle tables are (|G|, |G|) integer arrays of exponents modulo
M = p·exp(G), indexed by element indices; s(a, b) is read as ζ_M^{s[a, b]}.

For |G| odd every class [τ] splits canonically into its symmetric part, a
coboundary δf whose norm φ_p·f is a fixed character, and its alternating
part a(τ), represented by the bimultiplicative half a(τ)/2. For p = 2 the
alternating image is carried by a fixed transversal of cocycles σ_v and the
character part absorbs the cross terms Φ(g·σ_v - Σ c_vw σ_w) and the carries
Φ(2σ_w).
"""

from __future__ import annotations

import itertools
import logging
import math
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np
from sympy import factorint

from hopfext.actions import ActionClass, CpAction
from hopfext.algebra.forms import AltSpace, alternating_coords, antisymmetrize
from hopfext.algebra.groups import AbelianGroup, Endomorphism
from hopfext.algebra.lattice import element_order
from hopfext.config import MAX_CARRIER_ORDER
from hopfext.constants import CarrierKind
from hopfext.models.schemas import (
    BudgetExceededError,
    PreconditionError,
    UnsupportedInputError,
)

logger = logging.getLogger(__name__)


def cocycle_modulus(group: AbelianGroup, p: int) -> int:
    return p * group.exponent


def coboundary(f: np.ndarray, group: AbelianGroup, modulus: int) -> np.ndarray:
    """δf(a, b) = f(a) + f(b) - f(a + b)."""
    f = np.asarray(f, dtype=np.int64)
    return (f[:, None] + f[None, :] - f[group.addition_table]) % modulus


def pullback_table(table: np.ndarray, perms, modulus: int) -> np.ndarray:
    """Σ_π s(π(a), π(b)) over the given point permutations."""
    total = np.zeros_like(table)
    for perm in perms:
        total = total + table[np.ix_(perm, perm)]
    return total % modulus


# =============================================================================
# Characters: Ĝ^{C_p} / N(Ĝ)
# =============================================================================


@dataclass(frozen=True, eq=False)
class CharQuotient:
    """Ĝ^{C_p}/N(Ĝ), with cosets named by their least character index."""

    group: AbelianGroup
    fixed: np.ndarray
    norm: np.ndarray
    reps: np.ndarray
    canon: np.ndarray  # index -> coset position, -1 off the fixed subgroup

    @property
    def order(self) -> int:
        return int(self.reps.size)

    @cached_property
    def rep_coords(self) -> np.ndarray:
        return self.group.elements[self.reps]

    def lift(self, position: int) -> np.ndarray:
        return self.rep_coords[position].copy()

    def positions(self, coords: np.ndarray) -> np.ndarray:
        """Coset positions of an (N, rank) array of fixed characters."""
        found = self.canon[self.group.indices(np.atleast_2d(coords))]
        if (found < 0).any():
            raise PreconditionError("Character is not fixed by the action")
        return found

    def position(self, coords) -> int:
        return int(self.positions(np.asarray(coords, dtype=np.int64))[0])

    def contains_norm(self, coords) -> bool:
        return bool(np.isin(self.group.index(coords), self.norm))

    def transform(self, matrix: np.ndarray) -> np.ndarray:
        """Permutation of coset positions induced by a character endomorphism."""
        images = (self.rep_coords @ matrix.T) % self.group.orders_array
        return self.positions(images)

    def add(self, first: int, second: int) -> int:
        return self.position(self.rep_coords[first] + self.rep_coords[second])

    def element_order(self, position: int) -> int:
        rep = self.rep_coords[position]
        for k in range(1, self.group.exponent + 1):
            if self.position(k * rep) == 0:
                return k
        raise PreconditionError("Coset order exceeds exp(G)")


def fixed_and_norm(act: CpAction) -> tuple[np.ndarray, np.ndarray, CharQuotient]:
    """Fixed characters, norm image φ_p(Ĝ) and the quotient between them.

    Returns:
        (indices of Ĝ^{C_p}, indices of N(Ĝ), CharQuotient)
    """
    group = act.group
    chars = group.elements
    orders = group.orders_array
    images = (chars @ act.dual_t.array.T) % orders
    fixed = np.nonzero(np.all(images == chars, axis=1))[0]
    norm = np.unique(group.indices((chars @ act.norm_dual.T) % orders))
    coset_min = group.addition_table[np.ix_(fixed, norm)].min(axis=1)
    reps = np.unique(coset_min)
    canon = np.full(group.order, -1, dtype=np.int64)
    canon[fixed] = np.searchsorted(reps, coset_min)
    logger.debug(f"|Ĝ^C|={fixed.size}, |N(Ĝ)|={norm.size}, quotient {reps.size}")
    return fixed, norm, CharQuotient(group, fixed, norm, reps, canon)


def coboundary_preimage(act: CpAction, chi) -> np.ndarray:
    """f: G → Z/M with φ_p·f = χ and f(0) = 0, for a fixed character χ.

    On a regular C_p-orbit f is χ at the least element and 0 elsewhere; on a
    fixed point s it is a p-th root of χ(s).
    """
    group = act.group
    M = cocycle_modulus(group, act.p)
    chi = np.asarray(chi, dtype=np.int64)
    if not np.array_equal((act.dual_t.array @ chi) % group.orders_array, chi % group.orders_array):
        raise PreconditionError("Character is not fixed by the action")
    values = group.character_values(chi[None, :], M)[0]
    perms = act.permutations
    points = np.arange(group.order)
    fixed_points = perms[1] == points
    orbit_min = perms.min(axis=0)
    f = np.zeros(group.order, dtype=np.int64)
    regular = (orbit_min == points) & ~fixed_points
    f[regular] = values[regular]
    f[fixed_points] = values[fixed_points] // act.p
    return f % M


def recover_potential(group: AbelianGroup, table: np.ndarray, modulus: int) -> np.ndarray:
    """f with δf = table over Z/modulus, walking paths along the last coordinate.

    Raises:
        PreconditionError: If the table is not a coboundary over Z/modulus
    """
    basis = group.basis_indices()
    f_gen = []
    for i, b in enumerate(basis):
        d = group.cyclic_orders[i]
        multiples = [group.index(k * np.eye(group.rank, dtype=np.int64)[i]) for k in range(d)]
        total = int(table[multiples, b].sum()) % modulus
        if total % d:
            raise PreconditionError("Cocycle is not a coboundary")
        f_gen.append(total // d)

    f = np.zeros(group.order, dtype=np.int64)
    f[0] = table[0, 0] % modulus
    elements = group.elements
    strides = group.strides
    for idx in range(1, group.order):
        nonzero = np.nonzero(elements[idx])[0]
        i = int(nonzero[-1])
        prev = idx - int(strides[i])
        f[idx] = (f[prev] + f_gen[i] - table[prev, basis[i]]) % modulus

    if not np.array_equal(coboundary(f, group, modulus), table % modulus):
        raise PreconditionError("Cocycle is not a coboundary")
    return f


def phi_of_cocycle(act: CpAction, table: np.ndarray) -> np.ndarray:
    """Φ(δf) = φ_p·f as character coordinates, for a symmetric table in Z²_N.

    The potential f lives in Z/(M·exp(G)) so that every coboundary of a
    μ_M-valued function is reachable.
    """
    group = act.group
    E = group.exponent
    M = cocycle_modulus(group, act.p)
    W = M * E
    f = recover_potential(group, (np.asarray(table, dtype=np.int64) % M) * E, W)
    normed = f[act.permutations].sum(axis=0) % W
    coords = []
    for i, b in enumerate(group.basis_indices()):
        step = W // group.cyclic_orders[i]
        if normed[b] % step:
            raise PreconditionError("φ_p·f is not a character; table is not in Z²_N")
        coords.append(int(normed[b]) // step)
    return np.array(coords, dtype=np.int64).reshape(group.rank)


# =============================================================================
# Alternating part
# =============================================================================


@dataclass(frozen=True, eq=False)
class AltSubgroup:
    """A subgroup of Alt(G) listed in lexicographic order."""

    space: AltSpace
    elements: np.ndarray  # (n, K)

    @property
    def order(self) -> int:
        return int(self.elements.shape[0])

    @cached_property
    def _lookup(self) -> np.ndarray:
        table = np.full(self.space.order, -1, dtype=np.int64)
        table[self.space.codes(self.elements)] = np.arange(self.order)
        return table

    def positions(self, coords: np.ndarray) -> np.ndarray:
        found = self._lookup[self.space.codes(np.atleast_2d(coords))]
        if (found < 0).any():
            raise PreconditionError("Form is not in the subgroup")
        return found

    def transform(self, W: np.ndarray) -> np.ndarray:
        return self.positions(self.space.apply(W, self.elements))

    def element_order(self, position: int) -> int:
        return element_order(self.elements[position], self.space.moduli)


def norm_transform(act: CpAction, space: AltSpace) -> np.ndarray:
    total = sum(space.transform_matrix(power) for power in act.powers)
    return total % space.moduli[:, None] if space.dimension else total


def alt_N(act: CpAction) -> AltSubgroup:
    """Alt_N(G): alternating forms killed by φ_p."""
    space = AltSpace(act.group)
    coords = space.coordinates
    images = space.apply(norm_transform(act, space), coords)
    kernel = coords[~images.any(axis=1)] if space.dimension else coords
    return AltSubgroup(space, kernel)


def half_coords(coords: np.ndarray, space: AltSpace) -> np.ndarray:
    """β^{1/2} by exponent halving; needs odd moduli."""
    E = space.group.exponent
    if E % 2 == 0:
        raise PreconditionError("Halving alternating forms needs odd exponent")
    return (np.asarray(coords, dtype=np.int64) * pow(2, -1, E)) % space.moduli


# =============================================================================
# p = 2 transversals
# =============================================================================


@dataclass(frozen=True, eq=False)
class Transversal:
    """Cocycles σ_v whose antisymmetrizations form an F_2-basis of a(Z²_N)."""

    labels: tuple[str, ...]
    alt_coords: np.ndarray  # (r, K)
    tables: tuple[np.ndarray, ...]
    space: AltSpace

    @property
    def size(self) -> int:
        return len(self.labels)

    @cached_property
    def bits(self) -> np.ndarray:
        """All e ∈ {0,1}^r in lexicographic order."""
        return np.array(list(itertools.product(range(2), repeat=self.size)), dtype=np.int64).reshape(
            2**self.size, self.size
        )

    @cached_property
    def _lookup(self) -> dict[int, int]:
        combos = (self.bits @ self.alt_coords) % self.space.moduli if self.space.dimension else self.bits[:, :0]
        codes = self.space.codes(combos)
        if len(set(codes.tolist())) != codes.size:
            raise PreconditionError("Transversal forms are not independent")
        return {int(c): pos for pos, c in enumerate(codes.tolist())}

    def position_of(self, alt: np.ndarray) -> int:
        code = int(self.space.codes(np.atleast_2d(alt))[0])
        if code not in self._lookup:
            raise PreconditionError("Form is outside the span of the transversal")
        return self._lookup[code]

    def table_of(self, bits, modulus: int) -> np.ndarray:
        n = self.space.group.order
        total = np.zeros((n, n), dtype=np.int64)
        for bit, table in zip(np.asarray(bits).tolist(), self.tables, strict=True):
            if bit:
                total = total + table
        return total % modulus


def _swap_potential(group: AbelianGroup, i: int, j: int) -> np.ndarray:
    """g(x) = x_i + x_j + x_i·x_j with values read as powers of ι = ζ_4."""
    X = group.elements
    return (X[:, i] + X[:, j] + X[:, i] * X[:, j]) % 4


def trivial_transversal(act: CpAction, space: AltSpace, modulus: int) -> Transversal:
    """s_α for α = (g_ij/2)·e_ij, one per pair with gcd(d_i, d_j) even."""
    labels, coords, tables = [], [], []
    for k, (i, j) in enumerate(space.pairs):
        g = int(space.moduli[k])
        if g % 2:
            continue
        vec = np.zeros(space.dimension, dtype=np.int64)
        vec[k] = g // 2
        labels.append(f"h{i + 1}{j + 1}")
        coords.append(vec)
        tables.append(space.half_table(vec, modulus))
    alt = np.array(coords, dtype=np.int64).reshape(len(coords), space.dimension)
    return Transversal(tuple(labels), alt, tuple(tables), space)


def elementary_transversal(act: CpAction, space: AltSpace, modulus: int) -> Transversal:
    """B' ∪ B'' ∪ B''' for a swap action on Z_2^n.

    B' holds φ_2·s_ij for pairs moved by t (least label of each orbit), B''
    holds s_ij for pairs inside the fixed part, and B''' corrects the
    swapped pairs by the coboundary of g(x) = ι^{x_i + x_j + x_i x_j}.
    """
    group = act.group
    W_t = space.transform_matrix(act.t)
    t_perm = act.t.permutation
    identity = np.eye(group.rank, dtype=np.int64)
    moved = {i for i in range(group.rank) if not np.array_equal(act.t.array[:, i], identity[:, i])}
    scale = modulus // 4
    labels, tables = [], []
    for k, (i, j) in enumerate(space.pairs):
        unit = np.zeros(space.dimension, dtype=np.int64)
        unit[k] = 1
        image = W_t @ unit % space.moduli
        s = space.half_table(unit, modulus)
        if not np.array_equal(image, unit):
            partner = int(np.nonzero(image)[0][0])
            if partner < k:
                continue
            labels.append(f"phi2.s{i + 1}{j + 1}")
            tables.append((s + s[np.ix_(t_perm, t_perm)]) % modulus)
        elif i not in moved and j not in moved:
            labels.append(f"s{i + 1}{j + 1}")
            tables.append(s)
        else:
            g = _swap_potential(group, i, j) * scale
            labels.append(f"s{i + 1}{j + 1}+dg")
            tables.append((s + coboundary(g, group, modulus)) % modulus)

    for label, table in zip(labels, tables, strict=True):
        if pullback_table(table, act.permutations, modulus).any():
            raise PreconditionError(f"Transversal cocycle {label} is not killed by φ_2")
    coords = [alternating_coords(antisymmetrize(table, modulus), group, modulus) for table in tables]
    alt = np.array(coords, dtype=np.int64).reshape(len(coords), space.dimension)
    return Transversal(tuple(labels), alt, tuple(tables), space)


# =============================================================================
# Symmetries acting on cocycles
# =============================================================================


@dataclass(frozen=True, eq=False)
class SymmetryMap:
    """s ↦ Σ_π s∘(π×π): a generator of G(⊳) acting on cocycles.

    A-generators use the single map λ; ω_k uses t^i∘λ_k^{-1} for i < k^{-1} mod p.
    """

    label: str
    endomorphisms: tuple[Endomorphism, ...]

    @cached_property
    def perms(self) -> tuple[np.ndarray, ...]:
        return tuple(e.permutation for e in self.endomorphisms)

    @cached_property
    def char_matrix(self) -> np.ndarray:
        group = self.endomorphisms[0].group
        total = sum(e.dual().array for e in self.endomorphisms)
        return total % group.orders_array[:, None] if group.rank else total

    def alt_matrix(self, space: AltSpace) -> np.ndarray:
        total = sum(space.transform_matrix(e) for e in self.endomorphisms)
        return total % space.moduli[:, None] if space.dimension else total

    def apply_table(self, table: np.ndarray, modulus: int) -> np.ndarray:
        return pullback_table(table, self.perms, modulus)


def symmetry_maps(action_class: ActionClass) -> tuple[list[SymmetryMap], int]:
    """Generator maps of G(⊳) and how many of them come from A(⊳)."""
    act = action_class.representative
    maps = [SymmetryMap(f"a{n}", (lam,)) for n, lam in enumerate(action_class.symmetry.a_generators)]
    if not maps:
        maps.append(SymmetryMap("a0", (Endomorphism.identity(act.group),)))
    a_count = len(maps)
    omega = action_class.symmetry.omega_generator(act.p)
    if omega is not None:
        k, lam = omega
        l = pow(k, -1, act.p)
        mu = lam.inverse()
        maps.append(SymmetryMap(f"omega{k}", tuple(act.powers[i].compose(mu) for i in range(l))))
    return maps, a_count


# =============================================================================
# Classifying group
# =============================================================================


@dataclass(frozen=True)
class ClassifyingElement:
    """A point of X(⊳): coset of characters plus alternating/transversal part."""

    index: int
    char_coords: tuple[int, ...]
    alt_coords: tuple[int, ...]

    @property
    def is_cocommutative(self) -> bool:
        return not any(self.alt_coords)


@dataclass(eq=False)
class ClassifyingGroup:
    """X(⊳) with every symmetry generator stored as a permutation of its points.

    Point index = char_position·alt_size + alt_position, which is the
    lexicographic order of (character coordinates, alternating coordinates).
    """

    action_class: ActionClass
    carrier: CarrierKind
    quotient: CharQuotient
    alt: AltSubgroup
    transversal: Transversal | None
    maps: list[SymmetryMap]
    a_count: int
    generators: list[np.ndarray] = field(default_factory=list)

    @property
    def act(self) -> CpAction:
        return self.action_class.representative

    @property
    def group(self) -> AbelianGroup:
        return self.act.group

    @property
    def modulus(self) -> int:
        return cocycle_modulus(self.group, self.act.p)

    @property
    def alt_size(self) -> int:
        if self.transversal is not None:
            return 2**self.transversal.size
        if self.carrier is CarrierKind.CHARACTERS_ONLY:
            return 1
        return self.alt.order

    @property
    def order(self) -> int:
        return self.quotient.order * self.alt_size

    @property
    def a_generators(self) -> list[np.ndarray]:
        return self.generators[: self.a_count]

    def split(self, index: int) -> tuple[int, int]:
        return divmod(int(index), self.alt_size)

    def alt_is_zero(self, index: int) -> bool:
        return self.split(index)[1] == 0

    @cached_property
    def alt_zero_mask(self) -> np.ndarray:
        return (np.arange(self.order) % self.alt_size) == 0

    def alt_part(self, alt_position: int) -> np.ndarray:
        if self.transversal is not None:
            return self.transversal.bits[alt_position]
        if self.carrier is CarrierKind.CHARACTERS_ONLY:
            return np.zeros(0, dtype=np.int64)
        return self.alt.elements[alt_position]

    def element(self, index: int) -> ClassifyingElement:
        q, a = self.split(index)
        return ClassifyingElement(
            int(index),
            tuple(int(c) for c in self.quotient.lift(q)),
            tuple(int(c) for c in self.alt_part(a)),
        )

    def index_of(self, char_position: int, alt_position: int) -> int:
        return char_position * self.alt_size + alt_position

    # -- cocycles -------------------------------------------------------------

    def char_cocycle(self, char_position: int) -> np.ndarray:
        f = coboundary_preimage(self.act, self.quotient.lift(char_position))
        return coboundary(f, self.group, self.modulus)

    def alt_cocycle(self, alt_position: int) -> np.ndarray:
        M = self.modulus
        if self.transversal is not None:
            return self.transversal.table_of(self.transversal.bits[alt_position], M)
        if self.carrier is CarrierKind.CHARACTERS_ONLY:
            return np.zeros((self.group.order, self.group.order), dtype=np.int64)
        space = self.alt.space
        return space.table(half_coords(self.alt.elements[alt_position], space), M)

    def representative_cocycle(self, index: int) -> np.ndarray:
        """τ(t) for a point of X: δf_χ plus the alternating representative."""
        q, a = self.split(index)
        return (self.char_cocycle(q) + self.alt_cocycle(a)) % self.modulus

    def classify_cocycle(self, table: np.ndarray) -> int:
        """Point of X holding the class of τ(t) ∈ Z²_N."""
        M = self.modulus
        table = np.asarray(table, dtype=np.int64) % M
        alt = alternating_coords(antisymmetrize(table, M), self.group, M)
        if self.transversal is not None:
            a = self.transversal.position_of(alt)
        elif self.carrier is CarrierKind.CHARACTERS_ONLY:
            if alt.any():
                raise PreconditionError("Cocycle has an alternating part but Alt_N is trivial")
            a = 0
        else:
            a = int(self.alt.positions(alt)[0])
        symmetric = (table - self.alt_cocycle(a)) % M
        q = self.quotient.position(phi_of_cocycle(self.act, symmetric))
        return self.index_of(q, a)

    # -- group law --------------------------------------------------------------

    @cached_property
    def carry_chars(self) -> np.ndarray:
        """Φ(2σ_w) per transversal element."""
        if self.transversal is None:
            return np.zeros((0, self.group.rank), dtype=np.int64)
        M = self.modulus
        return np.array(
            [phi_of_cocycle(self.act, (2 * table) % M) for table in self.transversal.tables],
            dtype=np.int64,
        ).reshape(self.transversal.size, self.group.rank)

    def add(self, first: int, second: int) -> int:
        q1, a1 = self.split(first)
        q2, a2 = self.split(second)
        chi = self.quotient.lift(q1) + self.quotient.lift(q2)
        if self.transversal is not None:
            e1, e2 = self.transversal.bits[a1], self.transversal.bits[a2]
            carries = (e1 + e2) // 2
            chi = chi + carries @ self.carry_chars
            summed = (e1 + e2) % 2
            a = int(summed @ (2 ** np.arange(self.transversal.size)[::-1])) if summed.size else 0
        elif self.carrier is CarrierKind.CHARACTERS_ONLY:
            a = 0
        else:
            coords = self.alt.elements[a1] + self.alt.elements[a2]
            a = int(self.alt.positions(coords % self.alt.space.moduli)[0])
        q = self.quotient.position(chi % self.group.orders_array)
        return self.index_of(q, a)

    def element_order(self, index: int) -> int:
        q, a = self.split(index)
        if self.transversal is None:
            alt_order = self.alt.element_order(a) if self.carrier is CarrierKind.DIRECT_PRODUCT else 1
            return math.lcm(self.quotient.element_order(q), alt_order)
        current, n = index, 1
        while current != 0:
            current = self.add(current, index)
            n += 1
        return n

    def invariants(self) -> list[int]:
        """Prime-power orders of the cyclic factors of X."""
        if self.transversal is None:
            orders = Counter(self.quotient.element_order(q) for q in range(self.quotient.order))
            if self.carrier is CarrierKind.DIRECT_PRODUCT:
                alt_orders = Counter(self.alt.element_order(a) for a in range(self.alt.order))
                return sorted(invariants_from_orders(orders) + invariants_from_orders(alt_orders))
            return invariants_from_orders(orders)
        if self.order > MAX_CARRIER_ORDER // 16:
            raise BudgetExceededError("carrier invariants", self.order, MAX_CARRIER_ORDER // 16)
        return invariants_from_orders(Counter(self.element_order(i) for i in range(self.order)))

    def descriptor(self) -> str:
        invariants = self.invariants()
        return AbelianGroup.from_orders(invariants).descriptor if invariants else "Z1"

    # -- generator images -------------------------------------------------------

    def _direct_permutation(self, gen: SymmetryMap) -> np.ndarray:
        q_perm = self.quotient.transform(gen.char_matrix)
        if self.carrier is CarrierKind.CHARACTERS_ONLY:
            return q_perm
        a_perm = self.alt.transform(gen.alt_matrix(self.alt.space))
        return np.add.outer(q_perm * self.alt_size, a_perm).reshape(-1)

    def transversal_action(self, gen: SymmetryMap) -> tuple[np.ndarray, np.ndarray]:
        """(C, K): g·σ_v = Σ_w C[w, v]·σ_w + δf with Φ(δf) = K[v]."""
        trans = self.transversal
        if trans is None:
            raise PreconditionError("Carrier has no transversal")
        M = self.modulus
        images = [gen.apply_table(table, M) for table in trans.tables]
        C = np.zeros((trans.size, trans.size), dtype=np.int64)
        for v, image in enumerate(images):
            alt = alternating_coords(antisymmetrize(image, M), self.group, M)
            C[:, v] = trans.bits[trans.position_of(alt)]
        cross = np.array(
            [
                phi_of_cocycle(self.act, (images[v] - trans.table_of(C[:, v], M)) % M)
                for v in range(trans.size)
            ],
            dtype=np.int64,
        ).reshape(trans.size, self.group.rank)
        return C, cross

    def _transversal_permutation(self, gen: SymmetryMap) -> np.ndarray:
        trans = self.transversal
        C, cross = self.transversal_action(gen)
        chars = (self.quotient.rep_coords @ gen.char_matrix.T) % self.group.orders_array
        weights = 2 ** np.arange(trans.size)[::-1]
        perm = np.empty(self.order, dtype=np.int64)
        for a, e in enumerate(trans.bits):
            n = C @ e
            shift = e @ cross + (n // 2) @ self.carry_chars
            q_image = self.quotient.positions((chars + shift) % self.group.orders_array)
            a_image = int((n % 2) @ weights) if trans.size else 0
            perm[np.arange(self.quotient.order) * self.alt_size + a] = q_image * self.alt_size + a_image
        return perm

    def build_generators(self) -> None:
        for gen in self.maps:
            if self.transversal is None:
                perm = self._direct_permutation(gen)
            else:
                perm = self._transversal_permutation(gen)
            self.generators.append(perm)

    def action_tables(self) -> dict[str, dict[int, int]]:
        """Image of each X-generator point under each symmetry generator."""
        points = self.generator_points()
        return {
            gen.label: {int(x): int(perm[x]) for x in points}
            for gen, perm in zip(self.maps, self.generators, strict=True)
        }

    def generator_points(self) -> list[int]:
        """A greedy generating set of X, least points first."""
        if self.order > MAX_CARRIER_ORDER // 16:
            raise BudgetExceededError("generator search", self.order, MAX_CARRIER_ORDER // 16)
        span = {0}
        chosen = []
        for x in range(self.order):
            if x in span:
                continue
            chosen.append(x)
            multiples = [x]
            while (nxt := self.add(multiples[-1], x)) != 0:
                multiples.append(nxt)
            span |= {self.add(s, m) for s in span for m in multiples}
            if len(span) == self.order:
                break
        return chosen


def invariants_from_orders(orders: Counter) -> list[int]:
    """Cyclic factor orders of a finite abelian group from its element-order census."""
    result: list[int] = []
    for q in sorted({prime for order in orders for prime in factorint(order)}):
        killed = [sum(c for o, c in orders.items() if o % q)]
        k = 1
        while True:
            killed.append(sum(c for o, c in orders.items() if (q**k) % _q_part(o, q) == 0))
            if killed[-1] == killed[-2]:
                break
            k += 1
        # ranks[k] = number of factors of order at least q^(k+1)
        ranks = [round(math.log(killed[k] // killed[k - 1], q)) for k in range(1, len(killed))]
        for k, rank in enumerate(ranks):
            above = ranks[k + 1] if k + 1 < len(ranks) else 0
            result.extend([q ** (k + 1)] * (rank - above))
    return sorted(result)


def _q_part(order: int, q: int) -> int:
    part = 1
    while order % q == 0:
        order //= q
        part *= q
    return part


def choose_carrier(act: CpAction, alt: AltSubgroup) -> CarrierKind:
    group = act.group
    if alt.order == 1:
        return CarrierKind.CHARACTERS_ONLY
    if group.order % 2:
        return CarrierKind.DIRECT_PRODUCT
    if act.is_trivial:
        return CarrierKind.P2_TRIVIAL
    if group.is_p_group(2) and group.is_elementary(2):
        return CarrierKind.P2_ELEMENTARY
    raise UnsupportedInputError(
        f"No carrier for a nontrivial C_2-action on the non-elementary 2-group {group}"
    )


def build_X(action_class: ActionClass) -> ClassifyingGroup:
    """X(⊳) with its symmetry generators as permutation arrays.

    Raises:
        UnsupportedInputError: For p = 2 outside the trivial and elementary cases
        BudgetExceededError: If |X| exceeds the carrier budget
    """
    act = action_class.representative
    _, _, quotient = fixed_and_norm(act)
    alt = alt_N(act)
    carrier = choose_carrier(act, alt)
    M = cocycle_modulus(act.group, act.p)

    transversal = None
    if carrier is CarrierKind.P2_TRIVIAL:
        transversal = trivial_transversal(act, alt.space, M)
    elif carrier is CarrierKind.P2_ELEMENTARY:
        transversal = elementary_transversal(act, alt.space, M)

    maps, a_count = symmetry_maps(action_class)
    X = ClassifyingGroup(action_class, carrier, quotient, alt, transversal, maps, a_count)
    if X.order > MAX_CARRIER_ORDER:
        raise BudgetExceededError("classifying group", X.order, MAX_CARRIER_ORDER)
    X.build_generators()
    logger.info(
        f"X({action_class.label}) on {act.group}: carrier={carrier}, |Q|={quotient.order}, "
        f"alt={X.alt_size}, |X|={X.order}"
    )
    return X


def p2_carrier(action_class: ActionClass) -> ClassifyingGroup:
    """The transversal model of X for p = 2 on an elementary 2-group.

    Raises:
        UnsupportedInputError: If G is not an elementary 2-group
    """
    group = action_class.representative.group
    if action_class.representative.p != 2 or not (group.is_p_group(2) and group.is_elementary(2)):
        raise UnsupportedInputError("p2_carrier needs p = 2 and an elementary 2-group")
    return build_X(action_class)


__all__ = [
    "CharQuotient",
    "AltSubgroup",
    "Transversal",
    "SymmetryMap",
    "ClassifyingElement",
    "ClassifyingGroup",
    "cocycle_modulus",
    "coboundary",
    "pullback_table",
    "fixed_and_norm",
    "coboundary_preimage",
    "recover_potential",
    "phi_of_cocycle",
    "alt_N",
    "half_coords",
    "trivial_transversal",
    "elementary_transversal",
    "symmetry_maps",
    "build_X",
    "p2_carrier",
    "choose_carrier",
]
