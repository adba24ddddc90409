"""Independent lattice computations of Z², Z²_N, ker Φ and H²_c.

Every condition is linear in additive exponents, so each set is the kernel
of one integer matrix over a residue ring and is solved by kernel_mod. The
results cross-check the orders of X(⊳) built by the classifying module.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass

import numpy as np

from hopfext.actions import ActionClass, CpAction, catalog_actions
from hopfext.algebra.groups import AbelianGroup, Endomorphism, abelian_groups, parse_group
from hopfext.algebra.lattice import KernelLattice, kernel_mod
from hopfext.classifying import (
    build_X,
    cocycle_modulus,
    pullback_table,
)
from hopfext.config import MAX_ORACLE_ORDER
from hopfext.models.schemas import (
    AxiomViolationError,
    BudgetExceededError,
    OracleReport,
    PreconditionError,
    SectionSearchResult,
    UnsupportedInputError,
)

logger = logging.getLogger(__name__)


# =============================================================================
# Cocycle tables
# =============================================================================


@dataclass(frozen=True, eq=False)
class CocycleTable:
    """A function G × G → μ_m stored as exponents."""

    group: AbelianGroup
    modulus: int
    values: np.ndarray

    @classmethod
    def zero(cls, group: AbelianGroup, modulus: int) -> CocycleTable:
        return cls(group, modulus, np.zeros((group.order, group.order), dtype=np.int64))

    def is_normalized(self) -> bool:
        return not (self.values[0, :] % self.modulus).any() and not (self.values[:, 0] % self.modulus).any()

    def is_cocycle(self) -> bool:
        return cocycle_identity_ok(self.values, self.group, self.modulus)

    def antisymmetrized(self) -> np.ndarray:
        return (self.values - self.values.T) % self.modulus


def cocycle_identity_ok(table: np.ndarray, group: AbelianGroup, modulus: int) -> bool:
    """τ(a, b+c) + τ(b, c) = τ(a+b, c) + τ(a, b) for all triples."""
    add = group.addition_table
    t = np.asarray(table, dtype=np.int64)
    left = t[np.arange(group.order)[:, None, None], add[None, :, :]] + t[None, :, :]
    right = t[add[:, :, None], np.arange(group.order)[None, None, :]] + t[:, :, None]
    return not ((left - right) % modulus).any()


def _check_budget(group: AbelianGroup) -> None:
    if group.order > MAX_ORACLE_ORDER:
        raise BudgetExceededError("oracle group order", group.order, MAX_ORACLE_ORDER)


def cocycle_rows(group: AbelianGroup, full: bool = False) -> np.ndarray:
    """One row per triple (a, b, c) of the 2-cocycle identity; columns are pairs.

    With full=False the third argument runs over 0 and the basis, which
    already forces the identity for every c.
    """
    n = group.order
    add = group.addition_table
    thirds = range(n) if full else [0, *group.basis_indices()]
    rows = []
    for a, b, c in itertools.product(range(n), range(n), thirds):
        row = np.zeros(n * n, dtype=np.int64)
        row[a * n + add[b, c]] += 1
        row[b * n + c] += 1
        row[add[a, b] * n + c] -= 1
        row[a * n + b] -= 1
        rows.append(row)
    return np.array(rows, dtype=np.int64).reshape(len(rows), n * n)


def normalization_rows(group: AbelianGroup) -> np.ndarray:
    n = group.order
    rows = []
    for a in range(n):
        for col in {a, a * n}:
            row = np.zeros(n * n, dtype=np.int64)
            row[col] = 1
            rows.append(row)
    return np.array(rows, dtype=np.int64).reshape(len(rows), n * n)


def z2_group(
    group: AbelianGroup, modulus: int, *, full: bool = False, normalized: bool = False
) -> KernelLattice:
    """Z²(G, μ_m) as a lattice of tables; normalized restricts to τ(0,·) = τ(·,0) = 0."""
    _check_budget(group)
    rows = cocycle_rows(group, full)
    if normalized:
        rows = np.vstack([rows, normalization_rows(group)])
    lattice = kernel_mod(rows, modulus, modulus=modulus)
    logger.debug(f"|Z²({group}, μ_{modulus})| = {lattice.order}")
    return lattice


def _norm_rows(act: CpAction) -> np.ndarray:
    """φ_p on pair-indexed tables: Σ_i τ(t^i a, t^i b)."""
    n = act.group.order
    rows = np.zeros((n * n, n * n), dtype=np.int64)
    for perm in act.permutations:
        for a in range(n):
            for b in range(n):
                rows[a * n + b, perm[a] * n + perm[b]] += 1
    return rows


@dataclass(frozen=True)
class CohomologyOrders:
    z2n: int
    b2n: int
    ker_phi: int
    h2c: int


def z2N_and_kerPhi(act: CpAction, modulus: int | None = None) -> CohomologyOrders:
    """|Z²_N|, |B²_N|, |ker Φ| and |H²_c| = |Z²_N| / |ker Φ| by lattice algebra.

    Coboundaries are counted through potentials f: G → Z/(m·exp(G)) with
    f(0) = 0, modulo the characters that have the same coboundary.
    """
    group = act.group
    _check_budget(group)
    m = modulus or cocycle_modulus(group, act.p)
    n = group.order
    E = group.exponent
    W = m * E

    z_rows = np.vstack([cocycle_rows(group), normalization_rows(group), _norm_rows(act)])
    z2n = kernel_mod(z_rows, m, modulus=m).order

    add = group.addition_table
    delta = np.zeros((n * n, n), dtype=np.int64)
    for a in range(n):
        for b in range(n):
            delta[a * n + b, a] += 1
            delta[a * n + b, b] += 1
            delta[a * n + b, add[a, b]] -= 1
    origin = np.zeros((1, n), dtype=np.int64)
    origin[0, 0] = 1
    phi = np.zeros((n, n), dtype=np.int64)
    for perm in act.permutations:
        phi[np.arange(n), perm] += 1

    base_rows = [delta, origin]
    base_moduli = [np.full(n * n, E), [W]]

    ker_lattice = kernel_mod(
        np.vstack([*base_rows, phi]),
        np.concatenate([*base_moduli, np.full(n, W)]),
        modulus=W,
    )
    b2_lattice = kernel_mod(
        np.vstack([*base_rows, delta @ phi]),
        np.concatenate([*base_moduli, np.full(n * n, W)]),
        modulus=W,
    )

    chars = group.elements
    killed = ~((chars @ act.norm_dual.T) % group.orders_array).any(axis=1)
    ker_phi = ker_lattice.order // int(killed.sum())
    b2n = b2_lattice.order // group.order
    h2c = z2n // ker_phi
    logger.debug(f"Z²_N={z2n} B²_N={b2n} kerΦ={ker_phi} H²_c={h2c}")
    return CohomologyOrders(z2n=z2n, b2n=b2n, ker_phi=ker_phi, h2c=h2c)


def oracle_report(action_class: ActionClass, modulus: int | None = None) -> OracleReport:
    """Lattice orders for one class, compared with |X(⊳)|."""
    act = action_class.representative
    orders = z2N_and_kerPhi(act, modulus)
    X = build_X(action_class)
    return OracleReport(
        group=act.group.descriptor,
        prime=act.p,
        family=str(action_class.family),
        label=action_class.label,
        modulus=modulus or cocycle_modulus(act.group, act.p),
        z2n_order=orders.z2n,
        b2n_order=orders.b2n,
        ker_phi_order=orders.ker_phi,
        h2c_order=orders.h2c,
        x_order=X.order,
        matches=orders.h2c == X.order,
    )


SWEEP_PRIMES = (2, 3)


def oracle_sweep(max_order: int | None = None, primes: tuple[int, ...] = SWEEP_PRIMES) -> list[OracleReport]:
    """Oracle reports for every cataloged class on every abelian group up to `max_order`.

    Each group is paired with the primes in `primes` that do not exceed its
    smallest prime divisor. Groups outside the action catalog contribute their
    trivial class; classes without a classifying-group model are skipped.

    Raises:
        BudgetExceededError: If max_order exceeds MAX_ORACLE_ORDER
    """
    max_order = max_order or MAX_ORACLE_ORDER
    if max_order > MAX_ORACLE_ORDER:
        raise BudgetExceededError("oracle sweep order", max_order, MAX_ORACLE_ORDER)
    reports = []
    for order in range(2, max_order + 1):
        for group in abelian_groups(order):
            for p in primes:
                if p > group.smallest_prime:
                    continue
                try:
                    classes = catalog_actions(group, p)
                except UnsupportedInputError:
                    classes = catalog_actions(group, p, include_nontrivial=False)
                for action_class in classes:
                    try:
                        reports.append(oracle_report(action_class))
                    except UnsupportedInputError as e:
                        logger.info(f"Skipping {action_class.label} on {group}: {e}")
    logger.debug(f"Oracle sweep up to order {max_order}: {len(reports)} classes")
    return reports


# =============================================================================
# Hopf cocycles
# =============================================================================


def theta_expand(tau_t: np.ndarray, act: CpAction) -> np.ndarray:
    """τ(t^i) = φ_i·τ(t) for i < p, as a (p, |G|, |G|) array.

    Raises:
        PreconditionError: If φ_p·τ(t) ≠ 0
        AxiomViolationError: If the expansion fails the Hopf cocycle identity
    """
    group = act.group
    M = cocycle_modulus(group, act.p)
    tau_t = np.asarray(tau_t, dtype=np.int64) % M
    if pullback_table(tau_t, act.permutations, M).any():
        raise PreconditionError("τ(t) is not killed by φ_p")
    expanded = np.zeros((act.p, group.order, group.order), dtype=np.int64)
    for i in range(1, act.p):
        expanded[i] = pullback_table(tau_t, act.permutations[:i], M)
    if not hopf_cocycle_ok(expanded, act):
        raise AxiomViolationError("Expanded table fails τ(xy) = τ(x) + x·τ(y)")
    return expanded


def hopf_cocycle_ok(expanded: np.ndarray, act: CpAction) -> bool:
    """τ(t^{i+j}) = τ(t^i) + t^i·τ(t^j) for all i, j, and each τ(t^i) a cocycle."""
    group = act.group
    M = cocycle_modulus(group, act.p)
    p = act.p
    for i in range(p):
        if not cocycle_identity_ok(expanded[i], group, M):
            return False
        for j in range(p):
            moved = pullback_table(expanded[j], [act.permutations[i]], M)
            if ((expanded[(i + j) % p] - expanded[i] - moved) % M).any():
                return False
    return True


def theta(expanded: np.ndarray) -> np.ndarray:
    """Θ: a Hopf cocycle ↦ its value at t."""
    return expanded[1]


# =============================================================================
# Special functions on elementary 2-groups
# =============================================================================


def special_functions(group: AbelianGroup, pair: int) -> tuple[np.ndarray, np.ndarray]:
    """(f_i, g_i) for the swapped pair i as exponents mod 4.

    g_i(x) = ι^{j1 + j2 + j1 j2} and f_i = g_i², with (j1, j2) the pair's coordinates.
    """
    X = group.elements
    j1, j2 = X[:, 2 * pair], X[:, 2 * pair + 1]
    g = (j1 + j2 + j1 * j2) % 4
    return (2 * g) % 4, g


def special_function_identities(n: int) -> bool:
    """f_i² = 1, t·g_i = g_i and g_i² = f_i on Z_2^n with every pair swapped."""
    group = AbelianGroup((2,) * n)
    swap = np.eye(n, dtype=np.int64)
    for i in range(n // 2):
        swap[:, [2 * i, 2 * i + 1]] = swap[:, [2 * i + 1, 2 * i]]
    t_perm = Endomorphism.from_array(group, swap).permutation
    for i in range(n // 2):
        f, g = special_functions(group, i)
        if ((2 * f) % 4).any():
            return False
        if not np.array_equal(g[t_perm], g):
            return False
        if not np.array_equal((2 * g) % 4, f):
            return False
    return True


# =============================================================================
# Equivariant sections on Z_2^n
# =============================================================================


def _section_system(n: int):
    group = AbelianGroup((2,) * n)
    trivial = catalog_actions(group, 2, include_nontrivial=False)[0]
    X = build_X(trivial)
    trans = X.transversal
    r = trans.size
    blocks = []
    for gen in X.maps:
        C, K = X.transversal_action(gen)
        D = gen.char_matrix % 2
        blocks.append((D, C % 2, K % 2))
    return group, trans, blocks


def _equations(n: int, r: int, blocks) -> tuple[np.ndarray, np.ndarray]:
    """A·x = b over F_2 with x = (χ_1, ..., χ_r) stacked."""
    rows, rhs = [], []
    for D, C, K in blocks:
        for v in range(r):
            for i in range(n):
                row = np.zeros(n * r, dtype=np.int64)
                row[v * n : (v + 1) * n] += D[i]
                for w in range(r):
                    if C[w, v]:
                        row[w * n + i] -= 1
                rows.append(row % 2)
                rhs.append(int(K[v, i]))
    return np.array(rows, dtype=np.int64).reshape(len(rows), n * r), np.array(rhs, dtype=np.int64)


def section_search(n: int, brute_force: bool | None = None) -> SectionSearchResult:
    """Search for an Aut(Z_2^n)-equivariant section of H²_c → a(Z²_N).

    The section is ζ(x_i*∧x_j*) = χ_ij + s⟨i,j⟩; equivariance under every
    transvection is an affine system over F_2 in the χ_ij, solved through
    the kernel of its homogenized matrix. Inconsistency is the certificate
    that no section exists.

    Raises:
        BudgetExceededError: For n > 4
    """
    if n < 1:
        raise PreconditionError(f"Rank must be positive, got {n}")
    r = n * (n - 1) // 2
    if n > 4:
        raise BudgetExceededError("section search", 2 ** (n * r), 2**24)
    if n == 1:
        return SectionSearchResult(
            rank=1, found=True, section={}, certificate="Alt(Z_2) = 0", brute_force_agrees=True
        )

    _, trans, blocks = _section_system(n)
    A, b = _equations(n, r, blocks)
    homogeneous = np.hstack([A, b[:, None]])
    lattice = kernel_mod(homogeneous, 2, modulus=2)
    witness = next((gen for gen in lattice.generators if gen[-1] % 2), None)

    section = None
    if witness is not None:
        x = witness[:-1] % 2
        section = {}
        for v, label in enumerate(_pair_labels(trans)):
            section[label] = [int(c) for c in x[v * n : (v + 1) * n]]

    found = witness is not None
    certificate = (
        f"{A.shape[0]} equations in {A.shape[1]} unknowns over F_2: "
        f"{'consistent' if found else 'inconsistent'}, homogeneous kernel rank {len(lattice.orders)}"
    )
    agrees = None
    if brute_force or (brute_force is None and n <= 3):
        agrees = _brute_force_section(A, b) == found
    logger.info(f"section search n={n}: found={found}")
    return SectionSearchResult(
        rank=n,
        found=found,
        section=section,
        unknowns=A.shape[1],
        equations=A.shape[0],
        certificate=certificate,
        brute_force_agrees=agrees,
    )


def _pair_labels(trans) -> list[str]:
    moduli = trans.space.moduli.tolist()
    pairs = [pair for pair, d in zip(trans.space.pairs, moduli, strict=True) if d % 2 == 0]
    return [f"{i + 1},{j + 1}" for i, j in pairs]


def _brute_force_section(A: np.ndarray, b: np.ndarray) -> bool:
    for bits in itertools.product(range(2), repeat=A.shape[1]):
        if not ((A @ np.array(bits, dtype=np.int64) - b) % 2).any():
            return True
    return False


def section_solutions(n: int) -> list[dict[str, list[int]]]:
    """Every equivariant section, by exhaustive search (n ≤ 3)."""
    if n > 3:
        raise BudgetExceededError("exhaustive section enumeration", 2 ** (n * n * (n - 1) // 2), 2**9)
    if n == 1:
        return [{}]
    _, trans, blocks = _section_system(n)
    r = n * (n - 1) // 2
    A, b = _equations(n, r, blocks)
    labels = _pair_labels(trans)
    found = []
    for bits in itertools.product(range(2), repeat=A.shape[1]):
        x = np.array(bits, dtype=np.int64)
        if not ((A @ x - b) % 2).any():
            found.append({label: [int(c) for c in x[v * n : (v + 1) * n]] for v, label in enumerate(labels)})
    return found


__all__ = [
    "CocycleTable",
    "CohomologyOrders",
    "cocycle_identity_ok",
    "cocycle_rows",
    "z2_group",
    "z2N_and_kerPhi",
    "oracle_report",
    "oracle_sweep",
    "SWEEP_PRIMES",
    "theta_expand",
    "theta",
    "hopf_cocycle_ok",
    "special_functions",
    "special_function_identities",
    "section_search",
    "section_solutions",
]
