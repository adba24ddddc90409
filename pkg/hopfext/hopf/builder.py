"""Structure constants of H(τ, ⊳) = k^G #_τ kC_p.

Basis element p_a t^i has index i·|G| + a. With σ ≡ 1:

    (p_a t^i)(p_b t^j) = [b = t^i(a)] p_a t^{i+j}
    Δ(p_a t^i) = Σ_b ζ^{τ_i(b, a-b)} p_b t^i ⊗ p_{a-b} t^i
    ε(p_a t^i) = [a = 0]
    S(p_a t^i) = ζ^{-τ_i(-a, a)} p_{t^i(-a)} t^{-i}

where ζ = ζ_M, M = p·exp(G), and τ_i = τ(t^i) comes from theta_expand.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, replace
from functools import cached_property

import numpy as np

from hopfext.actions import ActionClass, CpAction
from hopfext.algebra.cyclotomic import CyclotomicField
from hopfext.algebra.groups import AbelianGroup, Endomorphism
from hopfext.classifying import (
    ClassifyingElement,
    ClassifyingGroup,
    build_X,
    cocycle_modulus,
    recover_potential,
)
from hopfext.hopf.elements import Element
from hopfext.models.schemas import PreconditionError
from hopfext.oracle import theta_expand

logger = logging.getLogger(__name__)


@dataclass(eq=False)
class HopfStructure:
    """Complete tables of a Hopf algebra on the basis p_a t^i.

    mult[x, y] is the basis index of the product or -1 for zero. Row x of
    the comult arrays lists the terms ζ^exp · left ⊗ right of Δ(x).
    """

    group: AbelianGroup
    p: int
    t: Endomorphism
    modulus: int
    mult: np.ndarray
    comult_left: np.ndarray
    comult_right: np.ndarray
    comult_exp: np.ndarray
    antipode_target: np.ndarray
    antipode_exp: np.ndarray
    counit: np.ndarray
    twist: np.ndarray
    label: str = ""

    @property
    def dimension(self) -> int:
        return self.group.order * self.p

    @cached_property
    def act(self) -> CpAction:
        return CpAction(self.group, self.p, self.t)

    @cached_property
    def field(self) -> CyclotomicField:
        return CyclotomicField(self.modulus)

    def basis_index(self, a: int, i: int) -> int:
        return (i % self.p) * self.group.order + a

    def split(self, index: int) -> tuple[int, int]:
        """(a, i) for the basis element p_a t^i."""
        i, a = divmod(int(index), self.group.order)
        return a, i

    def basis_label(self, index: int) -> str:
        a, i = self.split(index)
        coords = ",".join(str(c) for c in self.group.element(a))
        return f"p({coords})" if i == 0 else f"p({coords})t^{i}"

    @property
    def unit_indices(self) -> np.ndarray:
        return np.arange(self.group.order, dtype=np.int64)

    def copy(self) -> HopfStructure:
        return replace(
            self,
            mult=self.mult.copy(),
            comult_left=self.comult_left.copy(),
            comult_right=self.comult_right.copy(),
            comult_exp=self.comult_exp.copy(),
            antipode_target=self.antipode_target.copy(),
            antipode_exp=self.antipode_exp.copy(),
            counit=self.counit.copy(),
            twist=self.twist.copy(),
        )

    def cocycle_tables(self) -> np.ndarray:
        """τ_i(b, c) read back from the comult table, shape (p, |G|, |G|)."""
        n = self.group.order
        add = self.group.addition_table
        tables = np.zeros((self.p, n, n), dtype=np.int64)
        for i in range(self.p):
            for a in range(n):
                row = self.basis_index(a, i)
                lefts = self.comult_left[row] % n
                tables[i, lefts, add[a][self.group.negation[lefts]]] = self.comult_exp[row]
        return tables

    # -- element arithmetic ---------------------------------------------------

    def element(self, basis, exponents=None) -> Element:
        basis = np.atleast_1d(np.asarray(basis, dtype=np.int64))
        exps = np.zeros(basis.size, dtype=np.int64) if exponents is None else exponents
        return Element.from_terms(self.field, basis, exps)

    def one(self) -> Element:
        return self.element(self.unit_indices)

    def multiply(self, x: Element, y: Element) -> Element:
        result = Element.zero(self.field)
        for bx, cx in x.coefficients.items():
            row = self.mult[bx]
            for by, cy in y.coefficients.items():
                target = int(row[by])
                if target >= 0:
                    result.add_term(target, self.field.mul(cx, cy))
        return result

    def power(self, x: Element, n: int) -> Element:
        result = self.one()
        for _ in range(n):
            result = self.multiply(result, x)
        return result

    def character(self, coords) -> Element:
        """Σ_a χ(a) p_a for the character with the given coordinates."""
        values = self.group.character_values(np.atleast_2d(coords), self.modulus)[0]
        return self.element(self.unit_indices, values)

    def t_element(self, i: int = 1) -> Element:
        return self.element(self.unit_indices + (i % self.p) * self.group.order)


# =============================================================================
# Building
# =============================================================================


def structure_tables(act: CpAction, expanded: np.ndarray) -> dict[str, np.ndarray]:
    """Mult, comult, antipode and counit arrays from τ(t^i) tables."""
    group = act.group
    n = group.order
    p = act.p
    dim = n * p
    M = cocycle_modulus(group, p)
    add = group.addition_table
    neg = group.negation
    perms = act.permutations

    idx = np.arange(dim, dtype=np.int64)
    power, point = idx // n, idx % n
    # y = p_b t^j multiplies x = p_a t^i nontrivially iff b = t^i(a)
    image = perms[power, point]
    same = image[:, None] == point[None, :]
    mult = np.where(same, ((power[:, None] + power[None, :]) % p) * n + point[:, None], -1)

    b = np.arange(n, dtype=np.int64)
    rest = add[point][:, neg[b]]  # a - b for each row
    comult_left = power[:, None] * n + b[None, :]
    comult_right = power[:, None] * n + rest
    comult_exp = expanded[power[:, None], b[None, :], rest] % M

    inverse_power = (-power) % p
    antipode_target = inverse_power * n + perms[power, neg[point]]
    antipode_exp = (-expanded[power, neg[point], point]) % M
    counit = (point == 0).astype(np.int64)
    return {
        "mult": mult.astype(np.int64),
        "comult_left": comult_left,
        "comult_right": comult_right,
        "comult_exp": comult_exp,
        "antipode_target": antipode_target,
        "antipode_exp": antipode_exp,
        "counit": counit,
    }


def build_from_cocycle(act: CpAction, tau_t: np.ndarray, label: str = "") -> HopfStructure:
    """H(τ, ⊳) for τ(t) ∈ Z²_N given as an exponent table mod p·exp(G).

    Raises:
        PreconditionError: If φ_p·τ(t) ≠ 0
    """
    M = cocycle_modulus(act.group, act.p)
    expanded = theta_expand(tau_t, act)
    tables = structure_tables(act, expanded)
    H = HopfStructure(
        group=act.group,
        p=act.p,
        t=act.t,
        modulus=M,
        twist=np.asarray(tau_t, dtype=np.int64) % M,
        label=label,
        **tables,
    )
    logger.debug(f"Built {label or 'H'}: dim {H.dimension}, ζ_{M}")
    return H


def build(
    action_class: ActionClass,
    x: ClassifyingElement | int,
    X: ClassifyingGroup | None = None,
) -> HopfStructure:
    """H(τ, ⊳) for the representative cocycle of a point of X(⊳)."""
    X = X or build_X(action_class)
    index = x.index if isinstance(x, ClassifyingElement) else int(x)
    if not 0 <= index < X.order:
        raise PreconditionError(f"Point {index} is outside X of order {X.order}")
    tau_t = X.representative_cocycle(index)
    return build_from_cocycle(action_class.representative, tau_t, label=f"{action_class.label}#{index}")


def group_algebra(act: CpAction) -> HopfStructure:
    """k[Ĝ ⋊ C_p]: the zero class."""
    n = act.group.order
    return build_from_cocycle(act, np.zeros((n, n), dtype=np.int64), label="group-algebra")


# =============================================================================
# Invariants
# =============================================================================


def grouplike_count(H: HopfStructure) -> int:
    """|G(H)|: solutions of Δ(h) = h ⊗ h.

    f·t^i is grouplike iff τ_i = δf, so each i with τ_i a coboundary
    contributes |Ĝ| grouplikes.
    """
    group = H.group
    W = H.modulus * group.exponent
    tables = H.cocycle_tables()
    count = 0
    for i in range(H.p):
        try:
            recover_potential(group, (tables[i] % H.modulus) * group.exponent, W)
        except PreconditionError:
            continue
        count += group.order
    return count


def antipode_squared_is_identity(H: HopfStructure) -> bool:
    target = H.antipode_target[H.antipode_target]
    exps = (H.antipode_exp + H.antipode_exp[H.antipode_target]) % H.modulus
    return bool(np.array_equal(target, np.arange(H.dimension)) and not exps.any())


__all__ = [
    "HopfStructure",
    "structure_tables",
    "build_from_cocycle",
    "build",
    "group_algebra",
    "grouplike_count",
    "antipode_squared_is_identity",
]
