"""The dual of H(e*∧f*, ⊳) for the regular C_p-action on Z_p × Z_p.

H contains the normal Hopf subalgebra k⟨e*⟩ with quotient kḠ, Ḡ = ⟨x, y⟩,
x = image of f*, y = image of t. The section γ(x^i y^j) = f*^i T^j with
T = u·t, u = Σ ζ_p^{-ij} p_{(i,j)}, gives the cocycle
τ'(a, b) = γ(a)γ(b)γ(ab)^{-1} ∈ ⟨e*⟩, read on C_p through e*(t) = ζ_p. Its
class in X(⊳) is the class of the dual Hopf algebra.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np
from sympy.ntheory.residue_ntheory import legendre_symbol

from hopfext.actions import ActionClass
from hopfext.algebra.forms import alternating_coords, antisymmetrize
from hopfext.classifying import ClassifyingGroup, build_X, phi_of_cocycle
from hopfext.constants import ActionFamily
from hopfext.hopf.builder import HopfStructure, build_from_cocycle
from hopfext.models.schemas import AxiomViolationError, DualityResult, PreconditionError
from hopfext.orbits import same_orbit

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class Monomial:
    """h·t^power with h: G → μ_M given by exponents."""

    exps: np.ndarray
    power: int

    def times(self, other: Monomial, H: HopfStructure) -> Monomial:
        # (h1 t^i)(h2 t^j) = (h1 · h2∘t^i) t^{i+j}
        perm = H.act.permutations[self.power]
        return Monomial((self.exps + other.exps[perm]) % H.modulus, (self.power + other.power) % H.p)

    def element(self, H: HopfStructure):
        return H.element(H.unit_indices + self.power * H.group.order, self.exps)


def _check_family(action_class: ActionClass) -> None:
    act = action_class.representative
    group = act.group
    p = act.p
    if p == 2 or group.cyclic_orders != (p, p) or action_class.family is not ActionFamily.ELEMENTARY_REGULAR:
        raise PreconditionError("Duality recipe needs the regular action on Z_p x Z_p with p odd")


def e_wedge_f(X: ClassifyingGroup) -> np.ndarray:
    """The table of e*∧f*(a, b) = ζ_p^{a_1 b_2 - a_2 b_1} as exponents mod M."""
    return X.alt.space.table(np.array([1], dtype=np.int64), X.modulus)


def dual_cocycle_table(H: HopfStructure) -> np.ndarray:
    """τ'(t) on Ḡ ≅ G (x ↦ g_1, y ↦ g_2) as exponents mod M.

    Raises:
        AxiomViolationError: If T is not a section of the coaction or the
            commutation T f* = f* e* T fails in H
    """
    group = H.group
    p = H.p
    M = H.modulus
    unit = M // p
    coords = group.elements
    e_star = coords[:, 0] * unit % M
    f_star = coords[:, 1] * unit % M
    u = (-coords[:, 0] * coords[:, 1] * unit) % M

    tau_t = H.twist
    for b in range(group.order):
        b1, b2 = coords[b]
        shifted = group.indices(np.stack([np.full(p, b1), b2 + np.arange(p)], axis=1))
        fibre = group.indices(np.stack([np.zeros(p, dtype=np.int64), np.arange(p)], axis=1))
        if ((u[shifted] + tau_t[b, fibre] - u[b]) % M).any():
            raise AxiomViolationError(f"T = u·t is not a section of the coaction at p_{tuple(coords[b])}")

    F = Monomial(f_star, 0)
    T = Monomial(u, 1)
    kappa = next(
        (
            m
            for m in range(p)
            if H.multiply(T.element(H), F.element(H))
            == H.multiply(H.multiply(F.element(H), Monomial(m * e_star % M, 0).element(H)), T.element(H))
        ),
        None,
    )
    if kappa is None:
        raise AxiomViolationError("T f* T^-1 is not f* times a power of e*")
    logger.debug(f"T f* T^-1 = f* e*^{kappa}")

    one = Monomial(np.zeros(group.order, dtype=np.int64), 0)
    gammas = []
    for i, j in coords.tolist():
        g = one
        for _ in range(i):
            g = g.times(F, H)
        for _ in range(j):
            g = g.times(T, H)
        gammas.append(g)

    add = group.addition_table
    e_index = group.basis_indices()[0]
    table = np.zeros((group.order, group.order), dtype=np.int64)
    for a in range(group.order):
        for b in range(group.order):
            product = gammas[a].times(gammas[b], H)
            target = gammas[add[a, b]]
            if product.power != target.power:
                raise AxiomViolationError("γ(a)γ(b) and γ(ab) lie over different powers of t")
            ratio = (product.exps - target.exps) % M
            m = int(ratio[e_index]) // unit
            if not np.array_equal(ratio, m * e_star % M):
                raise AxiomViolationError("γ(a)γ(b)γ(ab)^-1 is not a power of e*")
            table[a, b] = m * unit
    return table


def dual_cocycle_p3(action_class: ActionClass, X: ClassifyingGroup | None = None) -> DualityResult:
    """Class of H(e*∧f*, ⊳)* in X(⊳), with the self-duality verdict.

    Raises:
        PreconditionError: Outside the regular action on Z_p x Z_p, p odd
    """
    _check_family(action_class)
    X = X or build_X(action_class)
    act = action_class.representative
    p = act.p
    M = X.modulus

    tau_t = e_wedge_f(X)
    point = X.classify_cocycle(tau_t)
    H = build_from_cocycle(act, tau_t, label=f"{action_class.label}-e*^f*")
    dual_tau = dual_cocycle_table(H)

    beta = alternating_coords(antisymmetrize(dual_tau, M), act.group, M)
    alt_position = int(X.alt.positions(beta)[0])
    symmetric = (dual_tau - X.alt_cocycle(alt_position)) % M
    in_ker_phi = not phi_of_cocycle(act, symmetric).any()
    dual_point = X.classify_cocycle(dual_tau)

    input_alt = np.array(X.element(point).alt_coords, dtype=np.int64)
    dual = X.element(dual_point)
    coefficient = int(dual.alt_coords[0] * pow(int(input_alt[0]), -1, p)) % p
    orbit = same_orbit(X, point, dual_point)
    result = DualityResult(
        prime=p,
        input_alt=input_alt.tolist(),
        dual_char=list(dual.char_coords),
        dual_alt=list(dual.alt_coords),
        coefficient=coefficient,
        coboundary_in_ker_phi=in_ker_phi,
        same_orbit=orbit,
        legendre=int(legendre_symbol(coefficient, p)),
        self_dual=orbit,
    )
    logger.info(f"p={p}: dual class = {coefficient}·(e*∧f*), self-dual={orbit}")
    return result


def scaled_point(X: ClassifyingGroup, point: int, factor: int) -> int:
    """The point factor·x in X."""
    result = 0
    for _ in range(factor % X.element_order(point)):
        result = X.add(result, point)
    return result


def duality_is_involutive(action_class: ActionClass, result: DualityResult, X: ClassifyingGroup | None = None) -> bool:
    """Dualizing twice lands in the orbit of the input: c²·x ~ x."""
    X = X or build_X(action_class)
    point = X.classify_cocycle(e_wedge_f(X))
    twice = scaled_point(X, point, result.coefficient**2)
    return same_orbit(X, point, twice)


__all__ = ["dual_cocycle_p3", "dual_cocycle_table", "duality_is_involutive", "e_wedge_f", "scaled_point"]
