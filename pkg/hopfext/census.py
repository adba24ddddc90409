"""Isotype counts: full classifications, closed-formula checks and scans."""

from __future__ import annotations

import logging

import numpy as np
import sympy
from sympy import divisor_count, isprime

from hopfext.actions import ActionClass, catalog_actions, is_two_n_group, two_n_side
from hopfext.algebra.groups import AbelianGroup
from hopfext.classifying import ClassifyingGroup, build_X
from hopfext.config import DEFAULT_SEED
from hopfext.constants import ActionFamily, SummaryBlock
from hopfext.models.schemas import (
    ClassificationReport,
    PreconditionError,
    ScanResult,
    SummaryValue,
)
from hopfext.orbits import orbit_labels, orbits

logger = logging.getLogger(__name__)


# =============================================================================
# Expected values
# =============================================================================


def expected_dim_p3(p: int) -> int:
    return p + 1


def expected_p4_split(p: int) -> int:
    return 2 * p + 8


def expected_p4_uniserial(p: int) -> int:
    return 3 if p == 3 else p + 7


def expected_p4_mixed(p: int) -> int:
    return 16 if p == 3 else 2 * p + 8


def expected_p4_total(p: int) -> int:
    return 33 if p == 3 else 5 * p + 23


def expected_commutative(n: int) -> int:
    return (3 * n + 2) // 2


def n_of_action(action_class: ActionClass) -> int:
    """n(⊳): product of the primary orders where t is not ±id."""
    act = action_class.representative
    group = act.group
    result = 1
    for q in group.primes:
        block = group.primary_component(q)
        d = group.cyclic_orders[block[0]]
        sub = act.t.array[np.ix_(block, block)] % d
        identity = np.eye(len(block), dtype=np.int64)
        if not (np.array_equal(sub, identity) or np.array_equal(sub, (-identity) % d)):
            result *= d
    return result


# =============================================================================
# Classification
# =============================================================================


def classify(
    group: AbelianGroup,
    p: int,
    *,
    families: set[str] | None = None,
    seed: int = DEFAULT_SEED,
) -> ClassificationReport:
    """Every class [⊳] with its orbit report, plus summary blocks keyed by dimension.

    Args:
        group: The abelian group G
        p: Prime order of F = C_p
        families: Restrict to these family tags (default: all)
        seed: Seed for generator extraction

    Returns:
        ClassificationReport with totals over the selected classes
    """
    classes = catalog_actions(group, p, seed=seed)
    if families:
        classes = [c for c in classes if str(c.family) in families]
    reports = [orbits(build_X(action_class)) for action_class in classes]
    report = ClassificationReport(
        group=group.descriptor,
        prime=p,
        dimension=group.order * p,
        classes=reports,
        total=sum(r.total for r in reports),
        nontrivial=sum(r.nontrivial for r in reports),
    )
    report.blocks = summary_blocks(group, p, classes, report)
    for key, block in report.blocks.items():
        if block.matches is False:
            logger.warning(f"{key}: observed {block.observed}, expected {block.expected}")
    return report


def _block(label: str, observed: int, expected: int | None) -> SummaryValue:
    return SummaryValue(
        label=label,
        observed=observed,
        expected=expected,
        matches=None if expected is None else observed == expected,
    )


def summary_blocks(
    group: AbelianGroup,
    p: int,
    classes: list[ActionClass],
    report: ClassificationReport,
) -> dict[str, SummaryValue]:
    by_family: dict[str, int] = {}
    for action_class, orbit_report in zip(classes, report.classes, strict=True):
        key = str(action_class.family)
        by_family[key] = by_family.get(key, 0) + orbit_report.nontrivial

    blocks: dict[str, SummaryValue] = {}
    orders = group.cyclic_orders
    if orders == (p, p) and p > 2:
        blocks[SummaryBlock.DIM_P3] = _block("nontrivial, Z_p^2", report.nontrivial, expected_dim_p3(p))
    elif orders == (p, p, p) and p > 2:
        blocks[SummaryBlock.DIM_P4_ELEMENTARY_SPLIT] = _block(
            "nontrivial, R2+R1",
            by_family.get(ActionFamily.ELEMENTARY_DECOMPOSABLE, 0),
            expected_p4_split(p),
        )
        blocks[SummaryBlock.DIM_P4_ELEMENTARY_UNISERIAL] = _block(
            "nontrivial, R3",
            by_family.get(ActionFamily.ELEMENTARY_R3, 0),
            expected_p4_uniserial(p),
        )
    elif orders == (p * p, p) and p > 2:
        blocks[SummaryBlock.DIM_P4_MIXED] = _block(
            "nontrivial, Z_p^2+Z_p", report.nontrivial, expected_p4_mixed(p)
        )
    elif p == 2 and group.order == 4:
        blocks[SummaryBlock.DIM_8] = _block("nontrivial, order-4 group", report.nontrivial, None)
    elif p == 2 and is_two_n_group(group):
        for action_class, orbit_report in zip(classes, report.classes, strict=True):
            blocks[f"{SummaryBlock.DIM_2N2}:{action_class.label}"] = _block(
                f"isotypes, n={two_n_side(group)}",
                orbit_report.total,
                int(divisor_count(n_of_action(action_class))),
            )
    return blocks


def p4_census(p: int, seed: int = DEFAULT_SEED) -> dict[str, SummaryValue]:
    """All three groups of order p^3 together; adds the dim-p4-total block."""
    if p < 3 or not isprime(p):
        raise PreconditionError(f"p4 census needs an odd prime, got {p}")
    blocks: dict[str, SummaryValue] = {}
    total = 0
    for orders in ((p, p, p), (p * p, p), (p**3,)):
        report = classify(AbelianGroup(orders), p, seed=seed)
        blocks.update(report.blocks)
        total += report.nontrivial
    blocks[SummaryBlock.DIM_P4_TOTAL] = _block("nontrivial, dimension p^4", total, expected_p4_total(p))
    return blocks


def dim8_census(seed: int = DEFAULT_SEED) -> SummaryValue:
    """Noncocommutative, noncommutative orbits over Z_4 and Z_2 x Z_2 with p = 2."""
    total = sum(
        classify(AbelianGroup(orders), 2, seed=seed).nontrivial for orders in ((4,), (2, 2))
    )
    return _block("nontrivial, dimension 8", total, 1)


# =============================================================================
# Commutative, cocommutative, dim 2n^2
# =============================================================================


def cocommutative_count(X: ClassifyingGroup) -> int:
    """Number of A(⊳)-orbits on the cocommutative part of X.

    Raises:
        PreconditionError: If G is not an elementary p-group
    """
    group = X.group
    if not (len(group.primes) == 1 and group.is_elementary()):
        raise PreconditionError(f"{group} is not an elementary p-group")
    labels = orbit_labels(X.order, X.a_generators)
    return int(np.unique(labels[X.alt_zero_mask]).size)


def commutative_count(n: int, p: int, seed: int = DEFAULT_SEED) -> SummaryValue:
    """Orbits of Aut(G) × A_p on X(trivial) for G = Z_p^n, p odd."""
    if p == 2 or not isprime(p):
        raise PreconditionError(f"commutative_count needs an odd prime, got {p}")
    group = AbelianGroup((p,) * n)
    trivial = catalog_actions(group, p, include_nontrivial=False, seed=seed)[0]
    observed = orbits(build_X(trivial)).total
    return _block(f"commutative, n={n}", observed, expected_commutative(n))


def dim_2n2_count(n: int, action_class: ActionClass) -> int:
    """Isotypes of dimension 2n² for one C_2-action on Z_n × Z_n.

    Raises:
        PreconditionError: If n is even or the action is on another group
    """
    if n % 2 == 0:
        raise PreconditionError(f"n={n} must be odd")
    act = action_class.representative
    if act.p != 2 or act.group.order != n * n or not is_two_n_group(act.group):
        raise PreconditionError(f"Action is not a C_2-action on Z_{n} x Z_{n}")
    return orbits(build_X(action_class)).total


# =============================================================================
# Polynomial scan
# =============================================================================

SCAN_FAMILIES: dict[str, tuple[str, int]] = {
    # name -> (how to build G from p, degree bound)
    "Zp": ("p", 0),
    "Zp^2": ("p,p", 1),
    "Zp^3-split": ("p,p,p", 1),
    "Zp^3-uniserial": ("p,p,p", 1),
    "Zp2xZp": ("p*p,p", 1),
}

_FAMILY_FILTER = {
    "Zp^3-split": {str(ActionFamily.TRIVIAL), str(ActionFamily.ELEMENTARY_DECOMPOSABLE)},
    "Zp^3-uniserial": {str(ActionFamily.TRIVIAL), str(ActionFamily.ELEMENTARY_R3)},
}


def family_group(family: str, p: int) -> AbelianGroup:
    if family not in SCAN_FAMILIES:
        raise PreconditionError(f"Unknown scan family {family!r}; choose from {sorted(SCAN_FAMILIES)}")
    shape = SCAN_FAMILIES[family][0]
    return AbelianGroup.from_orders([p * p if token == "p*p" else p for token in shape.split(",")])


def family_count(family: str, p: int, seed: int = DEFAULT_SEED) -> int:
    return classify(family_group(family, p), p, families=_FAMILY_FILTER.get(family), seed=seed).nontrivial


def conjecture_scan(
    family: str,
    primes: list[int],
    holdout: list[int] | None = None,
    seed: int = DEFAULT_SEED,
) -> ScanResult:
    """Lagrange fit of the nontrivial count over `primes`, residuals on `holdout`.

    Raises:
        PreconditionError: If fewer primes than degree bound + 1 are given
    """
    degree = SCAN_FAMILIES.get(family, ("", 1))[1]
    family_group(family, 3)
    if len(set(primes)) < degree + 1:
        raise PreconditionError(
            f"Family {family} needs at least {degree + 1} primes, got {len(set(primes))}"
        )
    if any(not isprime(q) or q < 3 for q in primes):
        raise PreconditionError("Scan primes must be odd primes")

    x = sympy.Symbol("p")
    counts = {q: family_count(family, q, seed) for q in sorted(set(primes))}
    polynomial = sympy.expand(sympy.interpolate(list(counts.items()), x))
    poly = sympy.Poly(polynomial, x)
    raw = list(reversed(poly.all_coeffs()))
    coefficients = [int(c) for c in raw] if all(c.is_integer for c in raw) else []

    residuals = {}
    for q in holdout or []:
        observed = family_count(family, q, seed)
        counts[q] = observed
        residuals[q] = int(observed - polynomial.subs(x, q))
    logger.info(f"scan {family}: N = {polynomial}, residuals {residuals}")
    return ScanResult(
        family=family,
        primes=sorted(set(primes)),
        holdout=list(holdout or []),
        counts=counts,
        polynomial=str(polynomial),
        coefficients=coefficients,
        residuals=residuals,
    )


__all__ = [
    "classify",
    "summary_blocks",
    "p4_census",
    "dim8_census",
    "cocommutative_count",
    "commutative_count",
    "dim_2n2_count",
    "conjecture_scan",
    "family_count",
    "family_group",
    "n_of_action",
    "expected_dim_p3",
    "expected_p4_split",
    "expected_p4_uniserial",
    "expected_p4_mixed",
    "expected_p4_total",
    "expected_commutative",
    "SCAN_FAMILIES",
]
