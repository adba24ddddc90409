"""Orbits of G(⊳) on X(⊳).

Labels start as point indices and repeatedly take the minimum over each
generator edge in both directions, with pointer jumping in between; at the
fixed point every label is the least point of its orbit.
"""

from __future__ import annotations

import logging

import numpy as np

from hopfext.classifying import ClassifyingGroup
from hopfext.constants import ActionFamily
from hopfext.models.schemas import ActionSummary, OrbitRecord, OrbitReport

logger = logging.getLogger(__name__)


def orbit_labels(size: int, generators: list[np.ndarray]) -> np.ndarray:
    """label[x] = least point in the orbit of x under the generated group."""
    labels = np.arange(size, dtype=np.int64)
    while True:
        previous = labels.copy()
        for perm in generators:
            labels = np.minimum(labels, labels[perm])
            np.minimum.at(labels, perm, labels.copy())
            while True:
                jumped = labels[labels]
                if np.array_equal(jumped, labels):
                    break
                labels = jumped
        if np.array_equal(labels, previous):
            return labels


def orbit_sizes(labels: np.ndarray) -> dict[int, int]:
    reps, counts = np.unique(labels, return_counts=True)
    return {int(r): int(c) for r, c in zip(reps, counts, strict=True)}


def action_summary(X: ClassifyingGroup) -> ActionSummary:
    action_class = X.action_class
    summary = action_class.summary()
    return ActionSummary(
        family=summary["family"],
        matrix=summary["matrix"],
        a_order=summary["a_order"],
        stabilizer=summary["stabilizer"],
        carrier=str(X.carrier),
        x_order=X.order,
        quotient_order=X.quotient.order,
        alt_order=X.alt_size,
    )


def orbits(X: ClassifyingGroup) -> OrbitReport:
    """Orbit partition of X under G(⊳), least point first.

    An orbit is cocommutative when its alternating part vanishes; it counts
    as nontrivial when it is also noncommutative, i.e. the action is not
    trivial.
    """
    labels = orbit_labels(X.order, X.generators)
    a_labels = orbit_labels(X.order, X.a_generators)
    a_sizes = orbit_sizes(a_labels)
    commutative = X.action_class.family is ActionFamily.TRIVIAL

    records = []
    for rep, size in sorted(orbit_sizes(labels).items()):
        element = X.element(rep)
        cocommutative = X.alt_is_zero(rep)
        records.append(
            OrbitRecord(
                representative=rep,
                char_coords=list(element.char_coords),
                alt_coords=list(element.alt_coords),
                size=size,
                a_orbit_size=a_sizes[int(a_labels[rep])],
                cocommutative=cocommutative,
                commutative=commutative,
            )
        )
    nontrivial = sum(1 for r in records if not r.cocommutative and not r.commutative)
    report = OrbitReport(
        action=action_summary(X),
        orbits=records,
        total=len(records),
        nontrivial=nontrivial,
        cocommutative=sum(1 for r in records if r.cocommutative),
    )
    logger.info(
        f"{X.action_class.label}: {report.total} orbits, {report.nontrivial} nontrivial"
    )
    return report


def orbit_of(X: ClassifyingGroup, point: int) -> list[int]:
    """Every point in the G(⊳)-orbit of `point`, sorted."""
    labels = orbit_labels(X.order, X.generators)
    return np.nonzero(labels == labels[point])[0].tolist()


def same_orbit(X: ClassifyingGroup, first: int, second: int) -> bool:
    labels = orbit_labels(X.order, X.generators)
    return bool(labels[first] == labels[second])


__all__ = ["orbit_labels", "orbit_sizes", "orbits", "orbit_of", "same_orbit", "action_summary"]
