"""Hopf algebras H(τ, ⊳): construction, axiom checks, presentations, duality."""

from hopfext.hopf.axioms import corrupt_comult, verify_axioms
from hopfext.hopf.builder import (
    HopfStructure,
    antipode_squared_is_identity,
    build,
    build_from_cocycle,
    group_algebra,
    grouplike_count,
)
from hopfext.hopf.duality import dual_cocycle_p3, duality_is_involutive
from hopfext.hopf.presentation import presentation, presentation_text

__all__ = [
    "HopfStructure",
    "build",
    "build_from_cocycle",
    "group_algebra",
    "grouplike_count",
    "antipode_squared_is_identity",
    "verify_axioms",
    "corrupt_comult",
    "presentation",
    "presentation_text",
    "dual_cocycle_p3",
    "duality_is_involutive",
]
