"""hopfext - exact classification of abelian extensions of kC_p by k^G.

Actions of C_p on a finite abelian group G are cataloged up to
equivalence, each classifying group X(⊳) is built as an explicit finite
abelian group, and isomorphism classes of the Hopf algebras H(τ, ⊳) are
counted as orbits of G(⊳) on X(⊳).
"""

from hopfext.actions import ActionClass, CpAction, catalog_actions
from hopfext.algebra.groups import AbelianGroup, Endomorphism, parse_group
from hopfext.census import classify, conjecture_scan
from hopfext.classifying import ClassifyingGroup, build_X
from hopfext.hopf import build, dual_cocycle_p3, verify_axioms
from hopfext.models import ErrorType, HopfextError
from hopfext.orbits import orbits

__version__ = "0.1.0"

__all__ = [
    # Groups and actions
    "AbelianGroup",
    "Endomorphism",
    "parse_group",
    "CpAction",
    "ActionClass",
    "catalog_actions",
    # Classifying group and orbits
    "ClassifyingGroup",
    "build_X",
    "orbits",
    "classify",
    "conjecture_scan",
    # Hopf structures
    "build",
    "verify_axioms",
    "dual_cocycle_p3",
    # Errors
    "ErrorType",
    "HopfextError",
]
