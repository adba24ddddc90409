"""Type-safe constants for action families, carriers and report keys.

Provides enums for the magic strings that appear in reports, exports
and CLI flags.
"""

from enum import StrEnum


class ActionFamily(StrEnum):
    """Families of C_p-actions with canonical representatives."""

    TRIVIAL = "trivial"
    ELEMENTARY_REGULAR = "elementary-regular"  # R2 on Z_p^2
    ELEMENTARY_DECOMPOSABLE = "elementary-decomposable"  # R2 + R1
    ELEMENTARY_R3 = "elementary-R3"  # single Jordan block of size 3
    GAMMA_CENTRAL = "gamma-central"  # diag(1 + p^(e-1), 1)
    GAMMA_LOWER_TRIANGULAR = "gamma-lower-triangular"
    GAMMA_CYCLIC_0 = "gamma-cyclic-0"
    GAMMA_CYCLIC_1 = "gamma-cyclic-1"
    GAMMA_CYCLIC_NONRESIDUE = "gamma-cyclic-nonresidue"
    CYCLIC_UNIT = "cyclic-unit"  # multiplication by a unit of order p
    TWO_N_SPLIT = "two-n-split"  # Z_n x Z_n, p = 2, n odd
    ELEMENTARY_TWO_SWAP = "elementary-two-swap"  # swapped pairs on Z_2^n

    @classmethod
    def all_values(cls) -> set[str]:
        """Return all valid family tags.

        Returns:
            Set of family tag strings
        """
        return {family.value for family in cls}


class CarrierKind(StrEnum):
    """Models used to realize the classifying group."""

    DIRECT_PRODUCT = "direct-product"  # |G| odd: Q x Alt_N
    CHARACTERS_ONLY = "characters-only"  # Alt_N = 0
    P2_TRIVIAL = "p2-trivial"  # p = 2, trivial action, s_alpha transversal
    P2_ELEMENTARY = "p2-elementary"  # p = 2, swap action on Z_2^n


class ReportFormat(StrEnum):
    """Output formats for classification reports."""

    JSON = "json"
    TSV = "tsv"
    TEXT = "text"


class VerifySuite(StrEnum):
    """Named acceptance suites run by `hopfext verify`."""

    COUNTS = "counts"
    ORACLE = "oracle"
    SECTIONS = "sections"
    DIM_8 = "dim-8"
    DIM_2N2 = "dim-2n2"
    STATEMENTS = "statements"
    SELF_DUALITY = "self-duality"
    AXIOMS = "axioms"
    SCAN = "scan"
    ALL = "all"

    @classmethod
    def runnable(cls) -> list["VerifySuite"]:
        """Suites in execution order, without the ALL alias."""
        return [suite for suite in cls if suite is not cls.ALL]


class SummaryBlock(StrEnum):
    """Keys of the summary blocks in a classification report."""

    DIM_P3 = "dim-p3"
    DIM_P4_ELEMENTARY_SPLIT = "dim-p4-elementary-split"
    DIM_P4_ELEMENTARY_UNISERIAL = "dim-p4-elementary-uniserial"
    DIM_P4_MIXED = "dim-p4-mixed"
    DIM_P4_TOTAL = "dim-p4-total"
    DIM_8 = "dim-8"
    DIM_2N2 = "dim-2n2"


class AxiomName(StrEnum):
    """Hopf axioms checked by verify_axioms, in check order."""

    ASSOCIATIVITY = "associativity"
    UNIT = "unit"
    COASSOCIATIVITY = "coassociativity"
    COUNIT = "counit"
    COMULTIPLICATIVITY = "comultiplicativity"
    COUNIT_MULTIPLICATIVITY = "counit-multiplicativity"
    ANTIPODE = "antipode"


__all__ = [
    "ActionFamily",
    "CarrierKind",
    "ReportFormat",
    "VerifySuite",
    "SummaryBlock",
    "AxiomName",
]
