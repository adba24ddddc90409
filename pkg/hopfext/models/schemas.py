"""Pydantic models for errors and reports.

Engine values (groups, actions, tables) are plain frozen dataclasses and
numpy arrays; everything that leaves the engine as a report is modelled
here so the CLI can publish one JSON schema for it.
"""

from datetime import datetime
from enum import Enum
from typing import Any

from pydantic import BaseModel, Field

# =============================================================================
# Error Types
# =============================================================================


class ErrorType(str, Enum):
    """Types of errors the engine reports."""

    DESCRIPTOR_ERROR = "descriptor_error"  # Unparseable group descriptor
    HOMOMORPHISM_ERROR = "homomorphism_error"  # Matrix does not respect orders
    BUDGET_ERROR = "budget_error"  # Enumeration would exceed a configured cap
    UNSUPPORTED_ERROR = "unsupported_error"  # (G, p) outside the cataloged families
    PRECONDITION_ERROR = "precondition_error"  # Operation called outside its domain
    AXIOM_ERROR = "axiom_error"  # A built structure failed a Hopf axiom
    VALIDATION_ERROR = "validation_error"  # Pydantic validation failures
    UNKNOWN_ERROR = "unknown_error"  # Catch-all


class HopfextError(Exception):
    """Base class for every error raised by the engine."""

    error_type: ErrorType = ErrorType.UNKNOWN_ERROR


class GroupDescriptorError(HopfextError):
    """A group descriptor string could not be parsed."""

    error_type = ErrorType.DESCRIPTOR_ERROR


class InvalidHomomorphismError(HopfextError):
    """A matrix violates the congruence constraints of a homomorphism."""

    error_type = ErrorType.HOMOMORPHISM_ERROR


class BudgetExceededError(HopfextError):
    """An enumeration would exceed its configured budget."""

    error_type = ErrorType.BUDGET_ERROR

    def __init__(self, what: str, estimate: int, budget: int):
        self.what = what
        self.estimate = estimate
        self.budget = budget
        super().__init__(
            f"{what}: estimated size {estimate} exceeds budget {budget}"
        )


class UnsupportedInputError(HopfextError):
    """The pair (G, p) or the requested class is outside the supported catalog."""

    error_type = ErrorType.UNSUPPORTED_ERROR


class PreconditionError(HopfextError):
    """An operation was called on data outside its domain."""

    error_type = ErrorType.PRECONDITION_ERROR


class AxiomViolationError(HopfextError):
    """A Hopf structure failed verification."""

    error_type = ErrorType.AXIOM_ERROR


class EngineError(BaseModel):
    """Structured error information for CLI and report output."""

    type: ErrorType = Field(description="Category of error")
    message: str = Field(description="Human-readable error message")
    stage: str = Field(description="Command or stage where the error occurred")
    timestamp: datetime = Field(default_factory=datetime.now)
    details: dict[str, Any] = Field(
        default_factory=dict, description="Additional error context"
    )

    @classmethod
    def from_exception(
        cls, e: Exception, stage: str, error_type: ErrorType | None = None
    ) -> "EngineError":
        """Create an EngineError from an exception.

        Args:
            e: The exception that occurred
            stage: Command or stage name
            error_type: Optional explicit error type

        Returns:
            EngineError instance
        """
        if error_type is None:
            if isinstance(e, HopfextError):
                error_type = e.error_type
            elif "validation" in type(e).__name__.lower():
                error_type = ErrorType.VALIDATION_ERROR
            else:
                error_type = ErrorType.UNKNOWN_ERROR

        details: dict[str, Any] = {"exception_type": type(e).__name__}
        if isinstance(e, BudgetExceededError):
            details.update(estimate=e.estimate, budget=e.budget)
        return cls(type=error_type, message=str(e), stage=stage, details=details)


# =============================================================================
# Classification Reports
# =============================================================================


class ActionSummary(BaseModel):
    """One action class [⊳] with its symmetry data."""

    family: str = Field(description="Action family tag")
    matrix: list[list[int]] = Field(description="Column-convention matrix of t")
    a_order: int = Field(description="|A(⊳)|")
    stabilizer: list[int] = Field(description="C(⊳) as exponents mod p")
    carrier: str = Field(description="Model used for the classifying group")
    x_order: int = Field(description="|X(⊳)|")
    quotient_order: int = Field(description="|Ĝ^{C_p}/N(Ĝ)|")
    alt_order: int = Field(description="|Alt_N(G)| (or the transversal span for p=2)")


class OrbitRecord(BaseModel):
    """One G(⊳)-orbit on X(⊳)."""

    representative: int = Field(description="Index of the least element of the orbit")
    char_coords: list[int] = Field(description="Coset representative in Ĝ")
    alt_coords: list[int] = Field(description="Alternating or transversal coordinates")
    size: int
    a_orbit_size: int = Field(description="|xA(⊳)| of the representative")
    cocommutative: bool
    commutative: bool = Field(default=False, description="Set for trivial actions")


class OrbitReport(BaseModel):
    """Orbit partition for one action class."""

    action: ActionSummary
    orbits: list[OrbitRecord] = Field(default_factory=list)
    total: int = 0
    nontrivial: int = 0
    cocommutative: int = 0


class SummaryValue(BaseModel):
    """A count compared against the closed formula it is expected to follow."""

    label: str
    observed: int
    expected: int | None = None
    matches: bool | None = None


class ClassificationReport(BaseModel):
    """Full classification of Ext(kC_p, k^G) for one (G, p)."""

    group: str
    prime: int
    dimension: int
    classes: list[OrbitReport] = Field(default_factory=list)
    total: int = 0
    nontrivial: int = 0
    blocks: dict[str, SummaryValue] = Field(default_factory=dict)


# =============================================================================
# Oracle, Section Search, Scan
# =============================================================================


class OracleReport(BaseModel):
    """Lattice orders from the cocycle oracle for one (G, ⊳)."""

    group: str
    prime: int
    family: str
    label: str
    modulus: int
    z2n_order: int
    b2n_order: int
    ker_phi_order: int
    h2c_order: int
    x_order: int | None = None
    matches: bool | None = None


class SectionSearchResult(BaseModel):
    """Outcome of the equivariant section search on Z_2^n with trivial action."""

    rank: int
    found: bool
    section: dict[str, list[int]] | None = Field(
        default=None, description="Pair label 'i,j' -> character coordinates"
    )
    unknowns: int = 0
    equations: int = 0
    certificate: str = ""
    brute_force_agrees: bool | None = None


class ScanResult(BaseModel):
    """Polynomial fit of nontrivial counts across primes."""

    family: str
    primes: list[int]
    holdout: list[int] = Field(default_factory=list)
    counts: dict[int, int] = Field(default_factory=dict)
    polynomial: str
    coefficients: list[int] = Field(default_factory=list)
    residuals: dict[int, int] = Field(default_factory=dict)


# =============================================================================
# Hopf Structures
# =============================================================================


class AxiomCheck(BaseModel):
    """Result of one axiom check."""

    name: str
    passed: bool
    witness: str | None = Field(default=None, description="First failing basis data")


class AxiomVerdict(BaseModel):
    """All axiom checks for one Hopf structure."""

    dimension: int
    checks: list[AxiomCheck] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def first_failure(self) -> AxiomCheck | None:
        """Return the first failed check, if any."""
        return next((check for check in self.checks if not check.passed), None)

    def check(self, name: str) -> AxiomCheck | None:
        return next((check for check in self.checks if check.name == str(name)), None)

    def failed_names(self) -> list[str]:
        return [check.name for check in self.checks if not check.passed]


class DualityResult(BaseModel):
    """Dual class of a dimension-p^3 Hopf algebra from the section-T recipe."""

    prime: int
    input_alt: list[int]
    dual_char: list[int]
    dual_alt: list[int]
    coefficient: int = Field(description="Dual class = coefficient * input class")
    coboundary_in_ker_phi: bool
    same_orbit: bool
    legendre: int
    self_dual: bool


class RelationCheck(BaseModel):
    """A defining relation of a presentation, checked in the built algebra."""

    relation: str
    holds: bool


class Presentation(BaseModel):
    """Generators and relations of H(τ, ⊳) with Δ, S and ε on generators."""

    label: str = ""
    group: str
    prime: int
    modulus: int
    dimension: int
    generators: list[str]
    relations: list[RelationCheck] = Field(default_factory=list)
    delta_t: list[list[int]] = Field(
        default_factory=list, description="τ(t)(a, b) exponents of ζ_m in Δ(t)"
    )
    antipode: list[str] = Field(default_factory=list)
    counit: list[str] = Field(default_factory=list)

    @property
    def relations_hold(self) -> bool:
        return all(r.holds for r in self.relations)


# =============================================================================
# Verification Suites
# =============================================================================


class CriterionResult(BaseModel):
    """One acceptance check inside a suite."""

    name: str
    passed: bool
    observed: Any = None
    expected: Any = None
    seconds: float = 0.0


class SuiteVerdict(BaseModel):
    """Pass/fail per criterion of a suite."""

    suite: str
    criteria: list[CriterionResult] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.criteria)
