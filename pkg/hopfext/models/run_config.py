"""Validated run configuration for one CLI command.

A RunConfig is built from the parsed arguments and validated completely
before any computation starts.
"""

from pathlib import Path

from pydantic import BaseModel, Field, field_validator, model_validator
from sympy import isprime

from hopfext import config
from hopfext.algebra.groups import AbelianGroup, parse_group
from hopfext.constants import ActionFamily, ReportFormat, VerifySuite
from hopfext.models.schemas import BudgetExceededError

COMMANDS = ("classify", "verify", "export", "scan", "oracle", "sections", "dual", "schema")

# Commands that act on one (G, p)
GROUP_COMMANDS = frozenset({"classify", "export", "oracle", "dual"})


class RunConfig(BaseModel):
    """Everything a command needs, checked up front."""

    command: str = Field(description="CLI command name")
    group: str | None = Field(default=None, description="Group descriptor, e.g. Z3xZ3")
    prime: int | None = Field(default=None, ge=2)
    families: list[str] = Field(default_factory=list, description="Action family filter")
    max_group_order: int = Field(default_factory=lambda: config.MAX_GROUP_ORDER, ge=1)
    max_automorphisms: int = Field(default_factory=lambda: config.MAX_AUTOMORPHISMS, ge=1)
    format: ReportFormat = ReportFormat.TEXT
    output: Path | None = None
    seed: int = Field(default_factory=lambda: config.DEFAULT_SEED, ge=0)

    # verify
    suite: VerifySuite = VerifySuite.ALL
    max_order: int = Field(default=27, ge=1, description="Oracle sweep bound on |G|")

    # export
    reps: list[int] = Field(default_factory=list, description="Orbit representatives to export")
    all_reps: bool = False

    # scan
    scan_family: str = "Zp^2"
    primes: list[int] = Field(default_factory=lambda: [3, 5, 7])
    holdout: list[int] = Field(default_factory=lambda: [11])

    # sections
    rank: int = Field(default=2, ge=1)

    @field_validator("command")
    @classmethod
    def validate_command(cls, v: str) -> str:
        if v not in COMMANDS:
            raise ValueError(f"Unknown command '{v}'; choose from {', '.join(COMMANDS)}")
        return v

    @field_validator("group")
    @classmethod
    def validate_group(cls, v: str | None) -> str | None:
        if v is not None:
            parse_group(v)
        return v

    @field_validator("families")
    @classmethod
    def validate_families(cls, v: list[str]) -> list[str]:
        unknown = set(v) - ActionFamily.all_values()
        if unknown:
            raise ValueError(
                f"Unknown action families: {', '.join(sorted(unknown))}. "
                f"Valid: {', '.join(sorted(ActionFamily.all_values()))}"
            )
        return sorted(set(v))

    @field_validator("format", mode="before")
    @classmethod
    def validate_format(cls, v):
        if isinstance(v, str) and v not in config.VALID_FORMATS:
            raise ValueError(f"Format must be one of {config.VALID_FORMATS}, got '{v}'")
        return v

    @field_validator("primes", "holdout")
    @classmethod
    def validate_primes(cls, v: list[int]) -> list[int]:
        bad = [q for q in v if not isprime(q)]
        if bad:
            raise ValueError(f"Not prime: {bad}")
        return v

    @model_validator(mode="after")
    def validate_command_inputs(self) -> "RunConfig":
        if self.command in GROUP_COMMANDS and (self.group is None or self.prime is None):
            raise ValueError(f"'{self.command}' needs --group and --prime")
        if self.command == "export" and not (self.all_reps or self.reps):
            raise ValueError("export needs --all or --rep")
        if self.command == "export" and self.all_reps and self.reps:
            raise ValueError("--all and --rep are mutually exclusive")
        if self.group is not None:
            order = self.abelian_group.order
            if order > self.max_group_order:
                raise BudgetExceededError("group order", order, self.max_group_order)
        return self

    @property
    def abelian_group(self) -> AbelianGroup:
        return parse_group(self.group)

    def apply_budgets(self) -> None:
        """Install this run's budgets as the engine-wide caps."""
        config.MAX_GROUP_ORDER = self.max_group_order
        config.MAX_AUTOMORPHISMS = self.max_automorphisms


__all__ = ["RunConfig", "COMMANDS", "GROUP_COMMANDS"]
