"""CLI helper utilities.

Shared functions for CLI commands: config building, error reporting and
exit codes.
"""

import sys
from argparse import Namespace
from pathlib import Path

from pydantic import ValidationError

from hopfext.models.run_config import RunConfig
from hopfext.models.schemas import EngineError, ErrorType, HopfextError

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_UNSUPPORTED = 2

# Error types that mean "this input is outside what the engine handles"
_UNSUPPORTED = frozenset(
    {
        ErrorType.DESCRIPTOR_ERROR,
        ErrorType.HOMOMORPHISM_ERROR,
        ErrorType.BUDGET_ERROR,
        ErrorType.UNSUPPORTED_ERROR,
        ErrorType.PRECONDITION_ERROR,
        ErrorType.VALIDATION_ERROR,
    }
)

SCOPE_NOTE = (
    "Supported: p prime, p at most the smallest prime divisor of |G|, and (G, p) "
    "one of: trivial actions, Z_p^n (n ≤ 3), Z_{p^e} x Z_p, cyclic G, "
    "Z_n x Z_n with p = 2, Z_2^n with swapped pairs."
)


def parse_int_list(text: str | None) -> list[int]:
    """Parse "3,5,7" into [3, 5, 7].

    Raises:
        ValueError: If an item is not an integer
    """
    if not text:
        return []
    try:
        return [int(item) for item in text.split(",") if item.strip()]
    except ValueError as e:
        raise ValueError(f"Expected comma-separated integers, got '{text}'") from e


def exit_code_for(error: Exception) -> int:
    if isinstance(error, ValidationError):
        return EXIT_UNSUPPORTED
    if isinstance(error, HopfextError) and error.error_type in _UNSUPPORTED:
        return EXIT_UNSUPPORTED
    return EXIT_FAILED


def fail(error: Exception, stage: str) -> None:
    """Print an error line (with scope for unsupported input) and exit."""
    info = EngineError.from_exception(error, stage)
    code = exit_code_for(error)
    print(f"❌ {stage}: {info.message}", file=sys.stderr)
    if info.type is ErrorType.UNSUPPORTED_ERROR:
        print(f"   {SCOPE_NOTE}", file=sys.stderr)
    sys.exit(code)


def build_config(args: Namespace, **overrides) -> RunConfig:
    """RunConfig from parsed arguments; exits with code 2 when invalid."""
    values = {
        "command": args.command,
        "group": getattr(args, "group", None),
        "prime": getattr(args, "prime", None),
        "families": getattr(args, "family", None) or [],
        "format": getattr(args, "format", None) or "text",
        "output": Path(args.output) if getattr(args, "output", None) else None,
    }
    for key in ("seed", "max_group_order", "max_automorphisms"):
        if getattr(args, key, None) is not None:
            values[key] = getattr(args, key)
    values.update(overrides)
    try:
        cfg = RunConfig(**values)
    except (ValidationError, HopfextError) as e:
        fail(e, args.command)
    cfg.apply_budgets()
    return cfg


def emit(text: str, output: Path | None) -> None:
    """Write to a file when --output is set, else to stdout."""
    if output is None:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")
        return
    output.parent.mkdir(parents=True, exist_ok=True)
    output.write_text(text)
    print(f"✓ Written to {output}")


__all__ = [
    "EXIT_OK",
    "EXIT_FAILED",
    "EXIT_UNSUPPORTED",
    "parse_int_list",
    "exit_code_for",
    "fail",
    "build_config",
    "emit",
]
