"""Schema CLI commands for the JSON report formats.

Implements:
- schema export [--report classification|suite|oracle|scan|dual] [--output FILE]
"""

import sys
from argparse import Namespace
from pathlib import Path

import orjson

from hopfext.models.schemas import (
    ClassificationReport,
    DualityResult,
    OracleReport,
    ScanResult,
    SectionSearchResult,
    SuiteVerdict,
)

REPORT_MODELS = {
    "classification": ClassificationReport,
    "suite": SuiteVerdict,
    "oracle": OracleReport,
    "scan": ScanResult,
    "sections": SectionSearchResult,
    "dual": DualityResult,
}


def report_json_schema(name: str) -> dict:
    """JSON Schema of one report model.

    Raises:
        KeyError: For an unknown report name
    """
    return REPORT_MODELS[name].model_json_schema()


def cmd_schema_export(args: Namespace) -> None:
    """Export a report schema; stdout by default, or a file with --output."""
    name = getattr(args, "report", None) or "classification"
    try:
        schema = report_json_schema(name)
    except KeyError:
        print(f"❌ Unknown report '{name}'; choose from {', '.join(REPORT_MODELS)}", file=sys.stderr)
        sys.exit(2)
    text = orjson.dumps(schema, option=orjson.OPT_INDENT_2 | orjson.OPT_SORT_KEYS).decode()
    output_path = getattr(args, "output", None)
    if output_path:
        Path(output_path).write_text(text + "\n")
        print(f"✓ Schema exported to {output_path}")
    else:
        print(text)


def cmd_schema_dispatch(args: Namespace) -> None:
    """Dispatch to schema subcommands."""
    if args.schema_command == "export":
        cmd_schema_export(args)
    else:
        print(f"Unknown schema command: {args.schema_command}")
        sys.exit(1)


__all__ = ["REPORT_MODELS", "report_json_schema", "cmd_schema_export", "cmd_schema_dispatch"]
