"""hopfext CLI - command-line interface for the classification engine.

This package provides the CLI entry point and command implementations.

Usage:
    hopfext classify --group Z3xZ3 --prime 3
    hopfext verify --suite counts
    hopfext export --group Z2xZ2 --prime 2 --all
    hopfext scan --family Zp^2 --primes 3,5,7 --holdout 11
"""

import argparse

from hopfext.cli.classify_commands import cmd_classify, cmd_dual, cmd_oracle, cmd_scan, cmd_sections
from hopfext.cli.export_commands import cmd_export
from hopfext.cli.schema_commands import REPORT_MODELS, cmd_schema_dispatch
from hopfext.cli.verify_commands import cmd_verify
from hopfext.config import VALID_FORMATS
from hopfext.constants import ActionFamily, VerifySuite
from hopfext.utils.logging import log_context, setup_logging

__all__ = [
    # Entry points
    "main",
    "create_parser",
]


def _add_common(parser: argparse.ArgumentParser, *, group: bool = True) -> None:
    if group:
        parser.add_argument("--group", "-g", required=True, help="Group descriptor, e.g. Z3xZ3 or Z9xZ3")
        parser.add_argument("--prime", "-p", type=int, required=True, help="Order p of F = C_p")
    parser.add_argument("--format", "-f", choices=VALID_FORMATS, default="text", help="Output format")
    parser.add_argument("--output", "-o", type=str, default=None, help="Output path (default: stdout)")
    parser.add_argument("--seed", type=int, default=None, help="Seed for generator extraction")
    parser.add_argument("--max-group-order", type=int, default=None, help="Fail fast above this |G|")
    parser.add_argument("--max-automorphisms", type=int, default=None, help="Enumeration cap")


def create_parser() -> argparse.ArgumentParser:
    """Create and configure the CLI argument parser.

    Returns:
        Configured ArgumentParser for testing and main().
    """
    parser = argparse.ArgumentParser(
        description="hopfext - abelian extensions of kC_p by k^G, classified exactly",
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("--log-level", default=None, help="DEBUG, INFO, WARNING or ERROR")

    subparsers = parser.add_subparsers(dest="command", help="Available commands")

    # classify
    classify_parser = subparsers.add_parser("classify", help="Orbit tables and totals for (G, p)")
    _add_common(classify_parser)
    classify_parser.add_argument(
        "--family",
        action="append",
        choices=sorted(ActionFamily.all_values()),
        help="Restrict to an action family (repeatable)",
    )
    classify_parser.set_defaults(func=cmd_classify)

    # verify
    verify_parser = subparsers.add_parser("verify", help="Run acceptance suites")
    _add_common(verify_parser, group=False)
    verify_parser.add_argument(
        "--suite", "-s", choices=[s.value for s in VerifySuite], default=VerifySuite.ALL.value
    )
    verify_parser.add_argument("--max-order", type=int, default=27, help="Oracle sweep bound on |G|")
    verify_parser.set_defaults(func=cmd_verify)

    # export
    export_parser = subparsers.add_parser("export", help="Write structure constants and presentations")
    _add_common(export_parser)
    selection = export_parser.add_mutually_exclusive_group(required=True)
    selection.add_argument("--all", action="store_true", help="Every nontrivial orbit representative")
    selection.add_argument("--rep", type=str, default=None, help="CLASS,POINT")
    export_parser.set_defaults(func=cmd_export)

    # scan
    scan_parser = subparsers.add_parser("scan", help="Polynomial fit of nontrivial counts in p")
    _add_common(scan_parser, group=False)
    scan_parser.add_argument("--family", dest="scan_family", default="Zp^2", help="Scan family, e.g. Zp^2")
    scan_parser.add_argument("--primes", default="3,5,7", help="Fit primes")
    scan_parser.add_argument("--holdout", default="11", help="Residual primes")
    scan_parser.set_defaults(func=cmd_scan)

    # oracle
    oracle_parser = subparsers.add_parser("oracle", help="Compare |H²_c| with |X(⊳)|")
    _add_common(oracle_parser)
    oracle_parser.add_argument("--family", action="append", choices=sorted(ActionFamily.all_values()))
    oracle_parser.set_defaults(func=cmd_oracle)

    # sections
    sections_parser = subparsers.add_parser("sections", help="Equivariant section search on Z_2^n")
    _add_common(sections_parser, group=False)
    sections_parser.add_argument("--rank", "-n", type=int, default=2)
    sections_parser.set_defaults(func=cmd_sections)

    # dual
    dual_parser = subparsers.add_parser("dual", help="Dual class of H(e*∧f*) over Z_p x Z_p")
    _add_common(dual_parser, group=False)
    dual_parser.add_argument("--prime", "-p", type=int, required=True)
    dual_parser.set_defaults(func=cmd_dual)

    # schema
    schema_parser = subparsers.add_parser("schema", help="JSON Schema of report formats")
    schema_subparsers = schema_parser.add_subparsers(dest="schema_command", help="Schema subcommands")
    schema_export_parser = schema_subparsers.add_parser("export", help="Export a report schema")
    schema_export_parser.add_argument("--report", "-r", choices=sorted(REPORT_MODELS), default="classification")
    schema_export_parser.add_argument("--output", "-o", type=str, help="Output file (default: stdout)")
    schema_parser.set_defaults(func=cmd_schema_dispatch)

    return parser


def main():
    """Main CLI entry point."""
    parser = create_parser()
    args = parser.parse_args()

    if not args.command:
        parser.print_help()
        return

    if args.log_level:
        setup_logging(level=args.log_level)
    with log_context(
        command=args.command,
        group=getattr(args, "group", None),
        prime=getattr(args, "prime", None),
        suite=getattr(args, "suite", None),
    ):
        args.func(args)


if __name__ == "__main__":
    main()
