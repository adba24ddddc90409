"""Verify command: run acceptance suites.

Implements:
- verify [--suite NAME] [--max-order N] [--format json|text]
"""

import sys
from argparse import Namespace

from hopfext.cli.helpers import EXIT_FAILED, build_config, emit, fail
from hopfext.models.schemas import HopfextError


def cmd_verify(args: Namespace) -> None:
    """Run one suite (or all) and exit 1 if any criterion fails.

    Usage:
        hopfext verify --suite counts
        hopfext verify --suite oracle --max-order 27
    """
    from hopfext.constants import VerifySuite
    from hopfext.storage.export import render, to_json
    from hopfext.verification import run_all, run_suite, summary_row

    cfg = build_config(args, suite=args.suite, max_order=args.max_order)
    try:
        if cfg.suite is VerifySuite.ALL:
            verdicts = run_all(seed=cfg.seed, max_order=cfg.max_order)
        else:
            verdicts = [run_suite(cfg.suite, seed=cfg.seed, max_order=cfg.max_order)]
    except HopfextError as e:
        fail(e, "verify")

    if cfg.format == "json":
        rows = [{**summary_row(v), "results": [c.model_dump() for c in v.criteria]} for v in verdicts]
        emit(to_json(rows).decode(), cfg.output)
    else:
        emit("\n".join(render(v, "text") for v in verdicts), cfg.output)

    failed = [v.suite for v in verdicts if not v.passed]
    if failed:
        print(f"❌ Failed suites: {', '.join(failed)}", file=sys.stderr)
        sys.exit(EXIT_FAILED)
    print(f"✅ {len(verdicts)} suite(s) passed", file=sys.stderr)


__all__ = ["cmd_verify"]
