"""Classification commands.

Implements:
- classify --group G --prime p [--family F] [--format json|tsv|text]
- scan --family Zp^2 --primes 3,5,7 --holdout 11
- oracle --group G --prime p
- sections --rank n
- dual --prime p
"""

import sys
from argparse import Namespace

from hopfext.cli.helpers import EXIT_FAILED, build_config, emit, fail, parse_int_list
from hopfext.models.schemas import HopfextError, PreconditionError


def cmd_classify(args: Namespace) -> None:
    """Orbit tables per action class plus totals and summary blocks.

    Usage:
        hopfext classify --group Z3xZ3 --prime 3
    """
    from hopfext.census import classify
    from hopfext.storage.export import render

    cfg = build_config(args)
    try:
        report = classify(cfg.abelian_group, cfg.prime, families=set(cfg.families) or None, seed=cfg.seed)
    except HopfextError as e:
        fail(e, "classify")
    emit(render(report, cfg.format), cfg.output)


def cmd_scan(args: Namespace) -> None:
    """Fit the nontrivial count of a family as a polynomial in p."""
    from hopfext.census import conjecture_scan
    from hopfext.storage.export import to_json

    try:
        primes = parse_int_list(args.primes)
        holdout = parse_int_list(args.holdout)
    except ValueError as e:
        print(f"❌ {e}", file=sys.stderr)
        sys.exit(2)
    cfg = build_config(args, scan_family=args.scan_family, primes=primes, holdout=holdout)
    try:
        result = conjecture_scan(cfg.scan_family, cfg.primes, cfg.holdout, seed=cfg.seed)
    except HopfextError as e:
        fail(e, "scan")
    if cfg.format == "json":
        emit(to_json(result).decode(), cfg.output)
        return
    lines = [f"{cfg.scan_family}: N(p) = {result.polynomial}"]
    lines.extend(f"  p={q}: {count}" for q, count in sorted(result.counts.items()))
    lines.extend(f"  residual at p={q}: {r}" for q, r in sorted(result.residuals.items()))
    emit("\n".join(lines), cfg.output)


def cmd_oracle(args: Namespace) -> None:
    """Compare |H²_c| from the cocycle lattices with |X(⊳)| per class."""
    from hopfext.actions import catalog_actions
    from hopfext.oracle import oracle_report
    from hopfext.storage.export import to_json

    cfg = build_config(args)
    try:
        classes = catalog_actions(cfg.abelian_group, cfg.prime, seed=cfg.seed)
        reports = [oracle_report(c) for c in classes if not cfg.families or str(c.family) in cfg.families]
    except HopfextError as e:
        fail(e, "oracle")
    if cfg.format == "json":
        emit(to_json(reports).decode(), cfg.output)
    else:
        lines = [
            f"{'✓' if r.matches else '✗'} {r.family}: |Z²_N|={r.z2n_order} |B²_N|={r.b2n_order} "
            f"|kerΦ|={r.ker_phi_order} |H²_c|={r.h2c_order} |X|={r.x_order}"
            for r in reports
        ]
        emit("\n".join(lines), cfg.output)
    if not all(r.matches for r in reports):
        sys.exit(EXIT_FAILED)


def cmd_sections(args: Namespace) -> None:
    """Equivariant section search on Z_2^n with trivial action."""
    from hopfext.oracle import section_search
    from hopfext.storage.export import to_json

    cfg = build_config(args, rank=args.rank)
    try:
        result = section_search(cfg.rank)
    except HopfextError as e:
        fail(e, "sections")
    if cfg.format == "json":
        emit(to_json(result).decode(), cfg.output)
        return
    status = "section found" if result.found else "no equivariant section"
    lines = [f"n={result.rank}: {status}", f"  {result.certificate}"]
    for label, chi in sorted((result.section or {}).items()):
        lines.append(f"  ⟨{label}⟩ ↦ χ = {chi}")
    emit("\n".join(lines), cfg.output)


def cmd_dual(args: Namespace) -> None:
    """Dual class of H(e*∧f*, ⊳) over Z_p x Z_p for the regular action."""
    from hopfext.actions import catalog_actions
    from hopfext.constants import ActionFamily
    from hopfext.hopf.duality import dual_cocycle_p3
    from hopfext.storage.export import to_json

    cfg = build_config(args, group=f"Z{args.prime}xZ{args.prime}")
    try:
        regular = [
            c
            for c in catalog_actions(cfg.abelian_group, cfg.prime, seed=cfg.seed)
            if c.family is ActionFamily.ELEMENTARY_REGULAR
        ]
        if not regular:
            raise PreconditionError(f"No regular action on {cfg.abelian_group} for p={cfg.prime}")
        result = dual_cocycle_p3(regular[0])
    except HopfextError as e:
        fail(e, "dual")
    if cfg.format == "json":
        emit(to_json(result).decode(), cfg.output)
        return
    emit(
        "\n".join(
            [
                f"p={result.prime}: dual class = {result.coefficient}·(e*∧f*)",
                f"  dual coordinates: χ={result.dual_char} alt={result.dual_alt}",
                f"  Legendre symbol: {result.legendre}",
                f"  self-dual: {result.self_dual}",
            ]
        ),
        cfg.output,
    )


__all__ = ["cmd_classify", "cmd_scan", "cmd_oracle", "cmd_sections", "cmd_dual"]
