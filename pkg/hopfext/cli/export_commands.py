"""Export command: structure constants and presentations of built algebras.

Implements:
- export --group G --prime p --all
- export --group G --prime p --rep CLASS,POINT
"""

import sys
from argparse import Namespace
from pathlib import Path

from hopfext.cli.helpers import build_config, fail, parse_int_list
from hopfext.models.schemas import HopfextError, PreconditionError


def _selection(action_classes, cfg) -> list[tuple[int, int]]:
    """(class index, point) pairs to export.

    --all means every nontrivial orbit representative; --rep i,j names
    class i, point j (0,0 is the group algebra).
    """
    from hopfext.classifying import build_X
    from hopfext.orbits import orbits

    if not cfg.all_reps:
        class_index, point = cfg.reps
        if not 0 <= class_index < len(action_classes):
            raise PreconditionError(f"Class index {class_index} out of range 0..{len(action_classes) - 1}")
        return [(class_index, point)]
    selected = []
    for i, action_class in enumerate(action_classes):
        for record in orbits(build_X(action_class)).orbits:
            if not record.cocommutative and not record.commutative:
                selected.append((i, record.representative))
    return selected


def cmd_export(args: Namespace) -> None:
    """Verify and write each selected algebra.

    Usage:
        hopfext export --group Z2xZ2 --prime 2 --all
        hopfext export --group Z3xZ3 --prime 3 --rep 0,1
    """
    from hopfext.actions import catalog_actions
    from hopfext.config import OUTPUTS_DIR
    from hopfext.hopf.builder import build
    from hopfext.storage.structure_file import export_algebra

    try:
        reps = parse_int_list(args.rep)
    except ValueError as e:
        print(f"❌ {e}", file=sys.stderr)
        sys.exit(2)
    if reps and len(reps) != 2:
        print("❌ --rep takes CLASS,POINT", file=sys.stderr)
        sys.exit(2)
    cfg = build_config(args, reps=reps, all_reps=args.all)
    output_dir = Path(args.output) if args.output else OUTPUTS_DIR / "structures"

    written = []
    try:
        action_classes = catalog_actions(cfg.abelian_group, cfg.prime, seed=cfg.seed)
        for class_index, point in _selection(action_classes, cfg):
            H = build(action_classes[class_index], point)
            written.extend(export_algebra(H, output_dir))
    except HopfextError as e:
        fail(e, "export")

    print(f"\n📁 Exported {len(written) // 2} algebra(s):")
    for path in written:
        print(f"   {path}")


__all__ = ["cmd_export"]
