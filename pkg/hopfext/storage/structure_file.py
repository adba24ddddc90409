"""Plain-text structure-constant files for built Hopf algebras.

Layout:

    # hopfext-structure v1
    dimension 27
    modulus 9
    group Z3xZ3
    prime 3
    action 1,0;1,1
    label R2#1
    [mult]          one row per x: basis index of x·y, -1 for zero
    [comult]        one row per x: left:right:exp for each term of Δ(x)
    [antipode]      one row per x: target exp, S(x) = ζ^exp target
    [counit]        ε on the basis, one line
    [twist]         τ(t) rows; empty for the group algebra

Exponents are of ζ_modulus.
"""

import logging
from pathlib import Path

import numpy as np

from hopfext.algebra.groups import Endomorphism, parse_group
from hopfext.hopf.axioms import verify_axioms
from hopfext.hopf.builder import HopfStructure
from hopfext.hopf.presentation import presentation_text
from hopfext.models.schemas import AxiomViolationError, ErrorType, HopfextError

logger = logging.getLogger(__name__)

HEADER = "# hopfext-structure v1"
SECTIONS = ("mult", "comult", "antipode", "counit", "twist")


class StructureFileError(HopfextError):
    """A structure file is malformed."""

    error_type = ErrorType.VALIDATION_ERROR


def _row(values) -> str:
    return " ".join(str(int(v)) for v in values)


def format_structure(H: HopfStructure) -> str:
    matrix = ";".join(",".join(str(c) for c in row) for row in H.t.matrix)
    lines = [
        HEADER,
        f"dimension {H.dimension}",
        f"modulus {H.modulus}",
        f"group {H.group.descriptor}",
        f"prime {H.p}",
        f"action {matrix}",
        f"label {H.label}",
        "[mult]",
    ]
    lines.extend(_row(row) for row in H.mult)
    lines.append("[comult]")
    for x in range(H.dimension):
        terms = zip(H.comult_left[x], H.comult_right[x], H.comult_exp[x], strict=True)
        lines.append(" ".join(f"{int(left)}:{int(right)}:{int(e)}" for left, right, e in terms))
    lines.append("[antipode]")
    lines.extend(f"{int(t)} {int(e)}" for t, e in zip(H.antipode_target, H.antipode_exp, strict=True))
    lines.append("[counit]")
    lines.append(_row(H.counit))
    lines.append("[twist]")
    if H.twist.any():
        lines.extend(_row(row) for row in H.twist)
    return "\n".join(lines) + "\n"


def write_structure(H: HopfStructure, path: str | Path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(format_structure(H))
    return path


def _split_sections(text: str) -> tuple[dict[str, str], dict[str, list[str]]]:
    lines = text.splitlines()
    if not lines or lines[0].strip() != HEADER:
        raise StructureFileError(f"Missing header '{HEADER}'")
    header: dict[str, str] = {}
    sections: dict[str, list[str]] = {}
    current = None
    for line in lines[1:]:
        stripped = line.strip()
        if stripped.startswith("[") and stripped.endswith("]"):
            current = stripped[1:-1]
            if current not in SECTIONS:
                raise StructureFileError(f"Unknown section [{current}]")
            sections[current] = []
        elif current is None:
            if stripped:
                key, _, value = stripped.partition(" ")
                header[key] = value
        elif stripped:
            sections[current].append(stripped)
    missing = [name for name in SECTIONS if name not in sections]
    if missing:
        raise StructureFileError(f"Missing section(s): {', '.join(missing)}")
    return header, sections


def _ints(lines: list[str]) -> np.ndarray:
    return np.array([[int(v) for v in line.split()] for line in lines], dtype=np.int64)


def load_structure(path: str | Path) -> HopfStructure:
    """Parse a structure file back into a HopfStructure.

    Raises:
        StructureFileError: On a malformed header, section or row count
    """
    header, sections = _split_sections(Path(path).read_text())
    try:
        group = parse_group(header["group"])
        p = int(header["prime"])
        modulus = int(header["modulus"])
        dim = int(header["dimension"])
        matrix = [[int(c) for c in row.split(",")] for row in header["action"].split(";")]
    except (KeyError, ValueError) as e:
        raise StructureFileError(f"Bad header: {e}") from e
    if dim != group.order * p:
        raise StructureFileError(f"dimension {dim} != |G|·p = {group.order * p}")

    mult = _ints(sections["mult"])
    terms = [[tuple(int(v) for v in token.split(":")) for token in line.split()] for line in sections["comult"]]
    comult = np.array(terms, dtype=np.int64)
    antipode = _ints(sections["antipode"])
    counit = _ints(sections["counit"]).reshape(-1)
    n = group.order
    twist = _ints(sections["twist"]) if sections["twist"] else np.zeros((n, n), dtype=np.int64)
    expected = {
        "mult": (mult.shape, (dim, dim)),
        "comult": (comult.shape, (dim, n, 3)),
        "antipode": (antipode.shape, (dim, 2)),
        "counit": (counit.shape, (dim,)),
        "twist": (twist.shape, (n, n)),
    }
    for name, (found, want) in expected.items():
        if found != want:
            raise StructureFileError(f"[{name}] has shape {found}, expected {want}")

    return HopfStructure(
        group=group,
        p=p,
        t=Endomorphism.from_array(group, matrix),
        modulus=modulus,
        mult=mult,
        comult_left=comult[:, :, 0],
        comult_right=comult[:, :, 1],
        comult_exp=comult[:, :, 2],
        antipode_target=antipode[:, 0],
        antipode_exp=antipode[:, 1],
        counit=counit,
        twist=twist,
        label=header.get("label", ""),
    )


def export_algebra(H: HopfStructure, output_dir: str | Path, stem: str | None = None) -> list[Path]:
    """Verify H, then write its structure file and presentation.

    Raises:
        AxiomViolationError: If any Hopf axiom fails; nothing is written
    """
    verdict = verify_axioms(H)
    failure = verdict.first_failure()
    if failure is not None:
        raise AxiomViolationError(f"{H.label}: {failure.name} fails at {failure.witness}")
    output_dir = Path(output_dir)
    stem = stem or H.label.replace("#", "_")
    structure = write_structure(H, output_dir / f"{stem}.hopf")
    text = output_dir / f"{stem}.presentation.txt"
    text.write_text(presentation_text(H))
    logger.info(f"Exported {H.label} (dim {H.dimension}) to {structure}")
    return [structure, text]


__all__ = [
    "HEADER",
    "StructureFileError",
    "format_structure",
    "write_structure",
    "load_structure",
    "export_algebra",
]
