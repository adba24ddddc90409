"""Report export - serialize classification and suite results.

JSON goes through orjson with sorted keys so identical runs give
byte-identical files; TSV and text are derived from the same dump.
"""

from typing import Any

import orjson
from pydantic import BaseModel

from hopfext.constants import ReportFormat
from hopfext.models.schemas import ClassificationReport, SuiteVerdict
from hopfext.utils.templates import render_template

TSV_COLUMNS = (
    "family",
    "representative",
    "char_coords",
    "alt_coords",
    "size",
    "a_orbit_size",
    "cocommutative",
    "commutative",
)


def _serialize(value: Any) -> Any:
    if isinstance(value, BaseModel):
        return value.model_dump(mode="json")
    if isinstance(value, dict):
        return {str(k): _serialize(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_serialize(item) for item in value]
    return value


def to_json(value: Any) -> bytes:
    """Deterministic JSON bytes (sorted keys, two-space indent, trailing newline)."""
    return orjson.dumps(
        _serialize(value),
        option=orjson.OPT_SORT_KEYS | orjson.OPT_INDENT_2 | orjson.OPT_APPEND_NEWLINE,
    )


def _coords(values: list[int]) -> str:
    return ",".join(str(v) for v in values)


def to_tsv(report: ClassificationReport) -> str:
    """One row per orbit, totals and summary blocks as # comment lines."""
    lines = [
        f"# group\t{report.group}",
        f"# prime\t{report.prime}",
        f"# total\t{report.total}",
        f"# nontrivial\t{report.nontrivial}",
    ]
    for key in sorted(report.blocks):
        block = report.blocks[key]
        lines.append(f"# {key}\t{block.observed}\t{'' if block.expected is None else block.expected}")
    lines.append("\t".join(TSV_COLUMNS))
    for entry in report.classes:
        for orbit in entry.orbits:
            row = [
                entry.action.family,
                str(orbit.representative),
                _coords(orbit.char_coords),
                _coords(orbit.alt_coords),
                str(orbit.size),
                str(orbit.a_orbit_size),
                str(int(orbit.cocommutative)),
                str(int(orbit.commutative)),
            ]
            lines.append("\t".join(row))
    return "\n".join(lines) + "\n"


def to_text(report: ClassificationReport | SuiteVerdict) -> str:
    if isinstance(report, SuiteVerdict):
        return render_template("report", "suite", {**report.model_dump(), "passed": report.passed})
    return render_template("report", "text", report.model_dump())


def render(report: ClassificationReport | SuiteVerdict, fmt: ReportFormat | str) -> str:
    """Report as a string in the requested format.

    Raises:
        ValueError: For TSV of anything but a classification report
    """
    fmt = ReportFormat(fmt)
    if fmt is ReportFormat.JSON:
        return to_json(report).decode()
    if fmt is ReportFormat.TSV:
        if not isinstance(report, ClassificationReport):
            raise ValueError("TSV output is only defined for classification reports")
        return to_tsv(report)
    return to_text(report)


__all__ = [
    "to_json",
    "to_tsv",
    "to_text",
    "render",
]
