"""Report rendering and structure-constant files."""

from hopfext.storage.export import render, to_json
from hopfext.storage.structure_file import export_algebra, load_structure, write_structure

__all__ = [
    "render",
    "to_json",
    "export_algebra",
    "write_structure",
    "load_structure",
]
