"""Text templates for reports and presentations.

Templates live as YAML files under TEMPLATES_DIR; each top-level key holds
one Jinja2 template string.
"""

import logging
import re
from pathlib import Path
from typing import Any

import yaml
from jinja2 import StrictUndefined, Template

from hopfext.config import TEMPLATES_DIR

logger = logging.getLogger(__name__)


def resolve_template_path(name: str, templates_dir: Path | None = None) -> Path:
    """Resolve a template name to its YAML file.

    Args:
        name: Template name like "presentation"
        templates_dir: Directory override (default: TEMPLATES_DIR)

    Returns:
        Path to the YAML file

    Raises:
        FileNotFoundError: If the template file doesn't exist
    """
    path = Path(templates_dir or TEMPLATES_DIR) / f"{name}.yaml"
    if not path.exists():
        raise FileNotFoundError(f"Template not found: {path}")
    logger.debug(f"Template {name} resolved to {path}")
    return path


def load_template(name: str, templates_dir: Path | None = None) -> dict[str, str]:
    """Load a YAML template file.

    Returns:
        Dictionary of section name -> template string
    """
    with open(resolve_template_path(name, templates_dir)) as f:
        return yaml.safe_load(f)


def extract_variables(template: str) -> set[str]:
    """Top-level variable names a Jinja2 template reads.

    Examples:
        >>> extract_variables("{% for rel in relations %}{{ rel }}{% endfor %}")
        {'relations'}
    """
    variables = set(re.findall(r"\{\{\s*(\w+)", template))
    variables.update(re.findall(r"\{%\s*for\s+\w+(?:\s*,\s*\w+)*\s+in\s+(\w+)", template))
    variables.update(re.findall(r"\{%\s*if\s+(\w+)", template))
    loop_vars = set()
    for group in re.findall(r"\{%\s*for\s+(\w+(?:\s*,\s*\w+)*)\s+in", template):
        loop_vars.update(v.strip() for v in group.split(","))
    return variables - loop_vars - {"loop", "range", "not", "true", "false", "none"}


def render_template(
    name: str,
    section: str,
    variables: dict[str, Any],
    templates_dir: Path | None = None,
) -> str:
    """Render one section of a template file.

    Raises:
        KeyError: If the section is missing
        ValueError: If required variables are missing
    """
    sections = load_template(name, templates_dir)
    if section not in sections:
        raise KeyError(f"Template '{name}' has no section '{section}'")
    source = sections[section]
    missing = extract_variables(source) - set(variables)
    if missing:
        raise ValueError(
            f"Missing required variable(s) for template '{name}.{section}': "
            f"{', '.join(sorted(missing))}"
        )
    return Template(source, undefined=StrictUndefined, trim_blocks=True, lstrip_blocks=True).render(**variables)


__all__ = ["resolve_template_path", "load_template", "extract_variables", "render_template"]
