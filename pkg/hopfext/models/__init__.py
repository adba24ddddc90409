"""Pydantic models for errors, reports and run configuration.

RunConfig lives in hopfext.models.run_config and is imported from there;
it depends on the algebra layer, which itself imports these schemas.
"""

from hopfext.models.schemas import (
    AxiomVerdict,
    ClassificationReport,
    EngineError,
    ErrorType,
    HopfextError,
    OracleReport,
    OrbitReport,
    SuiteVerdict,
)

__all__ = [
    # Errors
    "ErrorType",
    "HopfextError",
    "EngineError",
    # Reports
    "ClassificationReport",
    "OrbitReport",
    "OracleReport",
    "AxiomVerdict",
    "SuiteVerdict",
]
