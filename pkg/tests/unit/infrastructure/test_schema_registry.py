from __future__ import annotations

from pathlib import Path

import pytest

from application.services import proof_constants
from domain.models import Report, Violation
from infrastructure.schemas import (
    JsonSchemaRegistry,
    OutputValidator,
    SchemaNotFoundError,
    SchemaValidationError,
    default_schema_root,
)


@pytest.fixture
def validator() -> OutputValidator:
    return OutputValidator(JsonSchemaRegistry(default_schema_root()))


def test_constants_payload_matches_schema(validator: OutputValidator) -> None:
    validator.validate("constants", proof_constants(1, 2, 5).to_dict())


def test_report_payload_matches_schema(validator: OutputValidator) -> None:
    report = Report(violations=(Violation("missing-edge", (0, 1), "x"),), stats={"pattern_edges": 1})

    validator.validate("report", report.to_dict())


def test_invalid_payload_reports_path(validator: OutputValidator) -> None:
    with pytest.raises(SchemaValidationError, match="degeneracy"):
        validator.validate("degeneracy", {"degeneracy": -1, "ordering": []})


def test_unknown_schema(validator: OutputValidator) -> None:
    with pytest.raises(SchemaNotFoundError):
        validator.validate("missing", {})


def test_registry_reads_custom_root(tmp_path: Path) -> None:
    (tmp_path / "tiny.json").write_text('{"type": "object", "required": ["a"]}', encoding="utf-8")
    validator = OutputValidator(JsonSchemaRegistry(tmp_path))

    validator.validate("tiny", {"a": 1})
    with pytest.raises(SchemaValidationError):
        validator.validate("tiny", {})


def test_registry_rejects_broken_schema(tmp_path: Path) -> None:
    (tmp_path / "broken.json").write_text("{", encoding="utf-8")

    with pytest.raises(SchemaNotFoundError):
        JsonSchemaRegistry(tmp_path).get_schema("broken")
