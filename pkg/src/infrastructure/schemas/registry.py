"""
CLI の JSON 出力に対応する JSON Schema のレジストリと検証器。
"""

from __future__ import annotations

import json
from functools import lru_cache
from pathlib import Path
from typing import Any, Mapping, Protocol

from domain.errors import RamseyForgeError

try:
    from jsonschema import Draft202012Validator
except ImportError as exc:  # pragma: no cover - 実行時に早期検知したい
    raise RuntimeError("jsonschema パッケージがインストールされていません。") from exc


class SchemaNotFoundError(RamseyForgeError):
    """要求されたスキーマが存在しない。"""


class SchemaValidationError(RamseyForgeError):
    """出力がスキーマ検証に失敗した。"""


class SchemaRegistry(Protocol):
    """
    出力名に対応する JSON Schema を提供するインターフェース。
    """

    def get_schema(self, name: str) -> Mapping[str, object] | None:
        ...


class JsonSchemaRegistry(SchemaRegistry):
    """
    ディレクトリから ``<name>.json`` を読み込むレジストリ。
    """

    def __init__(self, schema_root: Path) -> None:
        self._schema_root = schema_root.resolve()

    @lru_cache(maxsize=None)
    def get_schema(self, name: str) -> Mapping[str, object] | None:
        path = self._schema_root / f"{name}.json"
        if not path.exists():
            return None
        try:
            with path.open("r", encoding="utf-8") as fh:
                return json.load(fh)
        except json.JSONDecodeError as exc:
            raise SchemaNotFoundError(f"スキーマ JSON の解析に失敗しました: {path}") from exc


class OutputValidator:
    """
    JSON 出力をスキーマで検証する。
    """

    def __init__(self, registry: SchemaRegistry) -> None:
        self._registry = registry

    def validate(self, name: str, payload: Mapping[str, Any]) -> None:
        """
        Raises:
            SchemaNotFoundError: スキーマが登録されていない場合。
            SchemaValidationError: 検証に失敗した場合（最初のエラーのパスを含む）。
        """

        schema = self._registry.get_schema(name)
        if schema is None:
            raise SchemaNotFoundError(f"スキーマ '{name}' が見つかりません。")
        validator = Draft202012Validator(schema)
        errors = sorted(validator.iter_errors(payload), key=lambda error: list(error.path))
        if errors:
            first = errors[0]
            location = "/".join(str(part) for part in first.path) or "<root>"
            raise SchemaValidationError(f"出力 '{name}' のスキーマ検証に失敗しました ({location}): {first.message}")


def default_schema_root() -> Path:
    return Path(__file__).resolve().parents[3] / "configs" / "schemas"
