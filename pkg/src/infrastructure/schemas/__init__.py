"""
出力スキーマ関連の公開API。
"""

from .registry import (
    JsonSchemaRegistry,
    OutputValidator,
    SchemaNotFoundError,
    SchemaRegistry,
    SchemaValidationError,
    default_schema_root,
)

__all__ = [
    "JsonSchemaRegistry",
    "OutputValidator",
    "SchemaNotFoundError",
    "SchemaRegistry",
    "SchemaValidationError",
    "default_schema_root",
]
