"""
インフラ層のパッケージ初期化。
"""

from .schemas import JsonSchemaRegistry, OutputValidator, SchemaRegistry, SchemaValidationError
from .storage import LocalTextStore

__all__ = [
    "JsonSchemaRegistry",
    "LocalTextStore",
    "OutputValidator",
    "SchemaRegistry",
    "SchemaValidationError",
]
