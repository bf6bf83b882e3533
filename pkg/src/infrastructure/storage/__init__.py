"""
成果物の入出力層の公開API。
"""

from .filesystem import STDIO, LocalTextStore
from .text_codecs import (
    dump_json,
    format_colouring,
    format_embedding,
    format_graph,
    format_tree,
    parse_colouring,
    parse_dichotomy,
    parse_embedding,
    parse_graph,
    parse_tree,
)

__all__ = [
    "LocalTextStore",
    "STDIO",
    "dump_json",
    "format_colouring",
    "format_embedding",
    "format_graph",
    "format_tree",
    "parse_colouring",
    "parse_dichotomy",
    "parse_embedding",
    "parse_graph",
    "parse_tree",
]
