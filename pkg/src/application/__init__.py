"""
アプリケーション層パッケージ初期化。
"""

from .services import (
    build_host,
    chopping_embed,
    colour_monotone,
    colour_recursive,
    embed_tree,
    generate_expander,
    lll_lift,
    proof_constants,
    tree_or_multipartite,
    validate_embedding,
)
from .usecases import PipelineRequest, RamseyPipeline

__all__ = [
    "PipelineRequest",
    "RamseyPipeline",
    "build_host",
    "chopping_embed",
    "colour_monotone",
    "colour_recursive",
    "embed_tree",
    "generate_expander",
    "lll_lift",
    "proof_constants",
    "tree_or_multipartite",
    "validate_embedding",
]
