"""
ドメインエンティティの公開API。
"""

from .certificates import (
    BlueExpansion,
    Dichotomy,
    ExpansionCheck,
    RedMultipartite,
    Report,
    StageResult,
    StepFailure,
    Violation,
    Witness,
)
from .colouring import (
    BlockColouring,
    Colour,
    ConstantColouring,
    EdgeColouring,
    SeededRandomColouring,
    TableColouring,
)
from .embedding import Embedding
from .graph import Graph
from .host import Bags, PartitionedHost
from .ordering import Ordering, ProductVertex
from .rooted_tree import MAX_VERTEX_COUNT, RootedTree

__all__ = [
    "Bags",
    "BlockColouring",
    "BlueExpansion",
    "Colour",
    "ConstantColouring",
    "Dichotomy",
    "EdgeColouring",
    "Embedding",
    "ExpansionCheck",
    "Graph",
    "MAX_VERTEX_COUNT",
    "Ordering",
    "PartitionedHost",
    "ProductVertex",
    "RedMultipartite",
    "Report",
    "RootedTree",
    "SeededRandomColouring",
    "StageResult",
    "StepFailure",
    "TableColouring",
    "Violation",
    "Witness",
]
