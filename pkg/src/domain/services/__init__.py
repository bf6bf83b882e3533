"""
ドメインサービスの公開API。
"""

from .constructions import (
    bags,
    bfs_distances,
    blowup,
    complete_dary_tree,
    graph_power,
    random_tree,
    strong_product,
    truncate_with_origin,
    truncation,
)
from .degeneracy import (
    AcyclicOrientation,
    degeneracy_ordering,
    greedy_proper_colouring,
    orient_acyclic,
    subgraph_degeneracy,
)

__all__ = [
    "AcyclicOrientation",
    "bags",
    "bfs_distances",
    "blowup",
    "complete_dary_tree",
    "degeneracy_ordering",
    "graph_power",
    "greedy_proper_colouring",
    "orient_acyclic",
    "random_tree",
    "strong_product",
    "subgraph_degeneracy",
    "truncate_with_origin",
    "truncation",
]
