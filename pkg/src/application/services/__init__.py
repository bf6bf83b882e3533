"""
アプリケーションサービスの公開API。
"""

from .constants import ProofConstants, format_rational, proof_constants
from .degenerate_colouring import (
    SplitResult,
    colour_monotone,
    colour_recursive,
    cross_edge_violations,
    longest_mono_monotone_path,
    split_degenerate,
)
from .lifting import lift_density_threshold, lll_lift, super_edge_counts
from .matching import HopcroftKarp, max_bipartite_matching, minimum_vertex_cover
from .product_ramsey import (
    RAMSEY_NUMBERS,
    aux_colouring,
    build_host,
    chopping_embed,
    find_blue_kss,
    kst_bound,
    ramsey_number_lookup,
)
from .spectral import (
    ExpanderCertificate,
    ExpanderSample,
    Feasibility,
    MixingResidual,
    MixingSweep,
    SampleOutcome,
    adjacency_matrix,
    expander_certificate,
    feasibility,
    generate_expander,
    mixing_check,
    mixing_sweep,
    random_regular,
    second_eigenvalue,
)
from .tree_embedding import embed_tree, fp_expansion_check, tree_or_multipartite
from .verify import find_mono_tree, naive_expansion_ok, validate_dichotomy, validate_embedding

__all__ = [
    "ExpanderCertificate",
    "ExpanderSample",
    "Feasibility",
    "HopcroftKarp",
    "MixingResidual",
    "MixingSweep",
    "ProofConstants",
    "RAMSEY_NUMBERS",
    "SampleOutcome",
    "SplitResult",
    "adjacency_matrix",
    "aux_colouring",
    "build_host",
    "chopping_embed",
    "colour_monotone",
    "colour_recursive",
    "cross_edge_violations",
    "embed_tree",
    "expander_certificate",
    "feasibility",
    "find_blue_kss",
    "find_mono_tree",
    "format_rational",
    "fp_expansion_check",
    "generate_expander",
    "kst_bound",
    "lift_density_threshold",
    "lll_lift",
    "longest_mono_monotone_path",
    "max_bipartite_matching",
    "minimum_vertex_cover",
    "mixing_check",
    "mixing_sweep",
    "naive_expansion_ok",
    "proof_constants",
    "ramsey_number_lookup",
    "random_regular",
    "second_eigenvalue",
    "split_degenerate",
    "super_edge_counts",
    "tree_or_multipartite",
    "validate_dichotomy",
    "validate_embedding",
]
