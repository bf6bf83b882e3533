from __future__ import annotations

import random

import networkx as nx
import pytest

from application.services import (
    lift_density_threshold,
    lll_lift,
    max_bipartite_matching,
    minimum_vertex_cover,
    super_edge_counts,
    validate_embedding,
)
from domain.errors import InputError, LiftFailure, PreconditionError
from domain.models import Graph
from domain.services import blowup
from domain.value_objects import RngSeed


def _random_bipartite(seed: int) -> tuple[list[int], list[int], list[tuple[int, int]]]:
    rng = random.Random(seed)
    left = list(range(12))
    right = list(range(100, 115))
    edges = [(u, w) for u in left for w in right if rng.random() < 0.2]
    return left, right, edges


def test_matching_size_matches_networkx() -> None:
    for seed in range(8):
        left, right, edges = _random_bipartite(seed)
        matching = max_bipartite_matching(left, right, edges)
        graph = nx.Graph(edges)
        graph.add_nodes_from(left)
        graph.add_nodes_from(right)
        expected = nx.bipartite.hopcroft_karp_matching(graph, top_nodes=left)
        assert len(matching) == len(expected) // 2
        assert len(set(matching.values())) == len(matching)
        assert all((u, w) in set(edges) for u, w in matching.items())


def test_matching_allows_overlapping_labels() -> None:
    matching = max_bipartite_matching([0, 1], [0, 1], [(0, 1), (1, 0)])

    assert matching == {0: 1, 1: 0}


def test_vertex_cover_is_minimum_and_covers() -> None:
    for seed in range(8):
        left, right, edges = _random_bipartite(seed)
        matching = max_bipartite_matching(left, right, edges)
        cover_left, cover_right = minimum_vertex_cover(left, right, edges, matching)
        assert len(cover_left) + len(cover_right) == len(matching)
        assert all(u in cover_left or w in cover_right for u, w in edges)


def _thinned_blowup(pattern: Graph, t: int, removed: int, seed: int) -> Graph:
    rng = random.Random(seed)
    full = blowup(pattern, t)
    drop: set[tuple[int, int]] = set()
    for v, w in pattern.edges():
        pairs = [(v * t + i, w * t + j) for i in range(t) for j in range(t)]
        drop.update(rng.sample(pairs, removed))
    return Graph.from_edges(full.n, (edge for edge in full.edges() if edge not in drop))


def test_lift_on_dense_blowup() -> None:
    pattern = Graph.path(6)
    lifted = _thinned_blowup(pattern, 8, 4, seed=1)

    embedding = lll_lift(pattern, lifted, 8, RngSeed(5))

    assert validate_embedding(pattern, lifted, embedding).ok
    assert [h // 8 for h in embedding.image] == list(range(6))


def test_lift_is_deterministic() -> None:
    pattern = Graph.cycle(5)
    lifted = _thinned_blowup(pattern, 8, 3, seed=2)

    assert lll_lift(pattern, lifted, 8, RngSeed(3)) == lll_lift(pattern, lifted, 8, RngSeed(3))


def test_lift_density_threshold_and_counts() -> None:
    pattern = Graph.path(3)
    lifted = _thinned_blowup(pattern, 4, 1, seed=0)

    assert lift_density_threshold(2, 4) == 15
    assert super_edge_counts(pattern, lifted, 4) == {(0, 1): 15, (1, 2): 15}


def test_lift_rejects_sparse_super_edge() -> None:
    pattern = Graph.path(3)
    lifted = _thinned_blowup(pattern, 4, 5, seed=0)

    with pytest.raises(PreconditionError):
        lll_lift(pattern, lifted, 4, RngSeed(0))


def test_lift_gives_up_after_resample_cap() -> None:
    pattern = Graph.path(2)
    lifted = Graph.empty(8)

    with pytest.raises(LiftFailure) as excinfo:
        lll_lift(pattern, lifted, 4, RngSeed(0), resample_cap=5, check_density=False)

    assert excinfo.value.resamples == 5
    assert excinfo.value.statistics["violated_edges"] == 1


def test_lift_rejects_wrong_vertex_count() -> None:
    with pytest.raises(InputError):
        lll_lift(Graph.path(2), Graph.empty(5), 2, RngSeed(0))
