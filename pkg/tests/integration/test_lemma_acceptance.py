from __future__ import annotations

import random
from itertools import combinations

import pytest

from application.services import (
    embed_tree,
    find_mono_tree,
    fp_expansion_check,
    generate_expander,
    kst_bound,
    lift_density_threshold,
    lll_lift,
    max_bipartite_matching,
    minimum_vertex_cover,
    mixing_sweep,
    naive_expansion_ok,
    super_edge_counts,
    tree_or_multipartite,
    validate_dichotomy,
    validate_embedding,
)
from domain.errors import GenerationError
from domain.models import Colour, ConstantColouring, Graph, RootedTree, SeededRandomColouring
from domain.services import blowup, complete_dary_tree
from domain.value_objects import RngSeed

SMALL_TREES = (
    RootedTree(root=0, parent=(0,)),
    RootedTree(root=0, parent=(0, 0)),
    RootedTree(root=0, parent=(0, 0, 1)),
    RootedTree(root=0, parent=(0, 0, 1, 2)),
    RootedTree(root=0, parent=(0, 0, 0, 0)),
)


def _random_graph(seed: int) -> Graph:
    rng = random.Random(seed)
    n = rng.randint(2, 9)
    return Graph.from_edges(n, [(u, v) for u, v in combinations(range(n), 2) if rng.random() < 0.5])


def _thinned_blowup(pattern: Graph, t: int, removed: int, seed: int) -> Graph:
    rng = random.Random(seed)
    full = blowup(pattern, t)
    drop: set[tuple[int, int]] = set()
    for v, w in pattern.edges():
        pairs = [(v * t + i, w * t + j) for i in range(t) for j in range(t)]
        drop.update(rng.sample(pairs, removed))
    return Graph.from_edges(full.n, (edge for edge in full.edges() if edge not in drop))


def _c4_free_bipartite(t: int, seed: int) -> list[tuple[int, int]]:
    """左 0..t−1、右 t..2t−1 の K_{2,2} を含まない乱択二部グラフ。"""

    rng = random.Random(seed)
    pairs = [(u, w) for u in range(t) for w in range(t, 2 * t) if rng.random() < 0.7]
    rng.shuffle(pairs)
    left_of: dict[int, set[int]] = {w: set() for w in range(t, 2 * t)}
    right_of: dict[int, set[int]] = {u: set() for u in range(t)}
    edges: list[tuple[int, int]] = []
    for u, w in pairs:
        if any(right_of[other] & right_of[u] for other in left_of[w]):
            continue
        edges.append((u, w))
        left_of[w].add(u)
        right_of[u].add(w)
    return edges


def _has_k22(edges: list[tuple[int, int]], t: int) -> bool:
    neighbours: dict[int, set[int]] = {u: set() for u in range(t)}
    for u, w in edges:
        neighbours[u].add(w)
    return any(len(neighbours[a] & neighbours[b]) >= 2 for a, b in combinations(range(t), 2))


@pytest.mark.slow
def test_random_regular_graphs_are_mostly_ramanujan_and_mix() -> None:
    accepted = []
    for seed in range(20):
        try:
            sample = generate_expander(400, 8, RngSeed(seed))
        except GenerationError:
            continue
        if sample.profile.lambda_ <= sample.profile.ramanujan_threshold:
            accepted.append(sample)

    assert len(accepted) >= 18
    sweep = mixing_sweep(accepted[0].graph, accepted[0].profile, 10**5, RngSeed(0))
    assert sweep.pairs == 10**5
    assert sweep.violations == 0


@pytest.mark.slow
def test_expansion_certificate_guarantees_every_small_tree() -> None:
    certified = 0
    for seed in range(10**4):
        graph = _random_graph(seed)
        for tree in SMALL_TREES:
            d = max(1, tree.max_degree)
            check = fp_expansion_check(graph, tree.n, d)
            assert check.ok == naive_expansion_ok(graph, tree.n, d)
            if check.ok:
                certified += 1
                embedding = embed_tree(graph, tree, d)
                assert validate_embedding(tree.to_graph(), graph, embedding).ok

    assert certified > 0


@pytest.mark.slow
@pytest.mark.parametrize("seed", range(50))
def test_dichotomy_certificates_on_random_complete_colourings(seed: int) -> None:
    colouring = SeededRandomColouring(Graph.complete(200), seed)

    outcome = tree_or_multipartite(colouring, 2, 2, 2)

    assert validate_dichotomy(colouring, 2, 2, 2, outcome).ok


@pytest.mark.parametrize("seed", range(50))
def test_lift_succeeds_at_exact_density_threshold(seed: int) -> None:
    pattern = Graph.complete(4)
    t = 24
    lifted = _thinned_blowup(pattern, t, t, seed)
    threshold = lift_density_threshold(3, t)

    assert set(super_edge_counts(pattern, lifted, t).values()) == {threshold}
    embedding = lll_lift(pattern, lifted, t, RngSeed(seed))
    assert validate_embedding(pattern, lifted, embedding).ok


@pytest.mark.parametrize("seed", range(200))
def test_square_free_bipartite_graphs_respect_kst_bound(seed: int) -> None:
    t = 2 + seed % 11
    edges = _c4_free_bipartite(t, seed)

    assert not _has_k22(edges, t)
    assert len(edges) <= kst_bound(2, 2 * t)


@pytest.mark.parametrize("seed", range(20))
def test_matching_size_equals_brute_force_vertex_cover(seed: int) -> None:
    rng = random.Random(seed)
    left, right = list(range(6)), list(range(6, 12))
    edges = [(u, w) for u in left for w in right if rng.random() < 0.3]
    vertices = left + right

    matching = max_bipartite_matching(left, right, edges)
    cover_left, cover_right = minimum_vertex_cover(left, right, edges, matching)

    smallest = next(
        size
        for size in range(len(vertices) + 1)
        if any(
            all(u in chosen or w in chosen for u, w in edges)
            for chosen in map(set, combinations(vertices, size))
        )
    )
    assert len(matching) == smallest
    assert len(cover_left) + len(cover_right) == smallest


def test_all_red_k7_contains_binary_tree_of_height_two() -> None:
    graph = Graph.complete(7)
    colouring = ConstantColouring(graph, Colour.RED)
    tree = complete_dary_tree(2, 2)

    embedding = find_mono_tree(graph, colouring, Colour.RED, tree)

    assert embedding is not None
    assert validate_embedding(tree.to_graph(), graph, embedding, (colouring, Colour.RED)).ok
    assert find_mono_tree(graph, colouring, Colour.BLUE, tree) is None
