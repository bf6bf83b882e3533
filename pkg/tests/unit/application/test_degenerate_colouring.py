from __future__ import annotations

import random

import pytest

from application.services import (
    colour_monotone,
    colour_recursive,
    cross_edge_violations,
    find_mono_tree,
    longest_mono_monotone_path,
    split_degenerate,
)
from domain.errors import ParameterError, PreconditionError
from domain.models import Colour, EdgeColouring, Graph, RootedTree, TableColouring
from domain.services import (
    complete_dary_tree,
    degeneracy_ordering,
    random_tree,
    subgraph_degeneracy,
)
from domain.value_objects import RngSeed


def _degenerate_graph(n: int, d: int, seed: int) -> Graph:
    """各頂点が前の頂点から高々 d 個を選んで隣接する d-縮退グラフ。"""

    rng = random.Random(seed)
    edges = []
    for v in range(1, n):
        for w in rng.sample(range(v), min(d, v)):
            edges.append((w, v))
    return Graph.from_edges(n, edges)


def test_recursive_colouring_of_forest_avoids_height_two_tree() -> None:
    host = complete_dary_tree(4, 3).to_graph()
    colouring = colour_recursive(host, 1)
    target = complete_dary_tree(4, 2)

    for colour in Colour:
        assert find_mono_tree(host, colouring, colour, target) is None
    cherry = RootedTree(root=0, parent=(0, 0, 0))
    assert find_mono_tree(host, colouring, Colour.RED, cherry) is not None


def test_recursive_colouring_covers_every_edge() -> None:
    graph = _degenerate_graph(60, 3, 1)

    colouring = colour_recursive(graph, 2)

    assert colouring.count(Colour.RED) + colouring.count(Colour.BLUE) == graph.edge_count


def test_recursive_cross_edges_inherit_source_side() -> None:
    graph = _degenerate_graph(50, 3, 4)
    ordering, _ = degeneracy_ordering(graph)
    split = split_degenerate(graph, 4, ordering)

    colouring = colour_recursive(graph, 2)

    assert cross_edge_violations(graph, ordering, split, colouring) == []
    assert split.red | split.blue == frozenset(range(graph.n))


def test_split_parts_have_small_back_degree() -> None:
    graph = _degenerate_graph(80, 7, 2)
    ordering, _ = degeneracy_ordering(graph)
    split = split_degenerate(graph, 8, ordering)
    position = ordering.position

    for part in (split.red, split.blue):
        for v in part:
            back = sum(1 for w in graph.neighbours(v) if w in part and position[w] < position[v])
            assert back <= 3


def test_split_rejects_odd_degree() -> None:
    graph = Graph.cycle(4)
    ordering, _ = degeneracy_ordering(graph)

    with pytest.raises(ParameterError):
        split_degenerate(graph, 3, ordering)


def test_recursive_rejects_too_dense_graph() -> None:
    with pytest.raises(PreconditionError, match="4"):
        colour_recursive(Graph.complete(5), 2)


def test_recursive_rejects_bad_level() -> None:
    with pytest.raises(ParameterError):
        colour_recursive(Graph.path(3), 0)


@pytest.mark.parametrize("seed", range(5))
def test_monotone_colouring_bounds_monotone_paths(seed: int) -> None:
    graph = _degenerate_graph(70, 4, seed)
    ordering, degeneracy = degeneracy_ordering(graph)

    colouring = colour_monotone(graph, ordering)
    lengths = longest_mono_monotone_path(graph, ordering, colouring)

    assert max(lengths.values()) <= degeneracy + 1


def test_monotone_colouring_of_complete_graph() -> None:
    graph = Graph.complete(6)
    ordering, degeneracy = degeneracy_ordering(graph)

    colouring = colour_monotone(graph, ordering)

    assert degeneracy == 5
    assert colouring.count(Colour.RED) == graph.edge_count
    assert longest_mono_monotone_path(graph, ordering, colouring)[Colour.RED] == 6


def test_monotone_colouring_on_forest() -> None:
    graph = random_tree(40, 3, RngSeed(0)).to_graph()
    ordering, degeneracy = degeneracy_ordering(graph)

    lengths = longest_mono_monotone_path(graph, ordering, colour_monotone(graph, ordering))

    assert degeneracy == 1
    assert max(lengths.values()) <= 2


def _random_forest(n: int, seed: int) -> Graph:
    rng = random.Random(seed)
    edges = [(rng.randrange(v), v) for v in range(1, n) if rng.random() < 0.95]
    return Graph.from_edges(n, edges)


def _restricted(graph: Graph, colouring: EdgeColouring, part: frozenset[int]) -> tuple[Graph, TableColouring]:
    sub, ids = graph.induced_subgraph(sorted(part))
    table = {(a, b): colouring.colour(ids[a], ids[b]) for a, b in sub.edges()}
    return sub, TableColouring(sub, table)


@pytest.mark.parametrize("seed", range(100))
def test_monotone_paths_stay_short_on_degenerate_graphs(seed: int) -> None:
    d = 2 + seed % 3
    graph = _degenerate_graph(100 + 2 * seed, d, seed)
    ordering, degeneracy = degeneracy_ordering(graph)

    lengths = longest_mono_monotone_path(graph, ordering, colour_monotone(graph, ordering))

    assert degeneracy <= d
    assert max(lengths.values()) <= d + 1


@pytest.mark.parametrize("seed", range(25))
def test_monotone_colouring_avoids_ternary_tree_of_height_three(seed: int) -> None:
    graph = _degenerate_graph(96 + seed, 2, 1000 + seed)
    ordering, _ = degeneracy_ordering(graph)
    colouring = colour_monotone(graph, ordering)
    target = complete_dary_tree(3, 3)

    for colour in Colour:
        assert find_mono_tree(graph, colouring, colour, target) is None


@pytest.mark.parametrize("d", [4, 8])
@pytest.mark.parametrize("seed", range(50))
def test_split_parts_are_half_degenerate(d: int, seed: int) -> None:
    graph = _degenerate_graph(40 + seed, d - 1, seed)
    ordering, _ = degeneracy_ordering(graph)

    split = split_degenerate(graph, d, ordering)

    assert split.red | split.blue == frozenset(range(graph.n))
    for part in (split.red, split.blue):
        if part:
            assert subgraph_degeneracy(graph, part) <= d // 2 - 1


@pytest.mark.parametrize("seed", range(100))
def test_recursive_colouring_of_forests_has_no_mono_three_edge_path(seed: int) -> None:
    graph = _random_forest(20 * (seed + 1), seed)
    colouring = colour_recursive(graph, 1)
    path = RootedTree(root=0, parent=(0, 0, 1, 2))

    for colour in Colour:
        assert find_mono_tree(graph, colouring, colour, path) is None


@pytest.mark.parametrize("seed", range(50))
def test_recursive_colouring_parts_avoid_mono_quaternary_tree(seed: int) -> None:
    graph = _degenerate_graph(50 + seed % 31, 3, 500 + seed)
    ordering, _ = degeneracy_ordering(graph)
    split = split_degenerate(graph, 4, ordering)
    target = complete_dary_tree(4, 2)

    colouring = colour_recursive(graph, 2)

    assert cross_edge_violations(graph, ordering, split, colouring) == []
    for part in (split.red, split.blue):
        if not part:
            continue
        sub, restricted = _restricted(graph, colouring, part)
        for colour in Colour:
            assert find_mono_tree(sub, restricted, colour, target) is None
