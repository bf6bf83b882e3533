from __future__ import annotations

import random

import networkx as nx
import pytest

from domain.errors import InputError, ParameterError
from domain.models import Graph, ProductVertex, RootedTree
from domain.services import (
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
from domain.value_objects import RngSeed


def _path_tree(n: int) -> RootedTree:
    return RootedTree(root=0, parent=tuple(max(0, v - 1) for v in range(n)))


def _random_graph(n: int, p: float, seed: int) -> Graph:
    rng = random.Random(seed)
    return Graph.from_edges(n, ((u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p))


def _to_nx(graph: Graph) -> nx.Graph:
    result = nx.Graph()
    result.add_nodes_from(range(graph.n))
    result.add_edges_from(graph.edges())
    return result


def test_graph_rejects_asymmetric_adjacency() -> None:
    with pytest.raises(InputError):
        Graph(((1,), ()))


def test_graph_from_edges_merges_duplicates_and_sorts() -> None:
    graph = Graph.from_edges(3, [(2, 0), (0, 2), (1, 2)])

    assert graph.adjacency == ((2,), (2,), (0, 1))
    assert graph.edge_count == 2
    assert list(graph.edges()) == [(0, 2), (1, 2)]


def test_complete_dary_tree_star() -> None:
    tree = complete_dary_tree(2, 1)

    assert tree.n == 3
    assert tree.degree(tree.root) == 2


def test_complete_dary_tree_unary_is_path() -> None:
    tree = complete_dary_tree(1, 5)

    assert tree.n == 6
    assert tree.to_graph() == Graph.path(6)


def test_complete_dary_tree_counts() -> None:
    tree = complete_dary_tree(4, 2)

    assert tree.n == 21
    assert sum(1 for v in range(tree.n) if tree.is_leaf(v)) == 16
    assert all(tree.depth[v] == 2 for v in range(tree.n) if tree.is_leaf(v))
    assert all(len(tree.children[v]) in (0, 4) for v in range(tree.n))


@pytest.mark.parametrize(("d", "h"), [(0, 1), (2, -1)])
def test_complete_dary_tree_rejects_bad_parameters(d: int, h: int) -> None:
    with pytest.raises(ParameterError):
        complete_dary_tree(d, h)


def test_children_sum_to_edge_count() -> None:
    for seed in range(20):
        tree = random_tree(30, 3, RngSeed(seed))
        assert sum(len(c) for c in tree.children) == tree.n - 1
        assert tree.max_degree <= 3


def test_truncation_of_path() -> None:
    truncated, origin = truncate_with_origin(_path_tree(5))

    assert origin == (0, 1, 3)
    assert truncated.edges() == ((0, 1), (1, 2))


def test_truncation_of_single_vertex() -> None:
    assert truncation(RootedTree.single_vertex()).n == 1


def test_truncation_of_binary_tree_is_star() -> None:
    truncated, origin = truncate_with_origin(complete_dary_tree(2, 2))

    assert origin == (0, 1, 2)
    assert truncated.children[0] == (1, 2)


def test_truncation_edges_have_tree_distance_two_except_at_root() -> None:
    for seed in range(10):
        tree = random_tree(40, 3, RngSeed(seed))
        truncated, origin = truncate_with_origin(tree)
        assert truncated.max_degree <= 9
        graph = tree.to_graph()
        for x, y in truncated.edges():
            u, v = origin[x], origin[y]
            distance = bfs_distances(graph, u)[v]
            if tree.root in (u, v):
                assert distance == 1
            else:
                assert distance == 2
                assert tree.depth[u] % 2 == 1 and tree.depth[v] % 2 == 1


def test_bags_cover_every_vertex_once() -> None:
    tree = random_tree(25, 3, RngSeed(4))
    result = bags(tree)

    assert result[tree.root] == (tree.root,)
    assert result.covered() == set(range(tree.n))


def test_strong_product_of_edge_is_k4() -> None:
    assert strong_product(Graph.path(2), 2) == Graph.complete(4)


def test_strong_product_identity() -> None:
    graph = Graph.cycle(5)

    assert strong_product(graph, 1) is graph


def test_strong_product_path_edge_count() -> None:
    product = strong_product(Graph.path(3), 2)

    assert product.n == 6
    assert product.edge_count == 11


def test_strong_product_matches_networkx() -> None:
    for seed in range(5):
        graph = _random_graph(9, 0.4, seed)
        k = 3
        product = strong_product(graph, k)
        expected = nx.strong_product(_to_nx(graph), nx.complete_graph(k))
        assert product.edge_count == k * k * graph.edge_count + graph.n * k * (k - 1) // 2
        assert product.edge_count == expected.number_of_edges()
        for (a, i), (b, j) in expected.edges():
            assert product.has_edge(ProductVertex(a, i).encode(k), ProductVertex(b, j).encode(k))


def test_product_vertex_round_trip() -> None:
    assert ProductVertex.decode(ProductVertex(7, 2).encode(3), 3) == ProductVertex(7, 2)


def test_blowup_cases() -> None:
    assert blowup(Graph.path(2), 2) == Graph.complete_bipartite(2, 2)
    path = Graph.path(3)
    assert blowup(path, 1) is path
    blown = blowup(path, 3)
    assert blown.n == 9
    assert blown.edge_count == 18
    assert not blown.has_edge(0, 1)


def test_graph_power_cases() -> None:
    assert graph_power(Graph.path(4), 2).edge_count == 5
    cycle = Graph.cycle(5)
    assert graph_power(cycle, 1) is cycle
    assert graph_power(cycle, 3) == Graph.complete(5)


def test_graph_power_matches_networkx() -> None:
    graph = _random_graph(20, 0.12, 3)
    expected = nx.power(_to_nx(graph), 3)

    assert set(graph_power(graph, 3).edges()) == {tuple(sorted(e)) for e in expected.edges()}


def test_random_tree_is_deterministic() -> None:
    assert random_tree(15, 3, RngSeed(9)) == random_tree(15, 3, RngSeed(9))
