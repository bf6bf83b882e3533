from __future__ import annotations

import pytest

from application.services import (
    aux_colouring,
    chopping_embed,
    embed_tree,
    find_blue_kss,
    kst_bound,
    ramsey_number_lookup,
    validate_embedding,
)
from domain.errors import InputError, ParameterError, PreconditionError
from domain.models import (
    BlockColouring,
    Colour,
    ConstantColouring,
    Graph,
    RootedTree,
    SeededRandomColouring,
)
from domain.services import bags, strong_product, truncate_with_origin, truncation


@pytest.mark.parametrize(("t", "expected"), [(1, 1), (2, 2), (3, 6), (4, 18)])
def test_ramsey_number_lookup(t: int, expected: int) -> None:
    assert ramsey_number_lookup(t) == expected


def test_ramsey_number_lookup_unknown() -> None:
    with pytest.raises(ParameterError):
        ramsey_number_lookup(5)


def test_kst_bound_values() -> None:
    assert kst_bound(1, 7) == 0
    assert kst_bound(2, 4) == pytest.approx(9.0)


def test_find_blue_kss_on_complete_bipartite() -> None:
    graph = Graph.complete(8)
    colouring = ConstantColouring(graph, Colour.BLUE)

    found = find_blue_kss(graph, colouring, [0, 1, 2, 3], [4, 5, 6, 7], 3)

    assert found == ((0, 1, 2), (4, 5, 6))


def test_find_blue_kss_absent_in_random_sparse_colouring() -> None:
    graph = Graph.complete(8)
    colouring = ConstantColouring(graph, Colour.RED)

    assert find_blue_kss(graph, colouring, [0, 1, 2, 3], [4, 5, 6, 7], 1) is None


def test_find_blue_kss_agrees_with_brute_force() -> None:
    from itertools import combinations

    graph = Graph.complete(12)
    left, right = list(range(6)), list(range(6, 12))
    for seed in range(6):
        colouring = SeededRandomColouring(graph, seed)
        expected = any(
            all(colouring.colour(u, w) is Colour.BLUE for u in us for w in ws)
            for us in combinations(left, 2)
            for ws in combinations(right, 2)
        )
        found = find_blue_kss(graph, colouring, left, right, 2)
        assert (found is not None) == expected
        if found is not None:
            assert all(colouring.colour(u, w) is Colour.BLUE for u in found[0] for w in found[1])


def test_find_blue_kss_rejects_overlap() -> None:
    graph = Graph.complete(4)

    with pytest.raises(InputError):
        find_blue_kss(graph, ConstantColouring(graph, Colour.BLUE), [0, 1], [1, 2], 1)


def test_aux_colouring_follows_blocks() -> None:
    graph = Graph.complete(8)
    colouring = BlockColouring(graph, 4, Colour.BLUE)
    parts = [(0, 1), (2, 3), (4, 5), (6, 7)]

    aux = aux_colouring(graph, parts, colouring, 2)

    assert aux.colour(0, 1) is Colour.BLUE
    assert aux.colour(2, 3) is Colour.BLUE
    assert aux.colour(0, 2) is Colour.RED
    assert aux.count(Colour.BLUE) == 2


def _edge_tree() -> RootedTree:
    return RootedTree(root=0, parent=(0, 0))


@pytest.mark.parametrize("k", [1, 2])
def test_chopping_embed_builds_blue_product(k: int) -> None:
    s = 2 * k
    graph = Graph.complete(5 * s)
    colouring = ConstantColouring(graph, Colour.BLUE)
    parts = [tuple(range(i * s, (i + 1) * s)) for i in range(5)]
    tree = _edge_tree()
    aux = aux_colouring(graph, parts, colouring, s)
    truncated = truncation(tree)
    g = embed_tree(aux.colour_class(Colour.BLUE), truncated, max(1, truncated.max_degree))

    embedding = chopping_embed(graph, parts, colouring, k, tree, g, d=1)

    pattern = strong_product(tree.to_graph(), k)
    assert validate_embedding(pattern, graph, embedding, (colouring, Colour.BLUE)).ok


def test_chopping_embed_on_binary_tree() -> None:
    tree = RootedTree(root=0, parent=(0, 0, 0, 1, 1, 2, 2))
    k, d = 1, 3
    s = (d + d * d) * k
    graph = Graph.complete(7 * s)
    colouring = ConstantColouring(graph, Colour.RED)
    parts = [tuple(range(i * s, (i + 1) * s)) for i in range(7)]
    aux = aux_colouring(graph, parts, colouring, s, colour=Colour.RED)
    truncated = truncation(tree)
    g = embed_tree(aux.colour_class(Colour.RED), truncated, max(1, truncated.max_degree))

    embedding = chopping_embed(graph, parts, colouring, k, tree, g, d=d, colour=Colour.RED)

    assert validate_embedding(tree.to_graph(), graph, embedding, (colouring, Colour.RED)).ok


def test_chopping_embed_places_each_bag_in_one_part() -> None:
    tree = RootedTree(root=0, parent=(0, 0, 1, 2, 3))
    k, d = 2, 2
    s = (d + d * d) * k
    graph = Graph.complete(5 * s)
    colouring = ConstantColouring(graph, Colour.BLUE)
    parts = [tuple(range(i * s, (i + 1) * s)) for i in range(5)]
    aux = aux_colouring(graph, parts, colouring, s)
    truncated, origin = truncate_with_origin(tree)
    g = embed_tree(aux.colour_class(Colour.BLUE), truncated, max(1, truncated.max_degree))

    embedding = chopping_embed(graph, parts, colouring, k, tree, g, d=d)

    part_of = {h: index for index, part in enumerate(parts) for h in part}

    def parts_of(vertices: list[int]) -> set[int]:
        return {part_of[embedding.image[v * k + j]] for v in vertices for j in range(k)}

    tree_bags = bags(tree)
    assert parts_of(list(tree_bags[tree.root])) == {g.image[truncated.root]}
    for x in range(truncated.n):
        if x == truncated.root:
            continue
        head, *rest = tree_bags[origin[x]]
        assert parts_of([head]) == {g.image[truncated.parent[x]]}
        assert parts_of(rest) == {g.image[x]}


def test_chopping_embed_requires_monochromatic_parts() -> None:
    graph = Graph.complete(8)
    colouring = BlockColouring(graph, 2, Colour.RED)
    parts = [(0, 1), (2, 3), (4, 5), (6, 7)]
    tree = _edge_tree()
    g = embed_tree(Graph.complete(4), truncation(tree), 1)

    with pytest.raises(PreconditionError):
        chopping_embed(graph, parts, colouring, 1, tree, g, d=1)
