"""
決定的なグラフ構成（完全 d 分木・切り詰め・ストロング積・ブローアップ・グラフ冪）と、
切り詰め木の袋の構成。
"""

from __future__ import annotations

from collections import deque

from domain.errors import ParameterError, SizeError
from domain.models import Bags, Graph, RootedTree
from domain.models.rooted_tree import MAX_VERTEX_COUNT
from domain.value_objects import RngSeed


def complete_dary_tree(d: int, h: int) -> RootedTree:
    """
    完全 d 分木 T_{d,h}。頂点は BFS 順に番号付けし、i の子は d·i+1..d·i+d。

    Raises:
        ParameterError: d < 1 または h < 0 の場合。
        SizeError: 頂点数がプラットフォーム上限を超える場合。
    """

    if d < 1:
        raise ParameterError("d は 1 以上である必要があります。")
    if h < 0:
        raise ParameterError("h は 0 以上である必要があります。")
    count = h + 1 if d == 1 else (d ** (h + 1) - 1) // (d - 1)
    if count > MAX_VERTEX_COUNT:
        raise SizeError(f"T_{{{d},{h}}} の頂点数 {count} が上限 {MAX_VERTEX_COUNT} を超えます。")
    parent = tuple(0 if i == 0 else (i - 1) // d for i in range(count))
    return RootedTree(root=0, parent=parent)


def truncate_with_origin(tree: RootedTree) -> tuple[RootedTree, tuple[int, ...]]:
    """
    切り詰め T' と、T' の頂点から T の頂点への対応を返す。

    T' の頂点は根と奇数レベルの頂点で、T の BFS 順に番号付けする（根が 0）。
    奇数レベルの頂点 v の T' における親は p²_T(v)。
    """

    depth = tree.depth
    origin = tuple(v for v in tree.bfs_order() if v == tree.root or depth[v] % 2 == 1)
    index = {v: i for i, v in enumerate(origin)}
    parent = tuple(
        0 if v == tree.root else index[tree.grandparent(v)] for v in origin
    )
    return RootedTree(root=0, parent=parent), origin


def truncation(tree: RootedTree) -> RootedTree:
    return truncate_with_origin(tree)[0]


def bags(tree: RootedTree) -> Bags:
    """T' の頂点（T の頂点番号）ごとの袋 B_x。"""

    depth = tree.depth
    result: dict[int, tuple[int, ...]] = {tree.root: (tree.root,)}
    for v in range(tree.n):
        if depth[v] % 2 == 1:
            result[v] = (v, *tree.children[v])
    return Bags(root=tree.root, bags=result)


def strong_product(graph: Graph, k: int) -> Graph:
    """G ⊠ K_k。頂点 (v, j) を v·k + j で符号化する。"""

    if k < 1:
        raise ParameterError("k は 1 以上である必要があります。")
    if k == 1:
        return graph
    adjacency: list[tuple[int, ...]] = []
    for v in range(graph.n):
        blocks = sorted((*graph.neighbours(v), v))
        for slot in range(k):
            own = v * k + slot
            adjacency.append(
                tuple(w * k + j for w in blocks for j in range(k) if w * k + j != own)
            )
    return Graph(tuple(adjacency))


def blowup(graph: Graph, t: int) -> Graph:
    """F(t)。頂点 v を独立集合 I(v) = {v·t, ..., v·t + t − 1} に置き換える。"""

    if t < 1:
        raise ParameterError("t は 1 以上である必要があります。")
    if t == 1:
        return graph
    adjacency: list[tuple[int, ...]] = []
    for v in range(graph.n):
        row = tuple(w * t + j for w in graph.neighbours(v) for j in range(t))
        adjacency.extend(row for _ in range(t))
    return Graph(tuple(adjacency))


def graph_power(graph: Graph, p: int) -> Graph:
    """H^p。距離 1..p の頂点対を辺とする。各頂点から深さ p で打ち切った BFS で求める。"""

    if p < 1:
        raise ParameterError("p は 1 以上である必要があります。")
    if p == 1:
        return graph
    adjacency: list[tuple[int, ...]] = []
    for source in range(graph.n):
        distance = bfs_distances(graph, source, limit=p)
        del distance[source]
        adjacency.append(tuple(sorted(distance)))
    return Graph(tuple(adjacency))


def bfs_distances(graph: Graph, source: int, *, limit: int | None = None) -> dict[int, int]:
    distance = {source: 0}
    queue = deque([source])
    while queue:
        v = queue.popleft()
        if limit is not None and distance[v] >= limit:
            continue
        for w in graph.neighbours(v):
            if w not in distance:
                distance[w] = distance[v] + 1
                queue.append(w)
    return distance


def random_tree(n: int, d: int, seed: RngSeed) -> RootedTree:
    """
    𝒯ₙ,d から一様付着で木を 1 つ抽出する。頂点 i は次数 d 未満の既存頂点に付く。
    """

    if n < 1:
        raise ParameterError("n は 1 以上である必要があります。")
    if d < 1 or (d == 1 and n > 2):
        raise ParameterError(f"最大次数 {d} の木は {n} 頂点を持てません。")
    rng = seed.generator()
    degree = [0] * n
    parent = [0] * n
    open_vertices = [0]
    for v in range(1, n):
        slot = int(rng.integers(len(open_vertices)))
        p = open_vertices[slot]
        parent[v] = p
        degree[p] += 1
        degree[v] = 1
        if degree[p] >= d:
            open_vertices[slot] = open_vertices[-1]
            open_vertices.pop()
        if degree[v] < d:
            open_vertices.append(v)
    return RootedTree(root=0, parent=tuple(parent))


__all__ = [
    "bags",
    "bfs_distances",
    "blowup",
    "complete_dary_tree",
    "graph_power",
    "random_tree",
    "strong_product",
    "truncate_with_origin",
    "truncation",
]
