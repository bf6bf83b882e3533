"""
生成側のコードを信用しない独立した検証器と総当たりオラクル。

グラフ・木などのドメイン型以外は生成側と処理経路を共有しない。
"""

from __future__ import annotations

import logging
import math
from collections import Counter, deque
from itertools import combinations
from typing import Sequence

from application.observability import metrics_recorder
from domain.errors import BudgetExceededError
from domain.models import (
    BlueExpansion,
    Colour,
    Dichotomy,
    EdgeColouring,
    Embedding,
    Graph,
    RedMultipartite,
    Report,
    RootedTree,
    Violation,
)

logger = logging.getLogger("ramsey_forge.verify")


def validate_embedding(
    pattern: Graph,
    host: Graph,
    embedding: Embedding,
    colour_filter: tuple[EdgeColouring, Colour] | None = None,
) -> Report:
    """
    単射性と辺の保存（指定時は色の一致も）を検査し、違反を全て列挙する。
    """

    violations: list[Violation] = []
    image = embedding.image
    if len(image) != pattern.n:
        violations.append(
            Violation("size", detail=f"像の長さ {len(image)} がパターンの頂点数 {pattern.n} と異なります")
        )
        return Report(violations=tuple(violations), stats={"pattern_vertices": pattern.n})
    for x, h in enumerate(image):
        if not 0 <= h < host.n:
            violations.append(Violation("out-of-range", (x, h)))
    if violations:
        return Report(violations=tuple(violations), stats={"pattern_vertices": pattern.n})

    for h, count in Counter(image).items():
        if count > 1:
            preimage = tuple(x for x, y in enumerate(image) if y == h)
            violations.append(Violation("non-injective", preimage, f"{count} 頂点が {h} に写ります"))

    host_sets = host.neighbour_sets
    checked = 0
    for u in range(pattern.n):
        for v in pattern.neighbours(u):
            if v < u:
                continue
            checked += 1
            a, b = image[u], image[v]
            if b not in host_sets[a]:
                violations.append(Violation("missing-edge", (u, v), f"ホスト辺 ({a}, {b}) が存在しません"))
            elif colour_filter is not None:
                colouring, expected = colour_filter
                actual = colouring.colour(a, b)
                if actual is not expected:
                    violations.append(
                        Violation("wrong-colour", (u, v), f"ホスト辺 ({a}, {b}) は {actual.label} です")
                    )
    return Report(
        violations=tuple(violations),
        stats={"pattern_vertices": pattern.n, "pattern_edges": checked},
    )


def _colour_adjacency(colouring: EdgeColouring, colour: Colour) -> list[list[int]]:
    graph = colouring.graph
    return [
        [v for v in graph.neighbours(u) if colouring.colour(u, v) is colour] for u in range(graph.n)
    ]


def _children_fit(children_options: Sequence[set[int]], neighbours: Sequence[int]) -> bool:
    """子をそれぞれ相異なる近傍へ割り当てられるか（Kuhn の増加路法）。"""

    owner: dict[int, int] = {}

    def augment(child: int, seen: set[int]) -> bool:
        for w in neighbours:
            if w in children_options[child] and w not in seen:
                seen.add(w)
                if w not in owner or augment(owner[w], seen):
                    owner[w] = child
                    return True
        return False

    return all(augment(child, set()) for child in range(len(children_options)))


def find_mono_tree(
    graph: Graph,
    colouring: EdgeColouring,
    colour: Colour,
    tree: RootedTree,
    *,
    node_budget: int = 10**9,
) -> Embedding | None:
    """
    指定色の辺だけを使う T のコピーを完全探索する。存在しなければ None。

    各パターン頂点について、その部分木を根付きで受け入れ可能なホスト頂点の集合を
    葉から順に求め（子を相異なる近傍に割り当てられることを要求）、
    BFS 順のバックトラックではその集合に候補を限定する。

    Raises:
        BudgetExceededError: 探索ノード数が予算を超え、存否を判定できなかった場合。
    """

    adjacency = _colour_adjacency(colouring, colour)
    order = tree.bfs_order()
    children = tree.children
    feasible: list[set[int]] = [set() for _ in range(tree.n)]
    for x in reversed(order):
        need = tree.degree(x)
        for h in range(graph.n):
            if len(adjacency[h]) < need:
                continue
            options = [feasible[c] for c in children[x]]
            if _children_fit(options, adjacency[h]):
                feasible[x].add(h)
    if not feasible[tree.root]:
        return None

    colour_degree = [len(row) for row in adjacency]
    adjacency_sets = [set(row) for row in adjacency]
    parent = tree.parent
    used: set[int] = set()
    image = [-1] * tree.n

    def candidates(position: int) -> list[int]:
        x = order[position]
        if position == 0:
            pool = feasible[x]
        else:
            pool = feasible[x] & adjacency_sets[image[parent[x]]]
        return sorted((h for h in pool if h not in used), key=lambda h: (-colour_degree[h], h))

    frames: deque[tuple[list[int], int]] = deque()
    frames.append((candidates(0), 0))
    nodes = 0
    try:
        while frames:
            options, cursor = frames.pop()
            position = len(frames)
            x = order[position]
            if image[x] >= 0:
                used.discard(image[x])
                image[x] = -1
            if cursor >= len(options):
                continue
            h = options[cursor]
            frames.append((options, cursor + 1))
            nodes += 1
            if nodes > node_budget:
                raise BudgetExceededError(
                    "単色木の探索がノード予算を超えました（存否は不明）。",
                    budget=node_budget,
                    explored=nodes,
                )
            image[x] = h
            used.add(h)
            if position == tree.n - 1:
                return Embedding(tuple(image))
            frames.append((candidates(position + 1), 0))
        return None
    finally:
        metrics_recorder().increment_search_nodes("find_mono_tree", nodes)
        logger.debug("find_mono_tree explored %s nodes", nodes)


def _naive_expansion_violations(
    adjacency: Sequence[set[int]],
    vertices: Sequence[int],
    max_size: int,
    d: int,
    budget: int,
) -> tuple[list[tuple[int, ...]], int]:
    """二重ループによる素朴な部分集合オラクル。違反集合を最大 1 個返す。"""

    inside = set(vertices)
    limit = min(max_size, len(vertices))
    total = sum(math.comb(len(vertices), j) for j in range(1, limit + 1))
    if total > budget:
        raise BudgetExceededError("拡張性の素朴な検証が予算を超えます。", budget=budget, explored=0)
    examined = 0
    for size in range(1, limit + 1):
        for chosen in combinations(vertices, size):
            examined += 1
            reached: set[int] = set()
            for v in chosen:
                for w in adjacency[v]:
                    if w in inside:
                        reached.add(w)
            if len(reached) < (d + 1) * size:
                return [chosen], examined
    return [], examined


def naive_expansion_ok(graph: Graph, n: int, d: int) -> bool:
    """1 ≤ |X| ≤ 2n−2 の全 X を素朴に調べる小規模用オラクル。"""

    adjacency = [set(graph.neighbours(v)) for v in range(graph.n)]
    found, _ = _naive_expansion_violations(adjacency, tuple(range(graph.n)), 2 * n - 2, d, 2**62)
    return not found


def validate_dichotomy(
    colouring: EdgeColouring,
    n: int,
    d: int,
    q: int,
    outcome: Dichotomy,
    *,
    colour: Colour = Colour.BLUE,
    subset_budget: int = 10**7,
) -> Report:
    """
    二分法の結果を再検査する。多部側は部のサイズ・互いに素・部間の色を、
    拡張側は ``colour`` のクラスの拡張性を素朴な部分集合列挙で確認する。
    """

    graph = colouring.graph
    total = graph.n
    violations: list[Violation] = []
    if isinstance(outcome, RedMultipartite):
        cross = colour.other
        if len(outcome.parts) != q:
            violations.append(Violation("part-count", detail=f"{len(outcome.parts)} 部 (期待値 {q})"))
        minimum = math.ceil(total / (5 * d * q))
        owner: dict[int, int] = {}
        for index, part in enumerate(outcome.parts):
            if len(part) < minimum:
                violations.append(
                    Violation("part-size", (index,), f"|Y_{index + 1}| = {len(part)} < {minimum}")
                )
            for v in part:
                if v in owner:
                    violations.append(Violation("overlap", (v,), f"部 {owner[v]} と {index} が重複"))
                owner[v] = index
        pairs = 0
        for i, j in combinations(range(len(outcome.parts)), 2):
            for u in outcome.parts[i]:
                for v in outcome.parts[j]:
                    pairs += 1
                    if u == v or not graph.has_edge(u, v):
                        violations.append(Violation("missing-pair", (u, v)))
                    elif colouring.colour(u, v) is not cross:
                        violations.append(Violation("cross-colour", (u, v)))
        return Report(violations=tuple(violations), stats={"cross_pairs": pairs})

    assert isinstance(outcome, BlueExpansion)
    adjacency = _colour_adjacency(colouring, colour)
    found, examined = _naive_expansion_violations(
        [set(row) for row in adjacency], outcome.vertices, 2 * n - 2, d, subset_budget
    )
    violations.extend(Violation("expansion", chosen) for chosen in found)
    return Report(violations=tuple(violations), stats={"subsets": examined})


__all__ = [
    "find_mono_tree",
    "naive_expansion_ok",
    "validate_dichotomy",
    "validate_embedding",
]
