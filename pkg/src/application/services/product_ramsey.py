"""
補助彩色・チョッピング埋め込み・ホスト構成など、積グラフの Ramsey 構成の部品。
"""

from __future__ import annotations

import logging
from typing import Sequence

from application.observability import metrics_recorder, telemetry_span
from domain.errors import (
    BudgetExceededError,
    ContractViolationError,
    InputError,
    ParameterError,
    PreconditionError,
)
from domain.models import (
    Colour,
    EdgeColouring,
    Embedding,
    Graph,
    PartitionedHost,
    RootedTree,
    TableColouring,
)
from domain.services import bags, graph_power, strong_product, truncate_with_origin
from domain.value_objects import RngSeed

from .spectral import generate_expander

logger = logging.getLogger("ramsey_forge.product_ramsey")

RAMSEY_NUMBERS = {1: 1, 2: 2, 3: 6, 4: 18}


def ramsey_number_lookup(t: int) -> int:
    """既知の対角 Ramsey 数 r(t)。t > 4 は未知のため R の明示指定が必要。"""

    if t not in RAMSEY_NUMBERS:
        raise ParameterError(f"r({t}) は既知の表にありません。R を明示的に指定してください。")
    return RAMSEY_NUMBERS[t]


def kst_bound(s: int, n: int) -> float:
    """K_{s,s} を含まない n 頂点グラフの辺数上限 (s−1)^{1/s} n^{2−1/s} + (s−1)。"""

    if s < 1 or n < 0:
        raise ParameterError("s ≥ 1, n ≥ 0 である必要があります。")
    return (s - 1) ** (1 / s) * n ** (2 - 1 / s) + (s - 1)


def find_blue_kss(
    graph: Graph,
    colouring: EdgeColouring,
    left: Sequence[int],
    right: Sequence[int],
    s: int,
    *,
    colour: Colour = Colour.BLUE,
    budget: int = 10**7,
) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """
    U × W の間の ``colour`` の K_{s,s} を辞書順最小で返す。存在しなければ None。

    U 側の頂点を昇順に選びながら W 側の共通同色近傍を絞り込み、s 未満になった枝を刈る。

    Raises:
        InputError: U と W が交わる場合。
        BudgetExceededError: 探索ノード数が予算を超えた場合。
    """

    if s < 1:
        raise ParameterError("s は 1 以上である必要があります。")
    right_set = set(right)
    if right_set.intersection(left):
        raise InputError("U と W は互いに素である必要があります。")
    reach: dict[int, frozenset[int]] = {}
    for u in sorted(left):
        common = frozenset(
            w for w in graph.neighbours(u) if w in right_set and colouring.colour(u, w) is colour
        )
        if len(common) >= s:
            reach[u] = common
    candidates = sorted(reach)
    if len(candidates) < s:
        return None

    nodes = 0

    def extend(start: int, chosen: list[int], common: frozenset[int]) -> tuple[int, ...] | None:
        nonlocal nodes
        if len(chosen) == s:
            return tuple(chosen)
        for index in range(start, len(candidates) - (s - len(chosen)) + 1):
            nodes += 1
            if nodes > budget:
                raise BudgetExceededError(
                    "K_{s,s} 探索が予算を超えました。", budget=budget, explored=nodes
                )
            u = candidates[index]
            narrowed = common & reach[u]
            if len(narrowed) < s:
                continue
            chosen.append(u)
            found = extend(index + 1, chosen, narrowed)
            if found is not None:
                return found
            chosen.pop()
        return None

    try:
        left_side = extend(0, [], frozenset(right_set))
    finally:
        metrics_recorder().increment_search_nodes("kss", nodes)
    if left_side is None:
        return None
    common = frozenset(right_set)
    for u in left_side:
        common &= reach[u]
    return left_side, tuple(sorted(common)[:s])


def aux_colouring(
    graph: Graph,
    parts: Sequence[Sequence[int]],
    colouring: EdgeColouring,
    s: int,
    *,
    colour: Colour = Colour.BLUE,
    budget: int = 10**7,
) -> TableColouring:
    """
    (G, ψ, s)-彩色: 部 i, j の間に ``colour`` の K_{s,s} があれば ij を ``colour``、
    なければ反対色で塗った K_m の彩色。
    """

    m = len(parts)
    complete = Graph.complete(m)
    table: dict[tuple[int, int], Colour] = {}
    with telemetry_span("product_ramsey.aux_colouring", {"m": m, "s": s}):
        for i in range(m):
            for j in range(i + 1, m):
                found = find_blue_kss(graph, colouring, parts[i], parts[j], s, colour=colour, budget=budget)
                table[(i, j)] = colour if found is not None else colour.other
    result = TableColouring(complete, table)
    logger.info(
        "aux_colouring m=%s s=%s %s pairs=%s",
        m,
        s,
        colour.label,
        sum(1 for c in table.values() if c is colour),
    )
    return result


def _ensure_monochromatic_parts(
    graph: Graph, colouring: EdgeColouring, parts: Sequence[Sequence[int]], s: int, colour: Colour
) -> None:
    for index, part in enumerate(parts):
        if len(part) < s:
            raise PreconditionError(f"部 {index} のサイズ {len(part)} が s = {s} 未満です。")
        for a_index, a in enumerate(part):
            for b in part[a_index + 1 :]:
                if not graph.has_edge(a, b) or colouring.colour(a, b) is not colour:
                    raise PreconditionError(f"部 {index} は {colour.label} の完全グラフではありません。")


def chopping_embed(
    graph: Graph,
    parts: Sequence[Sequence[int]],
    colouring: EdgeColouring,
    k: int,
    tree: RootedTree,
    truncated_embedding: Embedding,
    *,
    d: int | None = None,
    colour: Colour = Colour.BLUE,
    budget: int = 10**7,
) -> Embedding:
    """
    補助彩色への T' の ``colour`` 埋め込み g から、G 内の ``colour`` の T ⊠ K_k を構成する。

    T' の頂点を根からの距離順に x_0, x_1, ... と処理し、x_i（T の頂点 v）について
    V_{g(x_i)} と V_{g(y)}（y は v の祖父母）の間の K_{s,s} L を取り、
    v の k 個の複製を L ∩ V_{g(y)} に、C_T(v) の複製を L ∩ V_{g(x_i)} に置く。
    パターン頂点 (x, j) は x·k + j で表す。

    Raises:
        PreconditionError: 部が単色完全でない、サイズが s 未満、または Δ(T) > d の場合。
        ContractViolationError: K_{s,s} の再発見や容量が保証どおりに成立しない場合。
    """

    if k < 1:
        raise ParameterError("k は 1 以上である必要があります。")
    degree_bound = tree.max_degree if d is None else d
    if tree.max_degree > degree_bound:
        raise PreconditionError(f"Δ(T) = {tree.max_degree} が d = {degree_bound} を超えています。")
    s = max(1, (degree_bound + degree_bound * degree_bound) * k)
    if colouring.graph.n != graph.n:
        raise InputError("彩色はホストグラフ上のものである必要があります。")
    truncated, origin = truncate_with_origin(tree)
    tree_bags = bags(tree)
    if tree_bags.covered() != set(range(tree.n)):
        raise ContractViolationError("袋が T の頂点を覆っていません。")
    g = truncated_embedding.image
    if len(g) != truncated.n or len(set(g)) != len(g):
        raise PreconditionError("g は T' から補助彩色への単射である必要があります。")
    used_parts = [parts[p] for p in g]
    _ensure_monochromatic_parts(graph, colouring, used_parts, s, colour)

    image = [-1] * (tree.n * k)
    used: set[int] = set()
    usage = {p: 0 for p in g}

    def place(vertex: int, pool: Sequence[int], part_index: int) -> None:
        free = [h for h in pool if h not in used]
        if len(free) < k:
            raise ContractViolationError(
                f"部 {part_index} に頂点 {vertex} の複製を置く空きがありません。"
            )
        for slot, h in enumerate(free[:k]):
            image[vertex * k + slot] = h
            used.add(h)
        usage[part_index] += k

    with telemetry_span("product_ramsey.chopping_embed", {"tree_size": tree.n, "k": k}):
        root_part = g[truncated.root]
        for member in tree_bags[tree.root]:
            place(member, sorted(parts[root_part]), root_part)
        for x in truncated.bfs_order():
            if x == truncated.root:
                continue
            v = origin[x]
            own_part = g[x]
            upper_part = g[truncated.parent[x]]
            kss = find_blue_kss(
                graph, colouring, parts[own_part], parts[upper_part], s, colour=colour, budget=budget
            )
            if kss is None:
                raise ContractViolationError(
                    f"部 {own_part} と {upper_part} の間に {colour.label} の K_{{{s},{s}}} が見つかりません。"
                )
            own_side, upper_side = kss
            head, *rest = tree_bags[v]
            place(head, upper_side, upper_part)
            for child in rest:
                place(child, own_side, own_part)

    root_capacity = (degree_bound + 1) * k
    if usage[root_part] > root_capacity:
        raise ContractViolationError(f"根の部の使用数 {usage[root_part]} が (d+1)k = {root_capacity} を超えました。")
    for part_index, count in usage.items():
        if count > s:
            raise ContractViolationError(f"部 {part_index} の使用数 {count} が (d+d²)k = {s} を超えました。")
    for a in range(tree.n * k):
        for b in _product_neighbours(tree, k, a):
            if b > a and colouring.colour(image[a], image[b]) is not colour:
                raise ContractViolationError(f"像の辺 ({image[a]}, {image[b]}) が {colour.label} ではありません。")
    logger.info("chopping_embed placed %s vertices in %s parts", tree.n * k, len(usage))
    return Embedding(tuple(image))


def _product_neighbours(tree: RootedTree, k: int, vertex: int) -> list[int]:
    x, slot = divmod(vertex, k)
    blocks = list(tree.children[x])
    if x != tree.root:
        blocks.append(tree.parent[x])
    result = [x * k + j for j in range(k) if j != slot]
    result.extend(y * k + j for y in blocks for j in range(k))
    return result


def build_host(
    n: int,
    d: int,
    k: int,
    t: int,
    clique_size: int,
    seed: RngSeed,
    *,
    regeneration_cap: int = 50,
    attempt_cap: int = 10**6,
    dense_limit: int = 5000,
) -> PartitionedHost:
    """
    G = H³ ⊠ K_R を構成する。H は λ ≤ 2√D を満たす乱択 D 正則グラフ。

    Raises:
        ParameterError: R < t または t < 1 の場合。
        ContractViolationError: Δ(G) ≤ D³R + R − 1 が成り立たない場合。
    """

    if k < 1:
        raise ParameterError("k は 1 以上である必要があります。")
    if not clique_size >= t >= 1:
        raise ParameterError("R ≥ t ≥ 1 である必要があります。")
    with telemetry_span("product_ramsey.build_host", {"n": n, "d": d, "R": clique_size}):
        sample = generate_expander(
            n,
            d,
            seed,
            regeneration_cap=regeneration_cap,
            attempt_cap=attempt_cap,
            dense_limit=dense_limit,
        )
        power = graph_power(sample.graph, 3)
        graph = strong_product(power, clique_size)
    bound = d**3 * clique_size + clique_size - 1
    if graph.max_degree > bound:
        raise ContractViolationError(f"Δ(G) = {graph.max_degree} が D³R + R − 1 = {bound} を超えました。")
    logger.info(
        "Built host |V(G)|=%s |E(G)|=%s max_degree=%s", graph.n, graph.edge_count, graph.max_degree
    )
    return PartitionedHost.from_cliques(graph, sample.graph, power, clique_size)


__all__ = [
    "RAMSEY_NUMBERS",
    "aux_colouring",
    "build_host",
    "chopping_embed",
    "find_blue_kss",
    "kst_bound",
    "ramsey_number_lookup",
]
