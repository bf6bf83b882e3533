"""
拡張性 |Γ(X)| ≥ (d+1)|X| の検査、有界次数木の埋め込み、木か赤い多部グラフかの二分法。
"""

from __future__ import annotations

import logging
import math
from itertools import combinations
from typing import Iterable, Literal, Sequence

from application.observability import metrics_recorder, telemetry_span
from domain.errors import (
    BudgetExceededError,
    ContractViolationError,
    InputError,
    NotFoundError,
    ParameterError,
    PreconditionError,
)
from domain.models import (
    BlueExpansion,
    Colour,
    Dichotomy,
    EdgeColouring,
    Embedding,
    ExpansionCheck,
    Graph,
    RedMultipartite,
    RootedTree,
)

logger = logging.getLogger("ramsey_forge.tree_embedding")

ScanMode = Literal["exact", "heuristic", "auto"]


def _bits(mask: int) -> Iterable[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class _ExpansionScanner:
    """頂点ごとの近傍ビットマスクを保持し、部分集合 S 上の拡張性を調べる。"""

    def __init__(self, graph: Graph) -> None:
        self._masks = [sum(1 << w for w in graph.neighbours(v)) for v in range(graph.n)]

    def scan(
        self,
        vertices: Sequence[int],
        *,
        max_size: int,
        d: int,
        budget: int,
        mode: ScanMode,
    ) -> ExpansionCheck:
        allowed = sum(1 << v for v in vertices)
        limit = min(max_size, len(vertices))
        total = sum(math.comb(len(vertices), j) for j in range(1, limit + 1))
        if mode == "heuristic" or (mode == "auto" and total > budget):
            if mode == "auto":
                logger.warning(
                    "Exact subset enumeration needs %s subsets (budget %s); using heuristic",
                    total,
                    budget,
                )
            return self._heuristic(vertices, allowed, limit, d)
        if total > budget:
            raise BudgetExceededError(
                "部分集合の完全列挙が予算を超えます。heuristic モードを指定してください。",
                budget=budget,
                explored=0,
            )
        masks = [self._masks[v] & allowed for v in vertices]
        examined = 0
        for size in range(1, limit + 1):
            required = (d + 1) * size
            for chosen in combinations(range(len(vertices)), size):
                examined += 1
                union = 0
                for index in chosen:
                    union |= masks[index]
                if union.bit_count() < required:
                    violating = tuple(vertices[index] for index in chosen)
                    return ExpansionCheck(violating=violating, exact=True, examined=examined)
        return ExpansionCheck(violating=None, exact=True, examined=examined)

    def _heuristic(
        self, vertices: Sequence[int], allowed: int, limit: int, d: int
    ) -> ExpansionCheck:
        masks = {v: self._masks[v] & allowed for v in vertices}
        examined = 0
        for start in sorted(vertices, key=lambda v: (masks[v].bit_count(), v)):
            chosen = [start]
            union = masks[start]
            while True:
                examined += 1
                if union.bit_count() < (d + 1) * len(chosen):
                    return ExpansionCheck(violating=tuple(sorted(chosen)), exact=False, examined=examined)
                if len(chosen) >= limit:
                    break
                frontier = [w for w in _bits(union) if w not in chosen]
                if not frontier:
                    break
                best = min(frontier, key=lambda w: ((union | masks[w]).bit_count(), w))
                chosen.append(best)
                union |= masks[best]
        return ExpansionCheck(violating=None, exact=False, examined=examined)

    def neighbourhood(self, chosen: Iterable[int], allowed: int) -> set[int]:
        union = 0
        for v in chosen:
            union |= self._masks[v]
        return set(_bits(union & allowed))


def fp_expansion_check(
    graph: Graph,
    n: int,
    d: int,
    *,
    mode: ScanMode = "exact",
    subset_budget: int = 10**7,
) -> ExpansionCheck:
    """
    1 ≤ |X| ≤ 2n−2 の全ての X で |Γ(X)| ≥ (d+1)|X| かを判定する。

    完全列挙はサイズの小さい順に行うため、最初に見つかった違反集合は最小基数となる。

    Raises:
        ParameterError: n, d が正でない、またはグラフが空の場合。
        BudgetExceededError: exact モードで列挙数が予算を超える場合。
    """

    if n < 1 or d < 1:
        raise ParameterError("n と d は 1 以上である必要があります。")
    if graph.n == 0:
        raise ParameterError("空でないグラフが必要です。")
    with telemetry_span("tree_embedding.fp_expansion_check", {"n": n, "d": d, "mode": mode}):
        result = _ExpansionScanner(graph).scan(
            tuple(range(graph.n)), max_size=2 * n - 2, d=d, budget=subset_budget, mode=mode
        )
    metrics_recorder().increment_search_nodes("expansion", result.examined)
    return result


def embed_tree(
    host: Graph,
    tree: RootedTree,
    d: int,
    *,
    node_budget: int = 10**9,
) -> Embedding:
    """
    木を BFS 順のバックトラックでホストに埋め込む。

    候補はホスト次数の降順で試し、子の数に対して空き近傍が足りない候補と、
    親の未配置の子を収容できなくなる候補を枝刈りする。

    Raises:
        InputError: Δ(T) > d の場合。
        NotFoundError: 完全探索で埋め込みが存在しないと判明した場合。
        BudgetExceededError: 探索ノード数が予算を超えた場合。
    """

    if tree.max_degree > d:
        raise InputError(f"Δ(T) = {tree.max_degree} が d = {d} を超えています。")

    order = tree.bfs_order()
    parent = tree.parent
    children = tree.children
    later_siblings = [0] * tree.n
    for v in range(tree.n):
        siblings = children[v]
        for index, child in enumerate(siblings):
            later_siblings[child] = len(siblings) - index - 1

    used = [False] * host.n
    image = [-1] * tree.n

    def free_degree(h: int) -> int:
        return sum(1 for w in host.neighbours(h) if not used[w])

    def candidates(position: int) -> list[int]:
        x = order[position]
        pool: Iterable[int] = (
            range(host.n) if position == 0 else host.neighbours(image[parent[x]])
        )
        needed = tree.degree(x)
        return sorted(
            (h for h in pool if not used[h] and host.degree(h) >= needed),
            key=lambda h: (-host.degree(h), h),
        )

    nodes = 0
    stack = [candidates(0)]
    pointers = [0]
    position = 0
    with telemetry_span("tree_embedding.embed_tree", {"tree_size": tree.n, "host_size": host.n}):
        try:
            while True:
                if pointers[position] < len(stack[position]):
                    h = stack[position][pointers[position]]
                    pointers[position] += 1
                    nodes += 1
                    if nodes > node_budget:
                        raise BudgetExceededError(
                            "木の埋め込み探索がノード予算を超えました。",
                            budget=node_budget,
                            explored=nodes,
                        )
                    x = order[position]
                    if used[h] or free_degree(h) < len(children[x]):
                        continue
                    used[h] = True
                    image[x] = h
                    if position > 0 and free_degree(image[parent[x]]) < later_siblings[x]:
                        used[h] = False
                        image[x] = -1
                        continue
                    if position == tree.n - 1:
                        return Embedding(tuple(image))
                    position += 1
                    stack.append(candidates(position))
                    pointers.append(0)
                else:
                    stack.pop()
                    pointers.pop()
                    position -= 1
                    if position < 0:
                        raise NotFoundError(
                            f"{tree.n} 頂点の木はホスト ({host.n} 頂点) に埋め込めません。"
                        )
                    x = order[position]
                    used[image[x]] = False
                    image[x] = -1
        finally:
            metrics_recorder().increment_search_nodes("embed_tree", nodes)
            logger.debug("embed_tree explored %s nodes", nodes)


def _require_complete(colouring: EdgeColouring) -> int:
    graph = colouring.graph
    n = graph.n
    if graph.edge_count != n * (n - 1) // 2:
        raise InputError("二分法の入力は完全グラフ K_N の彩色である必要があります。")
    return n


def tree_or_multipartite(
    colouring: EdgeColouring,
    n: int,
    d: int,
    q: int,
    *,
    colour: Colour = Colour.BLUE,
    subset_budget: int = 10**7,
) -> Dichotomy:
    """
    K_N の彩色について、``colour`` のクラスが拡張性を持つ部分集合か、
    反対色の完全 q 部グラフ（各部 ≥ ⌈N/(5dq)⌉）のどちらかを返す。

    既定では青が拡張側、赤が多部側。パイプラインでは色の役割を入れ替えて呼ぶ。

    Raises:
        PreconditionError: N < 20ndq の場合。
        ContractViolationError: 剥離後の数値的な保証が成り立たない場合。
    """

    total = _require_complete(colouring)
    if n < 1 or d < 1 or q < 1:
        raise ParameterError("n, d, q は 1 以上である必要があります。")
    if total < 20 * n * d * q:
        raise PreconditionError(f"N = {total} は 20ndq = {20 * n * d * q} 以上である必要があります。")

    with telemetry_span("tree_embedding.tree_or_multipartite", {"N": total, "n": n, "d": d, "q": q}):
        expanding = colouring.colour_class(colour)
        scanner = _ExpansionScanner(expanding)
        remaining = list(range(total))
        peeled: list[tuple[int, ...]] = []
        while remaining:
            check = scanner.scan(
                remaining, max_size=2 * n - 2, d=d, budget=subset_budget, mode="auto"
            )
            metrics_recorder().increment_search_nodes("expansion", check.examined)
            if check.violating is None:
                logger.info(
                    "%s class expands on %s of %s vertices after %s peels",
                    colour.label,
                    len(remaining),
                    total,
                    len(peeled),
                )
                return BlueExpansion(vertices=tuple(remaining), exact=check.exact)
            allowed = sum(1 << v for v in remaining)
            removed = set(check.violating) | scanner.neighbourhood(check.violating, allowed)
            peeled.append(check.violating)
            remaining = [v for v in remaining if v not in removed]

        union_size = sum(len(x) for x in peeled)
        if not total < (d + 2) * union_size:
            raise ContractViolationError(
                f"N < (d+2)|⋃X_i| が成り立ちません (N={total}, |⋃X_i|={union_size})。"
            )
        target = math.ceil(total / (5 * d * q))
        parts: list[tuple[int, ...]] = []
        current: list[int] = []
        for x in peeled:
            if len(parts) == q:
                break
            current.extend(x)
            if len(current) >= target:
                if not 10 * d * q * len(current) < 3 * total:
                    raise ContractViolationError(
                        f"部のサイズ {len(current)} が 3N/(10dq) 未満になりません。"
                    )
                parts.append(tuple(sorted(current)))
                current = []
        if len(parts) < q:
            raise ContractViolationError(f"{q} 個の部を構成できませんでした (得られた部: {len(parts)})。")
        logger.info("Built %s-partite %s certificate with parts of size >= %s", q, colour.other.label, target)
        return RedMultipartite(parts=tuple(parts), peeled=tuple(peeled))


__all__ = [
    "embed_tree",
    "fp_expansion_check",
    "tree_or_multipartite",
]
