"""
縮退グラフが特定の木に対して Ramsey でないことを示す 2 つの辺彩色。

* ``colour_recursive``: 分割と再帰による彩色。(2^i − 1)-縮退グラフに単色の T_{2^{i+1}, 2^i} を作らない。
* ``colour_monotone``: 貪欲な真彩色 φ と順序から決まる彩色。単色の単調路は高々 d+1 頂点。
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass

from application.observability import telemetry_span
from domain.errors import ContractViolationError, ParameterError, PreconditionError
from domain.models import Colour, EdgeColouring, Graph, Ordering, TableColouring
from domain.services import degeneracy_ordering, greedy_proper_colouring, orient_acyclic

logger = logging.getLogger("ramsey_forge.degenerate_colouring")


@dataclass(frozen=True)
class SplitResult:
    """
    Attributes:
        red: V_r。
        blue: V_b。
    """

    red: frozenset[int]
    blue: frozenset[int]

    def side(self, v: int) -> Colour:
        return Colour.RED if v in self.red else Colour.BLUE


def split_degenerate(graph: Graph, d: int, ordering: Ordering) -> SplitResult:
    """
    順序 o に沿って、前方隣接頂点のうち V_r にあるものが d/2 − 1 個以下なら v を V_r に、
    そうでなければ V_b に入れる。

    Raises:
        ParameterError: d が正の偶数でない場合。
        PreconditionError: 順序の前方隣接数の上限が d − 1 を超える場合。
    """

    if d < 2 or d % 2:
        raise ParameterError(f"d = {d} は正の偶数である必要があります。")
    if ordering.back_degree_bound > d - 1:
        raise PreconditionError(
            f"順序の前方隣接数の上限 {ordering.back_degree_bound} が d − 1 = {d - 1} を超えています。"
        )
    orientation = orient_acyclic(graph, ordering)
    half = d // 2
    red: set[int] = set()
    blue: set[int] = set()
    for v in ordering.sequence:
        in_red = sum(1 for w in orientation.in_neighbours[v] if w in red)
        (red if in_red <= half - 1 else blue).add(v)
    return SplitResult(red=frozenset(red), blue=frozenset(blue))


def _colour_forest(graph: Graph, table: dict[tuple[int, int], Colour], ids: tuple[int, ...]) -> None:
    depth = [-1] * graph.n
    for start in range(graph.n):
        if depth[start] >= 0:
            continue
        depth[start] = 0
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for w in graph.neighbours(v):
                if depth[w] < 0:
                    depth[w] = depth[v] + 1
                    queue.append(w)
    for u, v in graph.edges():
        colour = Colour.RED if min(depth[u], depth[v]) % 2 == 0 else Colour.BLUE
        a, b = ids[u], ids[v]
        table[(min(a, b), max(a, b))] = colour


def _colour_into(graph: Graph, i: int, table: dict[tuple[int, int], Colour], ids: tuple[int, ...]) -> None:
    ordering, degeneracy = degeneracy_ordering(graph)
    limit = 2**i - 1
    if degeneracy > limit:
        raise PreconditionError(f"縮退度 {degeneracy} が 2^{i} − 1 = {limit} を超えています。")
    if i == 1:
        _colour_forest(graph, table, ids)
        return
    split = split_degenerate(graph, 2**i, ordering)
    position = ordering.position
    for u, v in graph.edges():
        if split.side(u) is split.side(v):
            continue
        source = u if position[u] < position[v] else v
        a, b = ids[u], ids[v]
        table[(min(a, b), max(a, b))] = split.side(source)
    for part in (split.red, split.blue):
        sub, original = graph.induced_subgraph(sorted(part))
        _colour_into(sub, i - 1, table, tuple(ids[x] for x in original))


def colour_recursive(graph: Graph, i: int) -> TableColouring:
    """
    i = 1 では連結成分ごとに最小番号の頂点を根とする BFS 深さで、辺を
    min(深さ) mod 2（偶数なら赤）で塗る。i ≥ 2 では d = 2^i で分割して各部を i − 1 で再帰し、
    部をまたぐ辺は始点（順序上で前の頂点）の属する部の色を継承する。

    Raises:
        ParameterError: i < 1 の場合。
        PreconditionError: G が (2^i − 1)-縮退でない場合（実際の縮退度を報告）。
    """

    if i < 1:
        raise ParameterError("i は 1 以上である必要があります。")
    table: dict[tuple[int, int], Colour] = {}
    with telemetry_span("degenerate_colouring.colour_recursive", {"n": graph.n, "i": i}):
        _colour_into(graph, i, table, tuple(range(graph.n)))
    logger.info("colour_recursive coloured %s edges (i=%s)", len(table), i)
    return TableColouring(graph, table)


def cross_edge_violations(
    graph: Graph, ordering: Ordering, split: SplitResult, colouring: EdgeColouring
) -> list[tuple[int, int]]:
    """部をまたぐ辺のうち、始点の部の色を継承していないものを列挙する。"""

    position = ordering.position
    violations: list[tuple[int, int]] = []
    for u, v in graph.edges():
        if split.side(u) is split.side(v):
            continue
        source = u if position[u] < position[v] else v
        if colouring.colour(u, v) is not split.side(source):
            violations.append((u, v))
    return violations


def longest_mono_monotone_path(
    graph: Graph, ordering: Ordering, colouring: EdgeColouring
) -> dict[Colour, int]:
    """順序に沿って増加する単色路の最大頂点数を色ごとに求める（向き付けの上の DP）。"""

    position = ordering.position
    if len(ordering.sequence) != graph.n:
        raise PreconditionError("順序の長さがグラフの頂点数と一致しません。")
    result: dict[Colour, int] = {}
    for colour in Colour:
        best = [1] * graph.n
        for v in ordering.sequence:
            for w in graph.neighbours(v):
                if position[w] < position[v] and colouring.colour(w, v) is colour:
                    best[v] = max(best[v], best[w] + 1)
        result[colour] = max(best, default=0)
    return result


def colour_monotone(graph: Graph, ordering: Ordering) -> TableColouring:
    """
    φ を順序 o による貪欲な真彩色とし、o で u が v より前の辺 uv を
    φ(u) < φ(v) なら赤、そうでなければ青で塗る。

    Raises:
        ContractViolationError: 単色単調路が d+1 頂点を超えた場合。
    """

    phi = greedy_proper_colouring(graph, ordering)
    position = ordering.position
    table: dict[tuple[int, int], Colour] = {}
    for u, v in graph.edges():
        first, second = (u, v) if position[u] < position[v] else (v, u)
        table[(u, v)] = Colour.RED if phi[first] < phi[second] else Colour.BLUE
    colouring = TableColouring(graph, table)
    lengths = longest_mono_monotone_path(graph, ordering, colouring)
    bound = ordering.back_degree_bound + 1
    for colour, length in lengths.items():
        if length > bound:
            raise ContractViolationError(f"{colour.label} の単調路 {length} 頂点が d+1 = {bound} を超えました。")
    logger.info(
        "colour_monotone red_path=%s blue_path=%s bound=%s",
        lengths[Colour.RED],
        lengths[Colour.BLUE],
        bound,
    )
    return colouring


__all__ = [
    "SplitResult",
    "colour_monotone",
    "colour_recursive",
    "cross_edge_violations",
    "longest_mono_monotone_path",
    "split_degenerate",
]
