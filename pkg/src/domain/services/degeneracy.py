"""
縮退度に基づく頂点順序・非巡回向き付け・貪欲彩色。
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from domain.errors import InputError
from domain.models import Graph, Ordering


@dataclass(frozen=True)
class AcyclicOrientation:
    """
    順序の前から後ろへ向けた向き付け。

    Attributes:
        in_neighbours: 各頂点へ向かう辺の始点（順序上で前の隣接頂点）。
        out_neighbours: 各頂点から出る辺の終点（順序上で後の隣接頂点）。
    """

    in_neighbours: tuple[tuple[int, ...], ...]
    out_neighbours: tuple[tuple[int, ...], ...]

    def in_degree(self, v: int) -> int:
        return len(self.in_neighbours[v])

    def is_arc(self, u: int, v: int) -> bool:
        return u in self.in_neighbours[v]


def degeneracy_ordering(graph: Graph) -> tuple[Ordering, int]:
    """
    最小次数の頂点を繰り返し取り除き（同次数なら最小番号）、除去順の逆順を返す。

    逆順では各頂点の前方隣接頂点は除去時点で残っていた隣接頂点に一致するため、
    その数は縮退度以下になる。
    """

    n = graph.n
    degree = [graph.degree(v) for v in range(n)]
    removed = [False] * n
    heap = [(degree[v], v) for v in range(n)]
    heapq.heapify(heap)
    peeled: list[int] = []
    degeneracy = 0
    while heap:
        current, v = heapq.heappop(heap)
        if removed[v] or current != degree[v]:
            continue
        removed[v] = True
        peeled.append(v)
        degeneracy = max(degeneracy, current)
        for w in graph.neighbours(v):
            if not removed[w]:
                degree[w] -= 1
                heapq.heappush(heap, (degree[w], w))
    peeled.reverse()
    return Ordering(sequence=tuple(peeled), back_degree_bound=degeneracy), degeneracy


def orient_acyclic(graph: Graph, ordering: Ordering) -> AcyclicOrientation:
    """
    辺 v_j v_k (j < k) を (v_j, v_k) と向き付ける。

    Raises:
        InputError: 順序がグラフの頂点集合の置換でない、または入次数が上限を超える場合。
    """

    ordering.ensure_matches(graph)
    position = ordering.position
    in_neighbours = tuple(
        tuple(w for w in graph.neighbours(v) if position[w] < position[v]) for v in range(graph.n)
    )
    out_neighbours = tuple(
        tuple(w for w in graph.neighbours(v) if position[w] > position[v]) for v in range(graph.n)
    )
    return AcyclicOrientation(in_neighbours=in_neighbours, out_neighbours=out_neighbours)


def greedy_proper_colouring(graph: Graph, ordering: Ordering) -> tuple[int, ...]:
    """
    順序に沿って、前方隣接頂点が使っていない最小の色（0 始まり）を割り当てる。
    色数は back_degree_bound + 1 以下。
    """

    ordering.ensure_matches(graph)
    position = ordering.position
    colours = [-1] * graph.n
    for v in ordering.sequence:
        used = {colours[w] for w in graph.neighbours(v) if position[w] < position[v]}
        colour = 0
        while colour in used:
            colour += 1
        colours[v] = colour
    if graph.n and max(colours) > ordering.back_degree_bound:
        raise InputError("貪欲彩色の色数が back_degree_bound + 1 を超えました。")
    return tuple(colours)


def subgraph_degeneracy(graph: Graph, vertices: set[int] | frozenset[int]) -> int:
    """誘導部分グラフ G[vertices] の縮退度。"""

    sub, _ = graph.induced_subgraph(sorted(vertices))
    return degeneracy_ordering(sub)[1]


__all__ = [
    "AcyclicOrientation",
    "degeneracy_ordering",
    "greedy_proper_colouring",
    "orient_acyclic",
    "subgraph_degeneracy",
]
