"""
二部グラフの最大マッチング（Hopcroft–Karp）と König の定理による最小頂点被覆。
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Mapping

_UNREACHED = -1


class HopcroftKarp:
    """
    左頂点から右頂点の集合への隣接で与えた二部グラフの最大マッチング。

    左右の頂点はそれぞれ整数で、左右で番号が重なってもよい。
    探索順は番号の昇順に固定し、結果を決定的にする。
    """

    def __init__(self, graph_left: Mapping[int, Iterable[int]]) -> None:
        self._left = sorted(graph_left)
        self._adjacency = {u: sorted(set(graph_left[u])) for u in self._left}
        self._pair_left: dict[int, int] = {}
        self._pair_right: dict[int, int] = {}
        self._distance: dict[int, int] = {}
        self._limit = _UNREACHED

    def maximum_matching(self) -> dict[int, int]:
        self._pair_left.clear()
        self._pair_right.clear()
        while self._bfs():
            for u in self._left:
                if u not in self._pair_left:
                    self._dfs(u)
        return dict(self._pair_left)

    def _bfs(self) -> bool:
        queue: deque[int] = deque()
        for u in self._left:
            if u in self._pair_left:
                self._distance[u] = _UNREACHED
            else:
                self._distance[u] = 0
                queue.append(u)
        self._limit = _UNREACHED
        while queue:
            u = queue.popleft()
            if self._limit != _UNREACHED and self._distance[u] >= self._limit:
                continue
            for w in self._adjacency[u]:
                partner = self._pair_right.get(w)
                if partner is None:
                    if self._limit == _UNREACHED:
                        self._limit = self._distance[u] + 1
                elif self._distance[partner] == _UNREACHED:
                    self._distance[partner] = self._distance[u] + 1
                    queue.append(partner)
        return self._limit != _UNREACHED

    def _dfs(self, u: int) -> bool:
        for w in self._adjacency[u]:
            partner = self._pair_right.get(w)
            if partner is None:
                if self._limit == self._distance[u] + 1:
                    self._pair_left[u] = w
                    self._pair_right[w] = u
                    return True
            elif self._distance[partner] == self._distance[u] + 1 and self._dfs(partner):
                self._pair_left[u] = w
                self._pair_right[w] = u
                return True
        self._distance[u] = _UNREACHED
        return False


def max_bipartite_matching(
    left: Iterable[int],
    right: Iterable[int],
    edges: Iterable[tuple[int, int]],
) -> dict[int, int]:
    """
    最大基数マッチングを左頂点 -> 右頂点の辞書で返す。``edges`` は (左, 右) の組。
    """

    right_set = set(right)
    adjacency: dict[int, set[int]] = {u: set() for u in left}
    for u, w in edges:
        if u in adjacency and w in right_set:
            adjacency[u].add(w)
    return HopcroftKarp(adjacency).maximum_matching()


def minimum_vertex_cover(
    left: Iterable[int],
    right: Iterable[int],
    edges: Iterable[tuple[int, int]],
    matching: Mapping[int, int],
) -> tuple[set[int], set[int]]:
    """
    最大マッチングから König の構成で最小頂点被覆 (左側, 右側) を求める。

    未マッチの左頂点から交互路で到達できる頂点集合を Z とし、
    (L \\ Z) ∪ (R ∩ Z) を返す。
    """

    left_set = set(left)
    right_set = set(right)
    adjacency: dict[int, set[int]] = {u: set() for u in left_set}
    for u, w in edges:
        if u in left_set and w in right_set:
            adjacency[u].add(w)
    matched_right = {w: u for u, w in matching.items()}
    reached_left = {u for u in left_set if u not in matching}
    reached_right: set[int] = set()
    queue = deque(sorted(reached_left))
    while queue:
        u = queue.popleft()
        for w in sorted(adjacency[u]):
            if w in reached_right or matching.get(u) == w:
                continue
            reached_right.add(w)
            partner = matched_right.get(w)
            if partner is not None and partner not in reached_left:
                reached_left.add(partner)
                queue.append(partner)
    return left_set - reached_left, reached_right


__all__ = ["HopcroftKarp", "max_bipartite_matching", "minimum_vertex_cover"]
