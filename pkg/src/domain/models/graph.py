"""
単純無向グラフのエンティティ。

頂点は 0..n-1 の密な整数で表し、隣接リストは昇順に整列済みのタプルで保持する。
全ての構成・探索処理はこの型を共通の受け渡し単位として扱う。
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Mapping, Sequence

from domain.errors import InputError


@dataclass(frozen=True)
class Graph:
    """
    単純無向グラフ。

    Attributes:
        adjacency: 各頂点の隣接頂点を昇順に並べたタプル。
    """

    adjacency: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        n = len(self.adjacency)
        forward: list[tuple[int, int]] = []
        backward: list[tuple[int, int]] = []
        for u, neighbours in enumerate(self.adjacency):
            previous = -1
            for v in neighbours:
                if not 0 <= v < n:
                    raise InputError(f"頂点 {u} の隣接頂点 {v} が範囲 0..{n - 1} の外です。")
                if v == u:
                    raise InputError(f"頂点 {u} に自己ループがあります。")
                if v <= previous:
                    raise InputError(f"頂点 {u} の隣接リストは重複なしの昇順である必要があります。")
                previous = v
                if u < v:
                    forward.append((u, v))
                else:
                    backward.append((v, u))
        if len(forward) != len(backward) or set(forward) != set(backward):
            raise InputError("隣接関係が対称ではありません。")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """
        辺集合からグラフを構築する。重複辺は 1 本にまとめ、自己ループは拒否する。
        """

        if n < 0:
            raise InputError("頂点数は 0 以上である必要があります。")
        buckets: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"辺 ({u}, {v}) の端点が範囲 0..{n - 1} の外です。")
            if u == v:
                raise InputError(f"辺 ({u}, {v}) は自己ループです。")
            buckets[u].add(v)
            buckets[v].add(u)
        return cls(tuple(tuple(sorted(bucket)) for bucket in buckets))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(tuple(() for _ in range(n)))

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls(tuple(tuple(v for v in range(n) if v != u) for u in range(n)))

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls.from_edges(n, ((i, i + 1) for i in range(n - 1)))

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        if n < 3:
            raise InputError("閉路は 3 頂点以上である必要があります。")
        return cls.from_edges(n, ((i, (i + 1) % n) for i in range(n)))

    @classmethod
    def complete_bipartite(cls, a: int, b: int) -> "Graph":
        return cls.from_edges(a + b, ((u, a + v) for u in range(a) for v in range(b)))

    @property
    def n(self) -> int:
        return len(self.adjacency)

    @cached_property
    def edge_count(self) -> int:
        return sum(len(neighbours) for neighbours in self.adjacency) // 2

    @cached_property
    def neighbour_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(neighbours) for neighbours in self.adjacency)

    @cached_property
    def max_degree(self) -> int:
        return max((len(neighbours) for neighbours in self.adjacency), default=0)

    @cached_property
    def min_degree(self) -> int:
        return min((len(neighbours) for neighbours in self.adjacency), default=0)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def neighbours(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        neighbours = self.adjacency[u]
        index = bisect_left(neighbours, v)
        return index < len(neighbours) and neighbours[index] == v

    def edges(self) -> Iterator[tuple[int, int]]:
        """u < v の正規形で辺を昇順に列挙する。"""

        for u, neighbours in enumerate(self.adjacency):
            start = bisect_left(neighbours, u + 1)
            for v in neighbours[start:]:
                yield (u, v)

    def is_regular(self) -> bool:
        return self.min_degree == self.max_degree

    def induced_subgraph(self, vertices: Sequence[int]) -> tuple["Graph", tuple[int, ...]]:
        """
        誘導部分グラフを返す。

        Returns:
            (部分グラフ, 部分グラフ頂点 -> 元グラフ頂点 の対応)。
            部分グラフの頂点番号は ``vertices`` を昇順に並べた順序。
        """

        ordered = tuple(sorted(set(vertices)))
        index: Mapping[int, int] = {v: i for i, v in enumerate(ordered)}
        adjacency = tuple(
            tuple(index[w] for w in self.adjacency[v] if w in index) for v in ordered
        )
        return Graph(adjacency), ordered

    def count_edges_between(self, left: Iterable[int], right: Iterable[int]) -> int:
        """
        e(U, W) を返す。U ∩ W 内の辺は 2 回数える。
        """

        right_set = set(right)
        return sum(
            1 for u in left for v in self.adjacency[u] if v in right_set
        )

    def neighbourhood(self, vertices: Iterable[int], *, within: frozenset[int] | None = None) -> set[int]:
        """Γ(X): X のいずれかの頂点に隣接する頂点の集合。"""

        result: set[int] = set()
        for v in vertices:
            if within is None:
                result.update(self.adjacency[v])
            else:
                result.update(w for w in self.adjacency[v] if w in within)
        return result


__all__ = ["Graph"]
