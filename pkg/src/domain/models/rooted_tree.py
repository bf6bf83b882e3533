"""
根付き木のエンティティ。
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property

from domain.errors import InputError

from .graph import Graph

MAX_VERTEX_COUNT = 2**31 - 1


@dataclass(frozen=True)
class RootedTree:
    """
    親写像で表現した根付き木。

    Attributes:
        root: 根の頂点番号。
        parent: 各頂点の親。``parent[root] == root``。
    """

    root: int
    parent: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.parent)
        if n == 0:
            raise InputError("木は 1 頂点以上である必要があります。")
        if not 0 <= self.root < n:
            raise InputError(f"根 {self.root} が範囲 0..{n - 1} の外です。")
        if self.parent[self.root] != self.root:
            raise InputError("根の親は根自身である必要があります。")
        for v, p in enumerate(self.parent):
            if not 0 <= p < n:
                raise InputError(f"頂点 {v} の親 {p} が範囲外です。")
            if v != self.root and p == v:
                raise InputError(f"根以外の頂点 {v} が自身を親に持っています。")
        # depth の計算で閉路と根への到達性を同時に検証する
        _ = self.depth

    @property
    def n(self) -> int:
        return len(self.parent)

    @cached_property
    def children(self) -> tuple[tuple[int, ...], ...]:
        buckets: list[list[int]] = [[] for _ in range(self.n)]
        for v, p in enumerate(self.parent):
            if v != self.root:
                buckets[p].append(v)
        return tuple(tuple(bucket) for bucket in buckets)

    @cached_property
    def depth(self) -> tuple[int, ...]:
        depth = [-1] * self.n
        depth[self.root] = 0
        for start in range(self.n):
            chain: list[int] = []
            v = start
            while depth[v] < 0:
                chain.append(v)
                v = self.parent[v]
                if len(chain) > self.n:
                    raise InputError("親写像に閉路があります。")
            base = depth[v]
            for offset, u in enumerate(reversed(chain), start=1):
                depth[u] = base + offset
        return tuple(depth)

    @cached_property
    def height(self) -> int:
        return max(self.depth)

    @cached_property
    def levels(self) -> tuple[tuple[int, ...], ...]:
        """L_i(T) を i = 0..height の順に返す。"""

        buckets: list[list[int]] = [[] for _ in range(self.height + 1)]
        for v, level in enumerate(self.depth):
            buckets[level].append(v)
        return tuple(tuple(bucket) for bucket in buckets)

    @cached_property
    def max_degree(self) -> int:
        return max(self.degree(v) for v in range(self.n))

    def degree(self, v: int) -> int:
        return len(self.children[v]) + (0 if v == self.root else 1)

    def grandparent(self, v: int) -> int:
        """p²_T(v)。根の子の祖父母は根とする。"""

        return self.parent[self.parent[v]]

    def children_and_grandchildren(self, v: int) -> tuple[int, ...]:
        """C²_T(v) = C_T(v) ∪ ⋃_{x ∈ C_T(v)} C_T(x)。"""

        result = list(self.children[v])
        for child in self.children[v]:
            result.extend(self.children[child])
        return tuple(result)

    def is_leaf(self, v: int) -> bool:
        return not self.children[v]

    def bfs_order(self) -> tuple[int, ...]:
        order: list[int] = []
        queue = deque([self.root])
        while queue:
            v = queue.popleft()
            order.append(v)
            queue.extend(self.children[v])
        return tuple(order)

    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(
            (min(v, p), max(v, p)) for v, p in enumerate(self.parent) if v != self.root
        )

    def to_graph(self) -> Graph:
        return Graph.from_edges(self.n, self.edges())

    def rerooted(self, root: int) -> "RootedTree":
        return RootedTree.from_graph(self.to_graph(), root=root)

    @classmethod
    def from_graph(cls, graph: Graph, *, root: int = 0) -> "RootedTree":
        """
        連結な無閉路グラフを ``root`` で根付けする。
        """

        n = graph.n
        if n == 0:
            raise InputError("木は 1 頂点以上である必要があります。")
        if graph.edge_count != n - 1:
            raise InputError(f"木の辺数は {n - 1} である必要がありますが {graph.edge_count} です。")
        if not 0 <= root < n:
            raise InputError(f"根 {root} が範囲 0..{n - 1} の外です。")
        parent = [-1] * n
        parent[root] = root
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for w in graph.neighbours(v):
                if parent[w] < 0:
                    parent[w] = v
                    queue.append(w)
        if min(parent) < 0:
            raise InputError("グラフが連結ではないため木として扱えません。")
        return cls(root=root, parent=tuple(parent))

    @classmethod
    def single_vertex(cls) -> "RootedTree":
        return cls(root=0, parent=(0,))


__all__ = ["RootedTree", "MAX_VERTEX_COUNT"]
