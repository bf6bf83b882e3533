"""
頂点分割付きホストグラフと、チョッピング埋め込みで使う袋（bag）。
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Mapping

from domain.errors import InputError

from .graph import Graph


@dataclass(frozen=True)
class PartitionedHost:
    """
    頂点分割 V_1..V_m を持つグラフ。

    パイプライン用途では ``base`` を H、``graph`` を H³ ⊠ K_R とし、
    基底頂点 v のクリーク A(v) = {v·R, ..., v·R + R − 1} を部とする。

    Attributes:
        graph: ホストグラフ G。
        parts: 互いに素で全頂点を覆う部の列。
        base: 基底グラフ H（パイプライン用途のみ）。
        power: H³（パイプライン用途のみ）。
        clique_size: R（パイプライン用途のみ）。
    """

    graph: Graph
    parts: tuple[tuple[int, ...], ...]
    base: Graph | None = None
    power: Graph | None = None
    clique_size: int | None = None

    def __post_init__(self) -> None:
        covered = [False] * self.graph.n
        for index, part in enumerate(self.parts):
            for v in part:
                if not 0 <= v < self.graph.n:
                    raise InputError(f"部 {index} の頂点 {v} が範囲外です。")
                if covered[v]:
                    raise InputError(f"頂点 {v} が複数の部に属しています。")
                covered[v] = True
        if not all(covered):
            raise InputError("部の和集合が全頂点を覆っていません。")
        if self.base is not None:
            if self.clique_size is None or self.clique_size < 1:
                raise InputError("パイプライン用ホストには正の clique_size が必要です。")
            if self.graph.n != self.base.n * self.clique_size:
                raise InputError("|V(G)| は |V(H)|·R と一致する必要があります。")

    @property
    def m(self) -> int:
        return len(self.parts)

    @cached_property
    def part_of(self) -> tuple[int, ...]:
        owner = [0] * self.graph.n
        for index, part in enumerate(self.parts):
            for v in part:
                owner[v] = index
        return tuple(owner)

    def clique(self, v: int) -> tuple[int, ...]:
        """A(v)。"""

        if self.clique_size is None:
            raise InputError("clique_size が未設定のホストでは A(v) を参照できません。")
        return tuple(range(v * self.clique_size, (v + 1) * self.clique_size))

    @classmethod
    def from_cliques(
        cls, graph: Graph, base: Graph, power: Graph, clique_size: int
    ) -> "PartitionedHost":
        parts = tuple(
            tuple(range(v * clique_size, (v + 1) * clique_size)) for v in range(base.n)
        )
        return cls(graph=graph, parts=parts, base=base, power=power, clique_size=clique_size)


@dataclass(frozen=True)
class Bags:
    """
    切り詰め木 T' の各頂点 x に対する袋 B_x ⊆ V(T)。

    根では B_{x0} = {x0}、それ以外では B_x = {x} ∪ C_T(x)。
    """

    root: int
    bags: Mapping[int, tuple[int, ...]]

    def __post_init__(self) -> None:
        if self.bags.get(self.root) != (self.root,):
            raise InputError("根の袋は根だけからなる必要があります。")
        seen: set[int] = set()
        for members in self.bags.values():
            if seen.intersection(members):
                raise InputError("袋は互いに素である必要があります。")
            seen.update(members)

    def __getitem__(self, x: int) -> tuple[int, ...]:
        return self.bags[x]

    def covered(self) -> set[int]:
        return {v for members in self.bags.values() for v in members}


__all__ = ["PartitionedHost", "Bags"]
