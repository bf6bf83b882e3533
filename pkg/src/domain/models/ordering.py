"""
頂点順序とストロング積の頂点符号化。
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from domain.errors import InputError

from .graph import Graph


@dataclass(frozen=True)
class Ordering:
    """
    頂点の並び（置換）と、各頂点が自分より前に持つ隣接頂点数の上限。

    Attributes:
        sequence: 頂点番号の置換。
        back_degree_bound: 前方隣接数の上限。
    """

    sequence: tuple[int, ...]
    back_degree_bound: int

    def __post_init__(self) -> None:
        if self.back_degree_bound < 0:
            raise InputError("back_degree_bound は 0 以上である必要があります。")
        if sorted(self.sequence) != list(range(len(self.sequence))):
            raise InputError("順序は 0..n-1 の置換である必要があります。")

    @cached_property
    def position(self) -> tuple[int, ...]:
        """頂点 -> 順序上の位置。"""

        position = [0] * len(self.sequence)
        for index, v in enumerate(self.sequence):
            position[v] = index
        return tuple(position)

    def ensure_matches(self, graph: Graph) -> None:
        """
        グラフの頂点集合の置換であり、前方隣接数が上限以下であることを検証する。

        Raises:
            InputError: 頂点数が一致しない、または上限を超える頂点がある場合。
        """

        if len(self.sequence) != graph.n:
            raise InputError(
                f"順序の長さ {len(self.sequence)} がグラフの頂点数 {graph.n} と一致しません。"
            )
        position = self.position
        for v in range(graph.n):
            earlier = sum(1 for w in graph.neighbours(v) if position[w] < position[v])
            if earlier > self.back_degree_bound:
                raise InputError(
                    f"頂点 {v} の前方隣接数 {earlier} が上限 {self.back_degree_bound} を超えています。"
                )


@dataclass(frozen=True)
class ProductVertex:
    """G ⊠ K_k の頂点 (base, slot)。id = base·k + slot で符号化する。"""

    base: int
    slot: int

    def __post_init__(self) -> None:
        if self.base < 0 or self.slot < 0:
            raise InputError("base と slot は 0 以上である必要があります。")

    def encode(self, k: int) -> int:
        if not self.slot < k:
            raise InputError(f"slot {self.slot} は k={k} 未満である必要があります。")
        return self.base * k + self.slot

    @classmethod
    def decode(cls, vertex_id: int, k: int) -> "ProductVertex":
        base, slot = divmod(vertex_id, k)
        return cls(base=base, slot=slot)


__all__ = ["Ordering", "ProductVertex"]
