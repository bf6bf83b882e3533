"""
辺の赤青彩色。

大きなホストグラフでは全辺を表で持つとメモリを圧迫するため、
定数・ブロック・シード付き乱択の彩色は辺ごとに遅延評価する。
"""

from __future__ import annotations

import hashlib
from abc import ABC, abstractmethod
from dataclasses import dataclass
from enum import Enum
from typing import Iterator, Mapping

from domain.errors import InputError

from .graph import Graph


class Colour(str, Enum):
    RED = "R"
    BLUE = "B"

    @property
    def other(self) -> "Colour":
        return Colour.BLUE if self is Colour.RED else Colour.RED

    @property
    def label(self) -> str:
        return "red" if self is Colour.RED else "blue"


class EdgeColouring(ABC):
    """グラフの全辺から {Red, Blue} への写像。"""

    graph: Graph

    @abstractmethod
    def colour(self, u: int, v: int) -> Colour:
        """辺 uv の色。uv が辺であることは呼び出し側が保証する。"""

    def items(self) -> Iterator[tuple[tuple[int, int], Colour]]:
        for u, v in self.graph.edges():
            yield (u, v), self.colour(u, v)

    def count(self, colour: Colour) -> int:
        return sum(1 for _, c in self.items() if c is colour)

    def colour_class(self, colour: Colour) -> Graph:
        """指定色の辺だけからなる全域部分グラフ。"""

        adjacency = tuple(
            tuple(v for v in self.graph.neighbours(u) if self.colour(u, v) is colour)
            for u in range(self.graph.n)
        )
        return Graph(adjacency)

    def to_table(self) -> "TableColouring":
        return TableColouring(self.graph, dict(self.items()))


@dataclass(frozen=True, eq=False)
class TableColouring(EdgeColouring):
    """辺ごとの色を明示的に保持する彩色。"""

    graph: Graph
    table: Mapping[tuple[int, int], Colour]

    def __post_init__(self) -> None:
        if len(self.table) != self.graph.edge_count:
            raise InputError(
                f"彩色の辺数 {len(self.table)} がグラフの辺数 {self.graph.edge_count} と一致しません。"
            )
        for u, v in self.graph.edges():
            if (u, v) not in self.table:
                raise InputError(f"辺 ({u}, {v}) に色が割り当てられていません。")

    def colour(self, u: int, v: int) -> Colour:
        key = (u, v) if u < v else (v, u)
        try:
            return self.table[key]
        except KeyError as exc:
            raise InputError(f"({u}, {v}) はグラフの辺ではありません。") from exc


@dataclass(frozen=True, eq=False)
class ConstantColouring(EdgeColouring):
    graph: Graph
    fixed: Colour

    def colour(self, u: int, v: int) -> Colour:
        return self.fixed


@dataclass(frozen=True, eq=False)
class BlockColouring(EdgeColouring):
    """
    連続する ``block_size`` 頂点を 1 ブロックとし、ブロック内の辺を ``inner``、
    ブロック間の辺を ``inner.other`` で塗る彩色。
    """

    graph: Graph
    block_size: int
    inner: Colour

    def __post_init__(self) -> None:
        if self.block_size < 1:
            raise InputError("block_size は正の値である必要があります。")

    def colour(self, u: int, v: int) -> Colour:
        if u // self.block_size == v // self.block_size:
            return self.inner
        return self.inner.other


@dataclass(frozen=True, eq=False)
class SeededRandomColouring(EdgeColouring):
    """シードと辺の組から BLAKE2b で決定的に色を定める一様乱択彩色。"""

    graph: Graph
    seed: int

    def colour(self, u: int, v: int) -> Colour:
        if u > v:
            u, v = v, u
        digest = hashlib.blake2b(
            f"{self.seed}:{u}:{v}".encode("ascii"), digest_size=1
        ).digest()
        return Colour.BLUE if digest[0] & 1 else Colour.RED


__all__ = [
    "Colour",
    "EdgeColouring",
    "TableColouring",
    "ConstantColouring",
    "BlockColouring",
    "SeededRandomColouring",
]
