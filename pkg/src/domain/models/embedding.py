"""
パターン頂点からホスト頂点への写像。
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from domain.errors import InputError


@dataclass(frozen=True)
class Embedding:
    """
    ``image[x]`` がパターン頂点 x の像となる写像。

    単射性や辺の保存は verify 系の検証器が判定するため、ここでは形式のみを検証する。
    """

    image: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(v < 0 for v in self.image):
            raise InputError("埋め込みの像は 0 以上の頂点番号である必要があります。")

    @property
    def size(self) -> int:
        return len(self.image)

    @property
    def is_injective(self) -> bool:
        return len(set(self.image)) == len(self.image)

    def __getitem__(self, pattern_vertex: int) -> int:
        return self.image[pattern_vertex]

    @classmethod
    def from_mapping(cls, mapping: Mapping[int, int], size: int) -> "Embedding":
        missing = [x for x in range(size) if x not in mapping]
        if missing:
            raise InputError(f"パターン頂点 {missing[:5]} の像が未定義です。")
        return cls(tuple(mapping[x] for x in range(size)))

    def compose(self, mapping: tuple[int, ...]) -> "Embedding":
        """像を ``mapping`` で写し直す（部分グラフ番号から元グラフ番号への変換など）。"""

        return Embedding(tuple(mapping[v] for v in self.image))


__all__ = ["Embedding"]
