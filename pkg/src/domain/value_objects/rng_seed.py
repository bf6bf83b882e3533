"""
乱択処理のシード。
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

MAX_SEED = 2**64 - 1


@dataclass(frozen=True)
class RngSeed:
    """
    64 bit 符号なし整数のシード。同じシードとパラメータからは同一の結果を得る。
    """

    value: int

    def __post_init__(self) -> None:
        if not 0 <= self.value <= MAX_SEED:
            raise ValueError("seed は 0 以上 2^64-1 以下である必要があります。")

    def generator(self) -> np.random.Generator:
        return np.random.default_rng(np.random.SeedSequence(self.value))

    def derive(self, *keys: int) -> "RngSeed":
        """``keys`` で識別される独立な子シードを返す。"""

        sequence = np.random.SeedSequence(self.value, spawn_key=tuple(keys))
        return RngSeed(int(sequence.generate_state(1, dtype=np.uint64)[0]))
