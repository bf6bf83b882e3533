"""
(N, D, λ)-グラフのスペクトル情報を表す値オブジェクト。
"""

from __future__ import annotations

import math
from dataclasses import dataclass

EIGEN_TOLERANCE = 1e-6


@dataclass(frozen=True)
class SpectralProfile:
    """
    Attributes:
        n: 頂点数 N。
        d: 正則次数 D。
        lambda_: 最大固有値以外の固有値の絶対値の最大値 λ。
        top: 計算された最大固有値。
    """

    n: int
    d: int
    lambda_: float
    top: float

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("n は正の値である必要があります。")
        if self.d < 0:
            raise ValueError("d は 0 以上である必要があります。")
        if self.lambda_ < 0:
            raise ValueError("lambda_ は 0 以上である必要があります。")
        if abs(self.top - self.d) > EIGEN_TOLERANCE:
            raise ValueError(f"最大固有値 {self.top} が次数 {self.d} と一致しません。")
        if self.lambda_ > self.d + EIGEN_TOLERANCE:
            raise ValueError(f"lambda_ {self.lambda_} が次数 {self.d} を超えています。")

    @property
    def ramanujan_threshold(self) -> float:
        """受理閾値 2√D。"""

        return 2.0 * math.sqrt(self.d)

    @property
    def accepted(self) -> bool:
        return self.lambda_ <= self.ramanujan_threshold

    def to_dict(self) -> dict[str, float | int | bool]:
        return {"n": self.n, "d": self.d, "lambda": self.lambda_, "accepted": self.accepted}
