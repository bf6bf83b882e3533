"""
探索・乱択処理の上限値。
"""

from __future__ import annotations

from dataclasses import dataclass, fields, replace
from typing import Any, Mapping


@dataclass(frozen=True)
class SearchBudget:
    """
    Attributes:
        node_budget: バックトラック探索のノード数上限。
        subset_budget: 違反集合の完全列挙で調べる部分集合数の上限。
        kss_budget: K_{s,s} 探索で調べる候補数の上限。
        lll_resample_cap: 局所再サンプリングの回数上限。
        regular_attempt_cap: 正則グラフ生成の試行回数上限。
        regeneration_cap: λ 受理までの再生成回数上限。
        dense_eigen_limit: 密行列固有値分解を使う頂点数の上限。
    """

    node_budget: int = 10**9
    subset_budget: int = 10**7
    kss_budget: int = 10**7
    lll_resample_cap: int = 10**6
    regular_attempt_cap: int = 10**6
    regeneration_cap: int = 50
    dense_eigen_limit: int = 5000

    def __post_init__(self) -> None:
        for item in fields(self):
            if getattr(self, item.name) <= 0:
                raise ValueError(f"{item.name} は正の値である必要があります。")

    @classmethod
    def from_mapping(cls, mapping: Mapping[str, Any]) -> "SearchBudget":
        known = {item.name for item in fields(cls)}
        return cls(**{key: int(value) for key, value in mapping.items() if key in known})

    def with_node_budget(self, limit: int) -> "SearchBudget":
        """ノード数上限を置き換え、他の探索予算もその値で上から抑える。"""

        return replace(
            self,
            node_budget=limit,
            subset_budget=min(self.subset_budget, limit),
            kss_budget=min(self.kss_budget, limit),
        )
