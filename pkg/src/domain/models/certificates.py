"""
検証可能な結果オブジェクト群。

拡張性の証明書・多部グラフ証明書・単色コピーの Witness・段階失敗報告・検証レポート。
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Mapping, Union

from domain.errors import InputError

from .colouring import Colour
from .embedding import Embedding
from .rooted_tree import RootedTree


@dataclass(frozen=True)
class Violation:
    """検証で見つかった違反 1 件。"""

    kind: str
    vertices: tuple[int, ...] = ()
    detail: str = ""

    def to_dict(self) -> dict[str, Any]:
        return {"kind": self.kind, "vertices": list(self.vertices), "detail": self.detail}


@dataclass(frozen=True)
class Report:
    """
    検証レポート。``ok`` は違反が空であることと同値。
    """

    violations: tuple[Violation, ...] = ()
    stats: Mapping[str, int] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict[str, Any]:
        return {
            "ok": self.ok,
            "violations": [violation.to_dict() for violation in self.violations],
            "stats": dict(self.stats),
        }


@dataclass(frozen=True)
class ExpansionCheck:
    """
    |Γ(X)| ≥ (d+1)|X| の検査結果。

    Attributes:
        violating: 違反集合。拡張性を満たす場合は None。
        exact: 完全列挙による判定であれば True、ヒューリスティックなら False。
        examined: 調べた部分集合の数。
    """

    violating: tuple[int, ...] | None
    exact: bool
    examined: int

    @property
    def ok(self) -> bool:
        return self.violating is None


@dataclass(frozen=True)
class BlueExpansion:
    """
    青色クラスが拡張性を満たすことの証明書。

    Attributes:
        vertices: 拡張性を満たす誘導部分グラフの頂点集合（K_N 全体なら全頂点）。
        exact: 拡張性判定が完全列挙によるかどうか。
    """

    vertices: tuple[int, ...]
    exact: bool = True

    def to_dict(self) -> dict[str, Any]:
        return {"kind": "blue-expansion", "vertices": list(self.vertices), "exact": self.exact}


@dataclass(frozen=True)
class RedMultipartite:
    """
    全ての部間の辺が赤である完全 q 部グラフの証明書。

    Attributes:
        parts: 部 Y_1..Y_q。
        peeled: 剥離ループで得た X_1..X_m。
    """

    parts: tuple[tuple[int, ...], ...]
    peeled: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self) -> None:
        seen: set[int] = set()
        for part in self.parts:
            if seen.intersection(part):
                raise InputError("多部グラフの各部は互いに素である必要があります。")
            seen.update(part)

    def to_dict(self) -> dict[str, Any]:
        return {
            "kind": "red-multipartite",
            "parts": [list(part) for part in self.parts],
            "peeled": [list(x) for x in self.peeled],
        }


Dichotomy = Union[BlueExpansion, RedMultipartite]


@dataclass(frozen=True)
class StageResult:
    """パイプラインの 1 段階の結果。"""

    stage: str
    status: str
    detail: Mapping[str, Any] = field(default_factory=dict)

    def to_dict(self) -> dict[str, Any]:
        return {"stage": self.stage, "status": self.status, "detail": dict(self.detail)}


@dataclass(frozen=True)
class Witness:
    """
    ホスト内の単色 T ⊠ K_k の埋め込み。パターン頂点 x·k + j は (x, j) を表す。
    """

    colour: Colour
    tree: RootedTree
    k: int
    embedding: Embedding
    step_log: tuple[StageResult, ...] = ()

    def to_dict(self) -> dict[str, Any]:
        return {
            "outcome": "witness",
            "colour": self.colour.label,
            "pattern": {"tree_root": self.tree.root, "tree_parent": list(self.tree.parent), "k": self.k},
            "embedding": list(self.embedding.image),
            "step_log": [stage.to_dict() for stage in self.step_log],
        }


@dataclass(frozen=True)
class StepFailure:
    """最初に保証が成立しなかった段階の報告。"""

    stage: str
    message: str
    diagnostics: Mapping[str, Any] = field(default_factory=dict)
    step_log: tuple[StageResult, ...] = ()

    def to_dict(self) -> dict[str, Any]:
        return {
            "outcome": "step-failure",
            "stage": self.stage,
            "message": self.message,
            "diagnostics": dict(self.diagnostics),
            "step_log": [stage.to_dict() for stage in self.step_log],
        }


__all__ = [
    "Violation",
    "Report",
    "ExpansionCheck",
    "BlueExpansion",
    "RedMultipartite",
    "Dichotomy",
    "StageResult",
    "Witness",
    "StepFailure",
]
