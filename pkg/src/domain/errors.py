"""
ramsey-forge 全体で共有する例外階層。

ドメイン層・アプリケーション層の例外は全て ``RamseyForgeError`` を基底とし、
CLI 層ではこの基底で捕捉して終了コード 2 に変換する。
"""

from __future__ import annotations

from typing import Mapping


class RamseyForgeError(RuntimeError):
    """ramsey-forge の基底例外。"""


class InputError(RamseyForgeError):
    """入力オブジェクトが不正な場合の例外（非置換の順序、非正則グラフなど）。"""


class ParseError(InputError):
    """テキスト形式の読み込みに失敗した場合の例外。"""

    def __init__(self, message: str, *, line: int, source: str | None = None) -> None:
        self.line = line
        self.source = source
        location = f"{source}:{line}" if source else f"line {line}"
        super().__init__(f"{location}: {message}")


class ParameterError(RamseyForgeError):
    """数値パラメータが不正な場合の例外。"""


class PreconditionError(RamseyForgeError):
    """補題の前提条件を満たさない場合の例外。"""


class SizeError(RamseyForgeError):
    """頂点数がプラットフォーム上限を超える場合の例外。"""


class GenerationError(RamseyForgeError):
    """乱択生成が試行上限内に成功しなかった場合の例外。"""

    def __init__(self, message: str, *, attempts: int) -> None:
        self.attempts = attempts
        super().__init__(f"{message} (attempts={attempts})")


class BudgetExceededError(RamseyForgeError):
    """
    探索予算を使い切った場合の例外。

    「存在しない」と「判定不能」を区別するため、NotFoundError とは別系統とする。
    """

    def __init__(self, message: str, *, budget: int, explored: int) -> None:
        self.budget = budget
        self.explored = explored
        super().__init__(f"{message} (budget={budget}, explored={explored})")


class NotFoundError(RamseyForgeError):
    """完全探索の結果、対象が存在しなかった場合の例外。"""


class ContractViolationError(RamseyForgeError):
    """証明の各段階が保証する性質が具体的なデータ上で成立しなかった場合の例外。"""


class LiftFailure(RamseyForgeError):
    """局所再サンプリングが上限回数内に収束しなかった場合の例外。"""

    def __init__(self, message: str, *, resamples: int, statistics: Mapping[str, int]) -> None:
        self.resamples = resamples
        self.statistics = dict(statistics)
        super().__init__(f"{message} (resamples={resamples})")


__all__ = [
    "RamseyForgeError",
    "InputError",
    "ParseError",
    "ParameterError",
    "PreconditionError",
    "SizeError",
    "GenerationError",
    "BudgetExceededError",
    "NotFoundError",
    "ContractViolationError",
    "LiftFailure",
]
