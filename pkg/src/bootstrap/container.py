"""
CLI 起動時の初期化を担う DI コンテナ。

設定は YAML からのみ読み込み、ロギング・メトリクスを初期化したうえで、
探索予算を含む初期化済みコンテキストを返す。
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Any, Callable, Mapping, Protocol

from domain.value_objects import SearchBudget


class ConfigLoader(Protocol):
    """設定ファイル群を読み込み、検証済みの構成を返すインターフェース。"""

    def load(self) -> "ConfigBundle":
        raise NotImplementedError


class LoggingConfigurator(Protocol):
    def configure(self, config: Mapping[str, Any]) -> None:
        raise NotImplementedError


class MetricsConfigurator(Protocol):
    def configure(self, config: Mapping[str, Any]) -> None:
        raise NotImplementedError


class BootstrapError(RuntimeError):
    """ブートストラップ処理でのエラーを表す基底例外。"""


class MissingConfigurationError(BootstrapError):
    """必須設定が欠落している場合の例外。"""


class InvalidConfigurationError(BootstrapError):
    """設定値が期待する形式ではない場合の例外。"""


@dataclass(frozen=True)
class ConfigBundle:
    """設定 YAML から構築された辞書ラッパー。"""

    root: Mapping[str, Any]

    def require_section(self, section: str) -> Mapping[str, Any]:
        """
        Raises:
            MissingConfigurationError: セクションが存在しない場合。
            InvalidConfigurationError: セクションがマッピングではない場合。
        """

        if section not in self.root:
            raise MissingConfigurationError(f"設定セクション '{section}' が存在しません。")

        value = self.root[section]
        if not isinstance(value, Mapping):
            raise InvalidConfigurationError(
                f"設定セクション '{section}' は Mapping である必要があります。"
            )
        return value

    def search_budget(self) -> SearchBudget:
        try:
            return SearchBudget.from_mapping(self.require_section("search"))
        except (TypeError, ValueError) as exc:
            raise InvalidConfigurationError(f"search 設定が不正です: {exc}") from exc


@dataclass(frozen=True)
class BootstrapContext:
    """
    Attributes:
        config: 検証済みの設定。
        budget: search セクションから組み立てた探索予算。
    """

    config: ConfigBundle
    budget: SearchBudget


@dataclass
class BootstrapContainer:
    """
    Attributes:
        project_root: configs/ を含むディレクトリ。
        config_loader_factory: ConfigLoader を生成するファクトリ。
        logging_configurator: ロギング設定適用オブジェクト。
        metrics_configurator: メトリクス設定適用オブジェクト。
    """

    project_root: Path
    config_loader_factory: Callable[[Path], ConfigLoader]
    logging_configurator: LoggingConfigurator
    metrics_configurator: MetricsConfigurator

    def initialize(self) -> BootstrapContext:
        """
        Raises:
            BootstrapError: 初期化過程での検証エラー。
        """

        config_bundle = self.config_loader_factory(self.project_root).load()

        self.logging_configurator.configure(config_bundle.require_section("logging"))
        self.metrics_configurator.configure(config_bundle.require_section("metrics"))

        return BootstrapContext(config=config_bundle, budget=config_bundle.search_budget())
