"""
metrics セクションの provider ごとの初期化。
"""

from __future__ import annotations

import logging
from typing import Any, Mapping

from prometheus_client import CollectorRegistry
from pydantic import BaseModel, ConfigDict, Field, ValidationError

from application.observability import reset_observability, use_metrics_recorder, use_telemetry_span
from infrastructure.metrics import (
    MetricsRecorder,
    PrometheusMetricsRegistry,
    TelemetryManager,
    configure_tracing,
    register_textfile_at_exit,
)

from .container import InvalidConfigurationError, MetricsConfigurator

logger = logging.getLogger("ramsey_forge.bootstrap")


class OtelOptionsModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    enabled: bool = False
    service_name: str = Field(default="ramsey-forge", min_length=1)
    resource_attributes: dict[str, str] = Field(default_factory=dict)


class PrometheusOptionsModel(BaseModel):
    """
    metrics.options の検証モデル。

    Attributes:
        textfile: 終了時にレジストリを書き出す node-exporter textfile のパス。
        histogram_buckets: メトリクス名ごとのバケット境界（秒）。
        default_labels: 全メトリクスに付与するラベル。
        otel: コンソールスパン出力の設定。
    """

    model_config = ConfigDict(extra="forbid")

    textfile: str | None = None
    histogram_buckets: dict[str, tuple[float, ...]] = Field(default_factory=dict)
    default_labels: dict[str, str] = Field(default_factory=dict)
    otel: OtelOptionsModel = Field(default_factory=OtelOptionsModel)


def _provider_of(config: Mapping[str, Any]) -> str:
    provider = config.get("provider")
    if not isinstance(provider, str) or not provider:
        raise InvalidConfigurationError("metrics.provider は非空の文字列である必要があります。")
    return provider


class _ProviderConfigurator(MetricsConfigurator):
    EXPECTED_PROVIDER = ""

    def configure(self, config: Mapping[str, Any]) -> None:
        provider = _provider_of(config)
        if provider != self.EXPECTED_PROVIDER:
            raise InvalidConfigurationError(
                f"provider '{provider}' は {type(self).__name__} では扱えません。"
            )
        self._apply(config)

    def _apply(self, config: Mapping[str, Any]) -> None:
        raise NotImplementedError


class MetricsConfiguratorRegistry(MetricsConfigurator):
    """provider 名で委譲先を選ぶ。"""

    def __init__(self, delegates: Mapping[str, MetricsConfigurator]) -> None:
        if not delegates:
            raise ValueError("メトリクス設定の委譲先が定義されていません。")
        self._delegates = dict(delegates)

    def configure(self, config: Mapping[str, Any]) -> None:
        provider = _provider_of(config)
        delegate = self._delegates.get(provider)
        if delegate is None:
            known = ", ".join(sorted(self._delegates))
            raise InvalidConfigurationError(f"metrics provider '{provider}' は未対応です（対応: {known}）。")
        delegate.configure(config)


class NoopMetricsConfigurator(_ProviderConfigurator):
    """記録もスパンも行わない既定状態に戻す。"""

    EXPECTED_PROVIDER = "noop"

    def _apply(self, config: Mapping[str, Any]) -> None:
        reset_observability()


class PrometheusMetricsConfigurator(_ProviderConfigurator):
    """
    バッチ実行向け。終了時に textfile へ書き出し、otel.enabled ならスパンを stderr に出す。
    """

    EXPECTED_PROVIDER = "prometheus"

    def __init__(self) -> None:
        self.registry: CollectorRegistry | None = None

    def _apply(self, config: Mapping[str, Any]) -> None:
        try:
            options = PrometheusOptionsModel.model_validate(config.get("options") or {})
        except ValidationError as exc:
            raise InvalidConfigurationError(f"metrics.options の検証に失敗しました: {exc}") from exc

        registry = CollectorRegistry()
        MetricsRecorder.configure(
            PrometheusMetricsRegistry(registry=registry, histogram_buckets=options.histogram_buckets),
            default_labels=options.default_labels,
        )
        use_metrics_recorder(MetricsRecorder)
        self.registry = registry

        if options.textfile:
            register_textfile_at_exit(registry, options.textfile)
            logger.debug("metrics textfile registered at %s", options.textfile)

        if options.otel.enabled:
            configure_tracing(
                service_name=options.otel.service_name,
                environment=options.default_labels.get("environment"),
                resource_attributes=options.otel.resource_attributes,
            )
            use_telemetry_span(TelemetryManager.span)
        else:
            use_telemetry_span(None)
