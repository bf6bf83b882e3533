"""
OpenTelemetry のコンソールエクスポータ登録。
"""

from __future__ import annotations

import sys
from typing import Mapping

from opentelemetry.sdk.trace.export import ConsoleSpanExporter

from .telemetry_runtime import TelemetryManager


def configure_tracing(
    *,
    service_name: str,
    environment: str | None = None,
    resource_attributes: Mapping[str, str] | None = None,
) -> None:
    """スパンを標準エラーへ書き出す。標準出力は CLI の結果専用。"""

    TelemetryManager.configure(
        exporter=ConsoleSpanExporter(out=sys.stderr),
        service_name=service_name,
        environment=environment,
        additional_resources=resource_attributes,
    )
