"""
OpenTelemetry ランタイムの初期化とスパン生成ヘルパ。
"""

from __future__ import annotations

import atexit
from contextlib import contextmanager
from typing import Iterator, Mapping

from opentelemetry import trace
from opentelemetry.sdk.resources import Resource
from opentelemetry.sdk.trace import TracerProvider
from opentelemetry.sdk.trace.export import BatchSpanProcessor, SpanExporter

_SCALAR = (str, bool, int, float)


class TelemetryManager:
    """
    プロセス内で 1 つの TracerProvider を保持する。
    未設定のまま span を開いた場合は何も記録しない。
    """

    _tracer_provider: TracerProvider | None = None
    _tracer = trace.get_tracer("ramsey_forge")
    _configured = False
    _shutdown_registered = False

    @classmethod
    def configure(
        cls,
        *,
        exporter: SpanExporter,
        service_name: str,
        environment: str | None = None,
        additional_resources: Mapping[str, str] | None = None,
    ) -> None:
        resource_attributes = {"service.name": service_name}
        if environment:
            resource_attributes["deployment.environment"] = environment
        if additional_resources:
            resource_attributes.update(additional_resources)

        tracer_provider = TracerProvider(resource=Resource.create(resource_attributes))
        tracer_provider.add_span_processor(BatchSpanProcessor(exporter))
        cls._tracer_provider = tracer_provider
        cls._tracer = tracer_provider.get_tracer(service_name)
        cls._configured = True

        if not cls._shutdown_registered:
            atexit.register(cls.shutdown)
            cls._shutdown_registered = True

    @classmethod
    def is_configured(cls) -> bool:
        return cls._configured

    @classmethod
    def shutdown(cls) -> None:
        if cls._tracer_provider is not None:
            cls._tracer_provider.shutdown()
            cls._tracer_provider = None
        cls._tracer = trace.get_tracer("ramsey_forge")
        cls._configured = False

    @classmethod
    @contextmanager
    def span(cls, name: str, attributes: Mapping[str, object] | None = None) -> Iterator[object | None]:
        if not cls._configured:
            yield None
            return
        with cls._tracer.start_as_current_span(name) as span:
            for key, value in (attributes or {}).items():
                if isinstance(value, _SCALAR):
                    span.set_attribute(key, value)
                elif isinstance(value, (list, tuple)) and all(isinstance(item, _SCALAR) for item in value):
                    span.set_attribute(key, list(value))
                else:
                    span.set_attribute(key, str(value))
            yield span
