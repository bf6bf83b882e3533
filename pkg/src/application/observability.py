"""
アプリケーション層から利用する観測性ユーティリティ。

Infrastructure 層で実際のメトリクス・トレーシング実装を登録するまでは
全て no-op として動作する。
"""

from __future__ import annotations

from contextlib import contextmanager, nullcontext
from typing import Callable, ContextManager, Iterator, Mapping, Protocol


class MetricsRecorderProtocol(Protocol):
    def increment_search_nodes(self, search: str, nodes: int) -> None: ...

    def increment_stage(self, stage: str, status: str) -> None: ...

    def observe_stage_duration(self, stage: str, duration_seconds: float) -> None: ...

    def increment_lll_resamples(self, count: int) -> None: ...

    def increment_expander_regenerations(self, count: int) -> None: ...

    def reset(self) -> None: ...


class _NoopMetricsRecorder(MetricsRecorderProtocol):
    def increment_search_nodes(self, search: str, nodes: int) -> None:
        pass

    def increment_stage(self, stage: str, status: str) -> None:
        pass

    def observe_stage_duration(self, stage: str, duration_seconds: float) -> None:
        pass

    def increment_lll_resamples(self, count: int) -> None:
        pass

    def increment_expander_regenerations(self, count: int) -> None:
        pass

    def reset(self) -> None:
        pass


_metrics_recorder: MetricsRecorderProtocol = _NoopMetricsRecorder()
_telemetry_span_factory: (
    Callable[[str, Mapping[str, object] | None], ContextManager[object]] | None
) = None


def use_metrics_recorder(recorder: MetricsRecorderProtocol) -> None:
    global _metrics_recorder
    _metrics_recorder = recorder


def metrics_recorder() -> MetricsRecorderProtocol:
    """現在登録されている記録器。"""

    return _metrics_recorder


def use_telemetry_span(
    factory: Callable[[str, Mapping[str, object] | None], ContextManager[object]] | None,
) -> None:
    """
    factory は (name: str, attributes: Mapping[str, object] | None) -> context manager を返す callable。
    """

    global _telemetry_span_factory
    _telemetry_span_factory = factory


@contextmanager
def telemetry_span(name: str, attributes: Mapping[str, object] | None = None) -> Iterator[None]:
    if _telemetry_span_factory is None:
        with nullcontext():
            yield None
            return
    with _telemetry_span_factory(name, attributes):
        yield None


def reset_observability() -> None:
    use_metrics_recorder(_NoopMetricsRecorder())
    use_telemetry_span(None)
