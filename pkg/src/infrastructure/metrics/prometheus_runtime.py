"""
prometheus-client を使う MetricsRegistry と、テキストファイルへの書き出し。
"""

from __future__ import annotations

import atexit
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Mapping, Sequence

from prometheus_client import (
    CollectorRegistry,
    Counter as PrometheusCounter,
    Histogram as PrometheusHistogram,
    write_to_textfile,
)

from .metric_types import Counter, Histogram, MetricsRegistry

logger = logging.getLogger("ramsey_forge.metrics")


class _CounterAdapter(Counter):
    def __init__(self, metric: PrometheusCounter) -> None:
        self._metric = metric

    def inc(self, value: float = 1.0, labels: Mapping[str, str] | None = None) -> None:
        if labels:
            self._metric.labels(**labels).inc(value)
        else:
            self._metric.inc(value)


class _HistogramAdapter(Histogram):
    def __init__(self, metric: PrometheusHistogram) -> None:
        self._metric = metric

    def observe(self, value: float, labels: Mapping[str, str] | None = None) -> None:
        if labels:
            self._metric.labels(**labels).observe(value)
        else:
            self._metric.observe(value)


@dataclass
class PrometheusMetricsRegistry(MetricsRegistry):
    """
    名前に namespace を前置する。ヒストグラムのバケットはメトリクス名ごとに上書きできる。
    同じ (名前, ラベル名) の要求には同じメトリクスを返す。
    """

    registry: CollectorRegistry
    namespace: str = "ramsey_forge"
    histogram_buckets: Mapping[str, Sequence[float]] | None = None

    _metrics: dict[tuple[str, str, tuple[str, ...]], Any] = field(default_factory=dict, init=False)

    def _metric(
        self,
        kind: type[Any],
        name: str,
        documentation: str,
        labels: tuple[str, ...] | None,
        **extra: Any,
    ) -> Any:
        label_names = tuple(sorted(labels or ()))
        key = (kind.__name__, name, label_names)
        if key not in self._metrics:
            self._metrics[key] = kind(
                name,
                documentation,
                labelnames=label_names,
                namespace=self.namespace,
                registry=self.registry,
                **extra,
            )
        return self._metrics[key]

    def counter(self, name: str, documentation: str, labels: tuple[str, ...] | None = None) -> Counter:
        return _CounterAdapter(self._metric(PrometheusCounter, name, documentation, labels))

    def histogram(self, name: str, documentation: str, labels: tuple[str, ...] | None = None) -> Histogram:
        bounds = (self.histogram_buckets or {}).get(name)
        extra = {"buckets": tuple(float(b) for b in bounds)} if bounds else {}
        return _HistogramAdapter(self._metric(PrometheusHistogram, name, documentation, labels, **extra))


def write_metrics_textfile(registry: CollectorRegistry, path: str | Path) -> Path:
    """
    node_exporter の textfile collector 形式で registry を書き出す。
    """

    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    write_to_textfile(str(target), registry)
    logger.debug("metrics written to %s", target)
    return target


def register_textfile_at_exit(registry: CollectorRegistry, path: str | Path) -> None:
    """プロセス終了時に write_metrics_textfile を呼ぶよう登録する。"""

    def _flush() -> None:
        try:
            write_metrics_textfile(registry, path)
        except OSError:
            logger.warning("failed to write metrics textfile %s", path, exc_info=True)

    atexit.register(_flush)
