"""
メトリクス・トレーシング関連の公開API。
"""

from .metric_types import Counter, Histogram, MetricsRegistry
from .otel import configure_tracing
from .prometheus_runtime import PrometheusMetricsRegistry, register_textfile_at_exit, write_metrics_textfile
from .recorder import MetricsRecorder
from .telemetry_runtime import TelemetryManager

__all__ = [
    "Counter",
    "Histogram",
    "MetricsRecorder",
    "MetricsRegistry",
    "PrometheusMetricsRegistry",
    "TelemetryManager",
    "configure_tracing",
    "register_textfile_at_exit",
    "write_metrics_textfile",
]
