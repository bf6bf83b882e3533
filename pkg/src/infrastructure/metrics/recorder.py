"""
探索・パイプラインのメトリクス記録ユーティリティ。
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .metric_types import Counter, Histogram, MetricsRegistry


@dataclass
class _MetricHandles:
    search_nodes_total: Counter
    pipeline_stage_total: Counter
    stage_duration_seconds: Histogram
    lll_resamples_total: Counter
    expander_regenerations_total: Counter


class MetricsRecorder:
    """
    application.observability に登録するメトリクス記録器。
    MetricsRegistry が未設定の場合はすべての更新を無視する。
    """

    _registry: MetricsRegistry | None = None
    _handles: _MetricHandles | None = None
    _default_labels: Mapping[str, str] = {}

    @classmethod
    def configure(
        cls,
        registry: MetricsRegistry,
        *,
        default_labels: Mapping[str, str] | None = None,
    ) -> None:
        cls._registry = registry
        cls._default_labels = default_labels or {}
        base_label_names = tuple(cls._default_labels.keys())

        def _label_names(*names: str) -> tuple[str, ...]:
            return base_label_names + names

        cls._handles = _MetricHandles(
            search_nodes_total=registry.counter(
                "search_nodes",
                "Backtracking and enumeration nodes explored per search kind",
                labels=_label_names("search"),
            ),
            pipeline_stage_total=registry.counter(
                "pipeline_stage",
                "Pipeline stage completions by status",
                labels=_label_names("stage", "status"),
            ),
            stage_duration_seconds=registry.histogram(
                "stage_duration_seconds",
                "Wall-clock duration of each pipeline stage",
                labels=_label_names("stage"),
            ),
            lll_resamples_total=registry.counter(
                "lll_resamples",
                "Local resampling steps performed by the lift",
                labels=_label_names(),
            ),
            expander_regenerations_total=registry.counter(
                "expander_regenerations",
                "Regular graphs rejected by the spectral acceptance test",
                labels=_label_names(),
            ),
        )

    @classmethod
    def _merge_labels(cls, extra: Mapping[str, str] | None) -> Mapping[str, str]:
        if not extra:
            return cls._default_labels
        merged = dict(cls._default_labels)
        merged.update(extra)
        return merged

    @classmethod
    def increment_search_nodes(cls, search: str, nodes: int) -> None:
        if not cls._handles or nodes <= 0:
            return
        labels = cls._merge_labels({"search": search})
        cls._handles.search_nodes_total.inc(float(nodes), labels=labels)

    @classmethod
    def increment_stage(cls, stage: str, status: str) -> None:
        if not cls._handles:
            return
        labels = cls._merge_labels({"stage": stage, "status": status})
        cls._handles.pipeline_stage_total.inc(1.0, labels=labels)

    @classmethod
    def observe_stage_duration(cls, stage: str, duration_seconds: float) -> None:
        if not cls._handles:
            return
        labels = cls._merge_labels({"stage": stage})
        cls._handles.stage_duration_seconds.observe(duration_seconds, labels=labels)

    @classmethod
    def increment_lll_resamples(cls, count: int) -> None:
        if not cls._handles or count <= 0:
            return
        cls._handles.lll_resamples_total.inc(float(count), labels=cls._merge_labels(None))

    @classmethod
    def increment_expander_regenerations(cls, count: int) -> None:
        if not cls._handles or count <= 0:
            return
        cls._handles.expander_regenerations_total.inc(float(count), labels=cls._merge_labels(None))

    @classmethod
    def reset(cls) -> None:
        cls._registry = None
        cls._handles = None
        cls._default_labels = {}
