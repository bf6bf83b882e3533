from __future__ import annotations

from pathlib import Path
from typing import Iterator

import pytest
from prometheus_client import CollectorRegistry

from infrastructure.metrics import MetricsRecorder, PrometheusMetricsRegistry, write_metrics_textfile


@pytest.fixture
def registry() -> Iterator[CollectorRegistry]:
    collector = CollectorRegistry()
    MetricsRecorder.configure(
        PrometheusMetricsRegistry(collector, histogram_buckets={"stage_duration_seconds": [0.1, 1.0]}),
        default_labels={"service": "ramsey-forge"},
    )
    yield collector
    MetricsRecorder.reset()


def test_search_nodes_are_counted_per_search(registry: CollectorRegistry) -> None:
    MetricsRecorder.increment_search_nodes("embed_tree", 12)
    MetricsRecorder.increment_search_nodes("embed_tree", 3)
    MetricsRecorder.increment_search_nodes("kss", 0)

    labels = {"service": "ramsey-forge", "search": "embed_tree"}
    assert registry.get_sample_value("ramsey_forge_search_nodes_total", labels) == 15.0
    assert registry.get_sample_value(
        "ramsey_forge_search_nodes_total", {"service": "ramsey-forge", "search": "kss"}
    ) is None


def test_stage_counters_and_durations(registry: CollectorRegistry) -> None:
    MetricsRecorder.increment_stage("lift", "ok")
    MetricsRecorder.increment_stage("lift", "failed")
    MetricsRecorder.observe_stage_duration("lift", 0.5)

    assert registry.get_sample_value(
        "ramsey_forge_pipeline_stage_total", {"service": "ramsey-forge", "stage": "lift", "status": "ok"}
    ) == 1.0
    assert registry.get_sample_value(
        "ramsey_forge_stage_duration_seconds_bucket",
        {"service": "ramsey-forge", "stage": "lift", "le": "1.0"},
    ) == 1.0
    assert registry.get_sample_value(
        "ramsey_forge_stage_duration_seconds_bucket",
        {"service": "ramsey-forge", "stage": "lift", "le": "0.1"},
    ) == 0.0


def test_resample_and_regeneration_counters(registry: CollectorRegistry) -> None:
    MetricsRecorder.increment_lll_resamples(7)
    MetricsRecorder.increment_expander_regenerations(2)

    assert registry.get_sample_value("ramsey_forge_lll_resamples_total", {"service": "ramsey-forge"}) == 7.0
    assert registry.get_sample_value(
        "ramsey_forge_expander_regenerations_total", {"service": "ramsey-forge"}
    ) == 2.0


def test_recorder_ignores_updates_after_reset() -> None:
    MetricsRecorder.reset()

    MetricsRecorder.increment_search_nodes("embed_tree", 5)
    MetricsRecorder.increment_stage("lift", "ok")


def test_textfile_export(registry: CollectorRegistry, tmp_path: Path) -> None:
    MetricsRecorder.increment_lll_resamples(1)

    target = write_metrics_textfile(registry, tmp_path / "nested" / "metrics.prom")

    assert "ramsey_forge_lll_resamples_total" in target.read_text(encoding="utf-8")
