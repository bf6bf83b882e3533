from __future__ import annotations

import logging
from pathlib import Path
from typing import Any, Mapping

import pytest

from application.observability import metrics_recorder, reset_observability
from bootstrap import (
    BootstrapContainer,
    ConfigBundle,
    DictConfigLoggingConfigurator,
    InvalidConfigurationError,
    MetricsConfiguratorRegistry,
    MissingConfigurationError,
    NoopMetricsConfigurator,
    PrometheusMetricsConfigurator,
)
from infrastructure.metrics import MetricsRecorder

_SEARCH = {
    "node_budget": 10,
    "subset_budget": 10,
    "kss_budget": 10,
    "lll_resample_cap": 10,
    "regular_attempt_cap": 10,
    "regeneration_cap": 10,
    "dense_eigen_limit": 10,
}


class _StaticLoader:
    def __init__(self, root: Mapping[str, Any]) -> None:
        self._root = root

    def load(self) -> ConfigBundle:
        return ConfigBundle(root=self._root)


class _RecordingConfigurator:
    def __init__(self) -> None:
        self.calls: list[Mapping[str, Any]] = []

    def configure(self, config: Mapping[str, Any]) -> None:
        self.calls.append(config)


def test_container_configures_logging_then_metrics() -> None:
    logging_configurator = _RecordingConfigurator()
    metrics_configurator = _RecordingConfigurator()
    root = {"logging": {"version": 1}, "metrics": {"provider": "noop"}, "search": _SEARCH}
    container = BootstrapContainer(
        project_root=Path("."),
        config_loader_factory=lambda _: _StaticLoader(root),
        logging_configurator=logging_configurator,
        metrics_configurator=metrics_configurator,
    )

    context = container.initialize()

    assert logging_configurator.calls == [{"version": 1}]
    assert metrics_configurator.calls == [{"provider": "noop"}]
    assert context.budget.node_budget == 10


def test_missing_section_is_reported() -> None:
    with pytest.raises(MissingConfigurationError):
        ConfigBundle(root={}).require_section("search")
    with pytest.raises(InvalidConfigurationError):
        ConfigBundle(root={"search": 3}).require_section("search")


def test_invalid_budget_is_reported() -> None:
    with pytest.raises(InvalidConfigurationError):
        ConfigBundle(root={"search": {**_SEARCH, "node_budget": 0}}).search_budget()


def test_metrics_registry_dispatches_by_provider() -> None:
    delegate = _RecordingConfigurator()
    registry = MetricsConfiguratorRegistry({"noop": delegate})

    registry.configure({"provider": "noop"})

    assert delegate.calls == [{"provider": "noop"}]
    with pytest.raises(InvalidConfigurationError):
        registry.configure({"provider": "statsd"})


def test_prometheus_configurator_installs_recorder() -> None:
    configurator = PrometheusMetricsConfigurator()
    try:
        configurator.configure(
            {
                "provider": "prometheus",
                "options": {
                    "histogram_buckets": {"stage_duration_seconds": [0.5, 5]},
                    "default_labels": {"service": "ramsey-forge"},
                    "otel": {"enabled": False},
                },
            }
        )
        metrics_recorder().increment_search_nodes("kss", 4)

        assert configurator.registry is not None
        assert configurator.registry.get_sample_value(
            "ramsey_forge_search_nodes_total", {"service": "ramsey-forge", "search": "kss"}
        ) == 4.0
    finally:
        MetricsRecorder.reset()
        reset_observability()


def test_prometheus_configurator_rejects_bad_buckets() -> None:
    with pytest.raises(InvalidConfigurationError):
        PrometheusMetricsConfigurator().configure(
            {"provider": "prometheus", "options": {"histogram_buckets": {"stage_duration_seconds": "fast"}}}
        )


def test_noop_configurator_resets_recorder() -> None:
    NoopMetricsConfigurator().configure({"provider": "noop"})

    assert metrics_recorder() is not MetricsRecorder
    with pytest.raises(InvalidConfigurationError):
        NoopMetricsConfigurator().configure({"provider": "prometheus"})


def test_logging_level_override() -> None:
    configurator = DictConfigLoggingConfigurator(level_override="debug")

    configurator.configure({"version": 1, "disable_existing_loggers": False})

    assert logging.getLogger("ramsey_forge").level == logging.DEBUG
    with pytest.raises(InvalidConfigurationError):
        DictConfigLoggingConfigurator(level_override="chatty").configure(
            {"version": 1, "disable_existing_loggers": False}
        )
    with pytest.raises(InvalidConfigurationError):
        DictConfigLoggingConfigurator().configure({})


def test_prometheus_configurator_rejects_unknown_option() -> None:
    with pytest.raises(InvalidConfigurationError, match="port"):
        PrometheusMetricsConfigurator().configure({"provider": "prometheus", "options": {"port": 9100}})
