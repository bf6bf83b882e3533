"""
ブートストラップ関連の公開API。
"""

from pathlib import Path

from .config_loader import (
    ENV_VARIABLE,
    NODE_BUDGET_VARIABLE,
    AppConfigModel,
    LoggingConfigModel,
    MetricsConfigModel,
    SearchConfigModel,
    YamlConfigLoader,
)
from .container import (
    BootstrapContainer,
    BootstrapContext,
    BootstrapError,
    ConfigBundle,
    InvalidConfigurationError,
    LoggingConfigurator,
    MetricsConfigurator,
    MissingConfigurationError,
)
from .logging_setup import DictConfigLoggingConfigurator
from .metrics_setup import (
    MetricsConfiguratorRegistry,
    NoopMetricsConfigurator,
    OtelOptionsModel,
    PrometheusMetricsConfigurator,
    PrometheusOptionsModel,
)


def default_container(
    project_root: Path,
    *,
    environment: str | None = None,
    log_level: str | None = None,
) -> BootstrapContainer:
    """YAML 設定・dictConfig・provider 別メトリクス初期化を組み合わせた標準構成。"""

    return BootstrapContainer(
        project_root=project_root,
        config_loader_factory=lambda root: YamlConfigLoader(root, environment=environment),
        logging_configurator=DictConfigLoggingConfigurator(level_override=log_level),
        metrics_configurator=MetricsConfiguratorRegistry(
            {
                NoopMetricsConfigurator.EXPECTED_PROVIDER: NoopMetricsConfigurator(),
                PrometheusMetricsConfigurator.EXPECTED_PROVIDER: PrometheusMetricsConfigurator(),
            }
        ),
    )


__all__ = [
    "AppConfigModel",
    "BootstrapContainer",
    "BootstrapContext",
    "BootstrapError",
    "ConfigBundle",
    "DictConfigLoggingConfigurator",
    "ENV_VARIABLE",
    "InvalidConfigurationError",
    "LoggingConfigModel",
    "LoggingConfigurator",
    "MetricsConfigModel",
    "MetricsConfigurator",
    "MetricsConfiguratorRegistry",
    "MissingConfigurationError",
    "NODE_BUDGET_VARIABLE",
    "NoopMetricsConfigurator",
    "OtelOptionsModel",
    "PrometheusMetricsConfigurator",
    "PrometheusOptionsModel",
    "SearchConfigModel",
    "YamlConfigLoader",
    "default_container",
]
