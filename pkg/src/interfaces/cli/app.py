"""
Typer ベースの CLI。
"""

from __future__ import annotations

import typer

from bootstrap import ENV_VARIABLE, default_container

from .commands import constructions, degenerate, embedding, expander, pipeline, verify
from .runtime import CliState, cli_errors, project_root


def _bootstrap(
    ctx: typer.Context,
    env: str = typer.Option("dev", "--env", envvar=ENV_VARIABLE, help="configs/envs 配下の環境名"),
    log_level: str | None = typer.Option(None, "--log-level", help="ramsey_forge ロガーのレベルを上書きする"),
) -> None:
    if ctx.resilient_parsing:
        return
    with cli_errors():
        context = default_container(project_root(), environment=env, log_level=log_level).initialize()
    ctx.obj = CliState(budget=context.budget)


def create_cli() -> typer.Typer:
    app = typer.Typer(
        help="ramsey-forge: 有界木幅グラフの size Ramsey 構成と検証",
        no_args_is_help=True,
        pretty_exceptions_enable=False,
    )
    app.callback()(_bootstrap)
    for module in (expander, constructions, degenerate, embedding, pipeline, verify):
        module.register(app)
    return app


def main() -> None:
    create_cli()()
