"""
決定的なグラフ構成コマンド（冪・強積・ブローアップ・完全 d 分木・切り詰め）。
"""

from __future__ import annotations

import typer

from domain.services import blowup, complete_dary_tree, graph_power, strong_product, truncation
from infrastructure.storage import format_graph, format_tree

from ..runtime import cli_errors, state_of

OUTPUT_OPTION = typer.Option("-", "--output", "-o", help="出力先（- は標準出力）")


def power(
    ctx: typer.Context,
    graph: str = typer.Option(..., "--graph", help="グラフファイル"),
    p: int = typer.Option(..., "--p", min=1, help="冪の指数"),
    output: str = OUTPUT_OPTION,
) -> None:
    """G^p を出力する。"""

    state = state_of(ctx)
    with cli_errors():
        state.emit_text(output, format_graph(graph_power(state.read_graph(graph), p)))


def product(
    ctx: typer.Context,
    graph: str = typer.Option(..., "--graph", help="グラフファイル"),
    k: int = typer.Option(..., "--k", min=1, help="右因子 K_k の大きさ"),
    output: str = OUTPUT_OPTION,
) -> None:
    """G ⊠ K_k を出力する。頂点 (v, j) の番号は v·k + j。"""

    state = state_of(ctx)
    with cli_errors():
        state.emit_text(output, format_graph(strong_product(state.read_graph(graph), k)))


def blowup_command(
    ctx: typer.Context,
    graph: str = typer.Option(..., "--graph", help="グラフファイル"),
    t: int = typer.Option(..., "--t", min=1, help="各頂点を置き換える独立集合の大きさ"),
    output: str = OUTPUT_OPTION,
) -> None:
    """G(t) を出力する。"""

    state = state_of(ctx)
    with cli_errors():
        state.emit_text(output, format_graph(blowup(state.read_graph(graph), t)))


def dary_tree(
    ctx: typer.Context,
    d: int = typer.Option(..., "--d", min=1),
    h: int = typer.Option(..., "--h", min=0),
    output: str = OUTPUT_OPTION,
) -> None:
    """高さ h の完全 d 分木 T_{d,h} を出力する。"""

    state = state_of(ctx)
    with cli_errors():
        state.emit_text(output, format_tree(complete_dary_tree(d, h)))


def truncate(
    ctx: typer.Context,
    tree: str = typer.Option(..., "--tree", help="木ファイル、または dary:d,h"),
    output: str = OUTPUT_OPTION,
) -> None:
    """根と奇数段の頂点からなる切り詰め T' を出力する。"""

    state = state_of(ctx)
    with cli_errors():
        state.emit_text(output, format_tree(truncation(state.resolve_tree(tree))))


def register(app: typer.Typer) -> None:
    app.command("power")(power)
    app.command("product")(product)
    app.command("blowup")(blowup_command)
    app.command("dary-tree")(dary_tree)
    app.command("truncate")(truncate)
