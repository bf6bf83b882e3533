"""
木の埋め込みと、木か多部グラフかの二分法のコマンド。
"""

from __future__ import annotations

import typer

from application.services import embed_tree, tree_or_multipartite
from infrastructure.storage import format_embedding

from ..runtime import cli_errors, state_of, to_colour


def embed(
    ctx: typer.Context,
    host: str = typer.Option(..., "--host", help="ホストグラフファイル"),
    tree: str = typer.Option(..., "--tree", help="木ファイル、または dary:d,h"),
    d: int | None = typer.Option(None, "--d", min=1, help="次数の上限（既定は Δ(T)）"),
    output: str = typer.Option("-", "--output", "-o"),
) -> None:
    """木をホストに埋め込み、``pattern_vertex host_vertex`` の行で出力する。"""

    state = state_of(ctx)
    with cli_errors():
        pattern = state.resolve_tree(tree)
        found = embed_tree(
            state.read_graph(host),
            pattern,
            d if d is not None else max(1, pattern.max_degree),
            node_budget=state.budget.node_budget,
        )
        state.emit_text(output, format_embedding(found))


def dichotomy(
    ctx: typer.Context,
    graph: str = typer.Option(..., "--graph", help="完全グラフ K_N のファイル"),
    colouring: str = typer.Option(..., "--colouring", help="彩色ファイル"),
    n: int = typer.Option(..., "--n", min=1),
    d: int = typer.Option(..., "--d", min=1),
    q: int = typer.Option(..., "--q", min=1),
    colour: str = typer.Option("blue", "--colour", help="拡張性を調べる色（反対色が多部側）"),
    output: str = typer.Option("-", "--output", "-o"),
) -> None:
    """拡張性の証明書か、反対色の完全 q 部グラフを JSON で出力する。"""

    state = state_of(ctx)
    with cli_errors():
        loaded = state.read_graph(graph)
        outcome = tree_or_multipartite(
            state.read_colouring(colouring, loaded),
            n,
            d,
            q,
            colour=to_colour(colour),
            subset_budget=state.budget.subset_budget,
        )
        state.emit_json("dichotomy", outcome.to_dict(), output)


def register(app: typer.Typer) -> None:
    app.command("embed")(embed)
    app.command("dichotomy")(dichotomy)
