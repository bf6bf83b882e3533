"""
縮退グラフの彩色コマンド。
"""

from __future__ import annotations

from typing import Any

import typer

from application.services import colour_monotone, colour_recursive, find_mono_tree, longest_mono_monotone_path
from domain.errors import ParameterError
from domain.models import Colour, TableColouring
from domain.services import degeneracy_ordering, greedy_proper_colouring
from infrastructure.storage import format_colouring

from ..runtime import cli_errors, state_of


def degeneracy(
    ctx: typer.Context,
    graph: str = typer.Option(..., "--graph", help="グラフファイル"),
    proper_colouring: bool = typer.Option(False, "--proper-colouring", help="順序に沿った貪欲真彩色も出力する"),
    output: str = typer.Option("-", "--output", "-o"),
) -> None:
    """縮退度と、前方隣接数が縮退度以下になる頂点順序を JSON で出力する。"""

    state = state_of(ctx)
    with cli_errors():
        loaded = state.read_graph(graph)
        ordering, value = degeneracy_ordering(loaded)
        payload: dict[str, Any] = {"degeneracy": value, "ordering": list(ordering.sequence)}
        if proper_colouring:
            payload["colouring"] = list(greedy_proper_colouring(loaded, ordering))
        state.emit_json("degeneracy", payload, output)


def _colour_by_method(method: str, graph_path: str, ctx: typer.Context) -> TableColouring:
    state = state_of(ctx)
    loaded = state.read_graph(graph_path)
    if method == "monotone":
        ordering, _ = degeneracy_ordering(loaded)
        return colour_monotone(loaded, ordering)
    if method.startswith("recursive:"):
        try:
            i = int(method.split(":", 1)[1])
        except ValueError as exc:
            raise ParameterError(f"--method {method!r} の i は整数である必要があります。") from exc
        return colour_recursive(loaded, i)
    raise ParameterError(f"--method は recursive:i か monotone です: {method!r}")


def colour(
    ctx: typer.Context,
    graph: str = typer.Option(..., "--graph", help="グラフファイル"),
    method: str = typer.Option(..., "--method", help="recursive:i または monotone"),
    output: str = typer.Option("-", "--output", "-o"),
) -> None:
    """単色の木を避ける辺彩色を出力する。"""

    state = state_of(ctx)
    with cli_errors():
        state.emit_text(output, format_colouring(_colour_by_method(method, graph, ctx)))


def check_colouring(
    ctx: typer.Context,
    graph: str = typer.Option(..., "--graph", help="グラフファイル"),
    colouring: str = typer.Option(..., "--colouring", help="彩色ファイル"),
    tree: str = typer.Option(..., "--tree", help="dary:d,h または木ファイル"),
    monotone_dp: bool = typer.Option(False, "--monotone-dp", help="縮退順序に沿った単色単調路の最長頂点数も出力する"),
    output: str = typer.Option("-", "--output", "-o"),
) -> None:
    """
    彩色に単色の木のコピーがあるかを赤・青の順に完全探索する。
    """

    state = state_of(ctx)
    with cli_errors():
        loaded = state.read_graph(graph)
        edge_colouring = state.read_colouring(colouring, loaded)
        pattern = state.resolve_tree(tree)
        payload: dict[str, Any] = {"found": False, "tree_vertices": pattern.n}
        for candidate in (Colour.RED, Colour.BLUE):
            found = find_mono_tree(
                loaded, edge_colouring, candidate, pattern, node_budget=state.budget.node_budget
            )
            if found is not None:
                payload["found"] = True
                payload["witness"] = {"colour": candidate.label, "embedding": list(found.image)}
                break
        if monotone_dp:
            ordering, _ = degeneracy_ordering(loaded)
            lengths = longest_mono_monotone_path(loaded, ordering, edge_colouring)
            payload["dp_lengths"] = {c.label: length for c, length in lengths.items()}
        state.emit_json("colouring_check", payload, output)


def register(app: typer.Typer) -> None:
    app.command("degeneracy")(degeneracy)
    app.command("colour")(colour)
    app.command("check-colouring")(check_colouring)
