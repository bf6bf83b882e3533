"""
積グラフの Ramsey 埋め込みパイプラインと定数計算のコマンド。
"""

from __future__ import annotations

from pathlib import Path

import typer

from application.services import build_host, proof_constants, ramsey_number_lookup
from application.usecases import PipelineRequest, RamseyPipeline
from domain.errors import ParameterError
from domain.models import (
    BlockColouring,
    Colour,
    ConstantColouring,
    EdgeColouring,
    PartitionedHost,
    SeededRandomColouring,
    StepFailure,
)

from ..runtime import EXIT_VERIFY_FAILED, CliState, cli_errors, state_of, to_seed

_FIXED_COLOURINGS = {"all-red": Colour.RED, "all-blue": Colour.BLUE}
_BLOCK_COLOURINGS = {"inner-blue": Colour.BLUE, "inner-red": Colour.RED}


def resolve_colouring(state: CliState, spec: str, host: PartitionedHost) -> EdgeColouring:
    """
    ``all-red`` / ``all-blue`` / ``random:SEED`` / ``inner-blue`` / ``inner-red`` / 彩色ファイル。
    ``inner-*`` は各 A(v) の内部をその色、A(v) 間を反対色で塗る。
    """

    graph = host.graph
    if spec in _FIXED_COLOURINGS:
        return ConstantColouring(graph, _FIXED_COLOURINGS[spec])
    if spec in _BLOCK_COLOURINGS:
        return BlockColouring(graph, host.clique_size or 1, _BLOCK_COLOURINGS[spec])
    if spec.startswith("random:"):
        try:
            value = int(spec.split(":", 1)[1])
        except ValueError as exc:
            raise ParameterError(f"彩色の指定 {spec!r} は random:SEED の形式である必要があります。") from exc
        return SeededRandomColouring(graph, to_seed(value).value)
    if not Path(spec).exists() and spec != "-":
        raise ParameterError(
            f"彩色の指定 {spec!r} はファイルでも all-red/all-blue/random:SEED/inner-blue/inner-red でもありません。"
        )
    return state.read_colouring(spec, graph)


def pipeline(
    ctx: typer.Context,
    host_n: int = typer.Option(..., "--host-n", min=2, help="基底エクスパンダー H の頂点数"),
    host_d: int = typer.Option(..., "--host-d", min=3, help="H の正則次数 D"),
    k: int = typer.Option(..., "--k", min=1),
    t: int = typer.Option(..., "--t", min=1, help="各 A(v) で探す単色クリークの大きさ"),
    clique_size: int | None = typer.Option(None, "--R", min=1, help="A(v) の大きさ（既定は r(t)）"),
    tree1: str = typer.Option(..., "--tree1", help="赤側の木（ファイルまたは dary:d,h）"),
    tree2: str = typer.Option(..., "--tree2", help="青側の木（ファイルまたは dary:d,h）"),
    colouring: str = typer.Option(..., "--colouring", help="FILE | all-red | all-blue | random:SEED | inner-blue | inner-red"),
    seed: int = typer.Option(..., "--seed", min=0),
    d: int | None = typer.Option(None, "--d", min=1, help="木の次数の上限（既定は 2 本の木の最大次数）"),
    output: str = typer.Option("-", "--output", "-o"),
) -> None:
    """
    ホスト H³ ⊠ K_R を構成し、彩色から単色の T ⊠ K_k を探す。
    Witness なら終了コード 0、StepFailure なら 1。
    """

    state = state_of(ctx)
    budget = state.budget
    failed = False
    with cli_errors():
        rng_seed = to_seed(seed)
        first = state.resolve_tree(tree1)
        second = state.resolve_tree(tree2)
        size = clique_size if clique_size is not None else ramsey_number_lookup(t)
        host = build_host(
            host_n,
            host_d,
            k,
            t,
            size,
            rng_seed.derive(0),
            regeneration_cap=budget.regeneration_cap,
            attempt_cap=budget.regular_attempt_cap,
            dense_limit=budget.dense_eigen_limit,
        )
        request = PipelineRequest(
            host=host,
            colouring=resolve_colouring(state, colouring, host),
            tree1=first,
            tree2=second,
            k=k,
            d=d if d is not None else max(1, first.max_degree, second.max_degree),
            t=t,
            seed=rng_seed,
            budget=budget,
        )
        outcome = RamseyPipeline().execute(request)
        payload = {
            **outcome.to_dict(),
            "seed": seed,
            "host": {
                "N": host_n,
                "D": host_d,
                "R": size,
                "vertices": host.graph.n,
                "edges": host.graph.edge_count,
            },
        }
        state.emit_json("pipeline_outcome", payload, output)
        failed = isinstance(outcome, StepFailure)
    if failed:
        raise typer.Exit(code=EXIT_VERIFY_FAILED)


def constants(
    ctx: typer.Context,
    k: int = typer.Option(..., "--k", min=1),
    d: int = typer.Option(..., "--d", min=1),
    n: int | None = typer.Option(None, "--n", min=1, help="木の頂点数（N の下限も出力する）"),
    output: str = typer.Option("-", "--output", "-o"),
) -> None:
    """証明側の定数 ε, D, s, t と N の下限を厳密な整数・有理数で出力する。"""

    state = state_of(ctx)
    with cli_errors():
        state.emit_json("constants", proof_constants(k, d, n).to_dict(), output)


def register(app: typer.Typer) -> None:
    app.command("pipeline")(pipeline)
    app.command("constants")(constants)
