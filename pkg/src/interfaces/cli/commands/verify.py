"""
証明書の検証コマンド群。Report を JSON で出力し、ok なら 0、違反があれば 1 で終了する。
"""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, Sequence, TypeVar

import typer

from application.services import find_mono_tree, validate_dichotomy, validate_embedding
from domain.models import Colour, EdgeColouring, Embedding, Graph, Report, RootedTree, Violation
from domain.services import strong_product
from infrastructure.storage import parse_dichotomy, parse_embedding

from ..runtime import EXIT_VERIFY_FAILED, CliState, cli_errors, state_of, to_colour

app = typer.Typer(help="証明書の検証コマンド")

_T = TypeVar("_T")
_R = TypeVar("_R")


def _run_jobs(worker: Callable[[_T], _R], items: Sequence[_T], jobs: int) -> list[_R]:
    if jobs <= 1 or len(items) <= 1:
        return [worker(item) for item in items]
    with ProcessPoolExecutor(max_workers=min(jobs, len(items))) as executor:
        return list(executor.map(worker, items))


def _merge(reports: Iterable[tuple[str, Report]]) -> Report:
    violations: list[Violation] = []
    stats: Counter[str] = Counter()
    count = 0
    for label, report in reports:
        count += 1
        stats.update(report.stats)
        violations.extend(
            Violation(v.kind, v.vertices, f"{label}: {v.detail}" if v.detail else label)
            for v in report.violations
        )
    return Report(violations=tuple(violations), stats={**stats, "certificates": count})


def _finish(state: CliState, report: Report, output: str) -> None:
    with cli_errors():
        state.emit_json("report", report.to_dict(), output)
    if not report.ok:
        raise typer.Exit(code=EXIT_VERIFY_FAILED)


def _embedding_job(
    args: tuple[str, Graph, Graph, Embedding, EdgeColouring | None, Colour],
) -> tuple[str, Report]:
    label, pattern, host, embedding, colouring, colour = args
    colour_filter = (colouring, colour) if colouring is not None else None
    return label, validate_embedding(pattern, host, embedding, colour_filter)


@app.command("embedding")
def verify_embedding(
    ctx: typer.Context,
    host: str = typer.Option(..., "--host", help="ホストグラフファイル"),
    embedding: list[str] = typer.Option(..., "--embedding", help="埋め込みファイル（複数指定可）"),
    pattern: str | None = typer.Option(None, "--pattern", help="パターングラフファイル"),
    tree: str | None = typer.Option(None, "--tree", help="パターンを T ⊠ K_k とする木（ファイルまたは dary:d,h）"),
    k: int = typer.Option(1, "--k", min=1, help="--tree と併用する K_k の大きさ"),
    colouring: str | None = typer.Option(None, "--colouring", help="色も検査する場合の彩色ファイル"),
    colour: str = typer.Option("blue", "--colour"),
    jobs: int = typer.Option(1, "--jobs", min=1, help="並列に検査するプロセス数"),
    output: str = typer.Option("-", "--output", "-o"),
) -> None:
    """埋め込みの単射性・辺の保存・（指定時は）色を検査する。"""

    state = state_of(ctx)
    with cli_errors():
        host_graph = state.read_graph(host)
        if (pattern is None) == (tree is None):
            raise typer.BadParameter("--pattern と --tree のどちらか一方を指定してください。")
        if pattern is not None:
            pattern_graph = state.read_graph(pattern)
        else:
            assert tree is not None
            pattern_graph = strong_product(state.resolve_tree(tree).to_graph(), k)
        edge_colouring = state.read_colouring(colouring, host_graph) if colouring else None
        expected = to_colour(colour)
        items = [
            (
                state.store.source_name(path),
                pattern_graph,
                host_graph,
                parse_embedding(state.store.read_text(path), source=state.store.source_name(path)),
                edge_colouring,
                expected,
            )
            for path in embedding
        ]
        report = _merge(_run_jobs(_embedding_job, items, jobs))
    _finish(state, report, output)


@app.command("dichotomy")
def verify_dichotomy(
    ctx: typer.Context,
    graph: str = typer.Option(..., "--graph"),
    colouring: str = typer.Option(..., "--colouring"),
    outcome: str = typer.Option(..., "--outcome", help="dichotomy コマンドの JSON 出力"),
    n: int = typer.Option(..., "--n", min=1),
    d: int = typer.Option(..., "--d", min=1),
    q: int = typer.Option(..., "--q", min=1),
    colour: str = typer.Option("blue", "--colour"),
    output: str = typer.Option("-", "--output", "-o"),
) -> None:
    """多部グラフ側は部の条件と部間の色を、拡張側は素朴な部分集合列挙で再検査する。"""

    state = state_of(ctx)
    with cli_errors():
        loaded = state.read_graph(graph)
        certificate = parse_dichotomy(state.store.read_text(outcome), source=state.store.source_name(outcome))
        report = validate_dichotomy(
            state.read_colouring(colouring, loaded),
            n,
            d,
            q,
            certificate,
            colour=to_colour(colour),
            subset_budget=state.budget.subset_budget,
        )
    _finish(state, report, output)


def _mono_tree_job(args: tuple[Graph, EdgeColouring, Colour, RootedTree, int]) -> tuple[Colour, Embedding | None]:
    graph, colouring, colour, tree, node_budget = args
    return colour, find_mono_tree(graph, colouring, colour, tree, node_budget=node_budget)


@app.command("mono-tree")
def verify_mono_tree(
    ctx: typer.Context,
    graph: str = typer.Option(..., "--graph"),
    colouring: str = typer.Option(..., "--colouring"),
    tree: str = typer.Option(..., "--tree", help="dary:d,h または木ファイル"),
    colour: str | None = typer.Option(None, "--colour", help="片方の色だけ調べる場合に指定"),
    jobs: int = typer.Option(1, "--jobs", min=1),
    output: str = typer.Option("-", "--output", "-o"),
) -> None:
    """彩色に単色の木のコピーが無いことを完全探索で確認する。"""

    state = state_of(ctx)
    with cli_errors():
        loaded = state.read_graph(graph)
        edge_colouring = state.read_colouring(colouring, loaded)
        pattern = state.resolve_tree(tree)
        colours = [to_colour(colour)] if colour else [Colour.RED, Colour.BLUE]
        results = _run_jobs(
            _mono_tree_job,
            [(loaded, edge_colouring, c, pattern, state.budget.node_budget) for c in colours],
            jobs,
        )
        violations = tuple(
            Violation("mono-tree", found.image, f"{c.label} の単色コピー")
            for c, found in results
            if found is not None
        )
        report = Report(
            violations=violations,
            stats={"tree_vertices": pattern.n, "colours_searched": len(colours)},
        )
    _finish(state, report, output)


def register(root: typer.Typer) -> None:
    root.add_typer(app, name="verify")
