"""
CLI コマンド間で共有する実行時状態と入出力ヘルパ。
"""

from __future__ import annotations

import logging
from contextlib import contextmanager
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Iterator, Mapping

import typer

from bootstrap import BootstrapError
from domain.errors import ParameterError, RamseyForgeError
from domain.models import Colour, EdgeColouring, Graph, RootedTree
from domain.services import complete_dary_tree
from domain.value_objects import RngSeed, SearchBudget
from infrastructure.schemas import JsonSchemaRegistry, OutputValidator, default_schema_root
from infrastructure.storage import (
    LocalTextStore,
    dump_json,
    parse_colouring,
    parse_graph,
    parse_tree,
)

logger = logging.getLogger("ramsey_forge.cli")

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_ERROR = 2


@dataclass
class CliState:
    """
    ルートコールバックで組み立て、``ctx.obj`` 経由で各コマンドに渡す。
    """

    budget: SearchBudget
    store: LocalTextStore = field(default_factory=LocalTextStore)
    validator: OutputValidator = field(
        default_factory=lambda: OutputValidator(JsonSchemaRegistry(default_schema_root()))
    )

    def read_graph(self, path: str) -> Graph:
        return parse_graph(self.store.read_text(path), source=self.store.source_name(path))

    def read_tree(self, path: str) -> RootedTree:
        return parse_tree(self.store.read_text(path), source=self.store.source_name(path))

    def read_colouring(self, path: str, graph: Graph) -> EdgeColouring:
        return parse_colouring(self.store.read_text(path), graph, source=self.store.source_name(path))

    def resolve_tree(self, spec: str) -> RootedTree:
        """``dary:d,h`` なら完全 d 分木、それ以外は木ファイルのパス。"""

        if spec.startswith("dary:"):
            try:
                d_text, h_text = spec[len("dary:") :].split(",")
                return complete_dary_tree(int(d_text), int(h_text))
            except ValueError as exc:
                raise ParameterError(f"木の指定 {spec!r} は dary:d,h の形式である必要があります。") from exc
        return self.read_tree(spec)

    def emit_text(self, output: str | None, text: str) -> None:
        self.store.write_text(output, text)

    def emit_json(self, schema: str, payload: Mapping[str, Any], output: str | None = None) -> None:
        self.validator.validate(schema, payload)
        self.store.write_text(output, dump_json(payload))


def state_of(ctx: typer.Context) -> CliState:
    state = ctx.find_root().obj
    if not isinstance(state, CliState):
        raise typer.Exit(code=EXIT_ERROR)
    return state


def to_seed(value: int) -> RngSeed:
    try:
        return RngSeed(value)
    except ValueError as exc:
        raise ParameterError(str(exc)) from exc


@contextmanager
def cli_errors() -> Iterator[None]:
    """ドメイン・設定エラーを標準エラーへのメッセージと終了コード 2 に変換する。"""

    try:
        yield
    except (RamseyForgeError, BootstrapError, OSError) as exc:
        logger.debug("command failed", exc_info=True)
        typer.echo(f"error: {exc}", err=True)
        raise typer.Exit(code=EXIT_ERROR) from exc


def project_root() -> Path:
    return Path(__file__).resolve().parents[3]


def to_colour(text: str) -> Colour:
    """``red`` / ``blue`` または ``R`` / ``B``。"""

    normalized = text.strip().lower()
    for colour in Colour:
        if normalized in (colour.label, colour.value.lower()):
            return colour
    raise ParameterError(f"色は red か blue です: {text!r}")
