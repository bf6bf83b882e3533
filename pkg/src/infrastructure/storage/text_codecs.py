"""
グラフ・根付き木・辺彩色・埋め込みのテキスト形式と、決定的な JSON 出力。

* グラフ: 1 行目 ``n m``、続く m 行に ``u v``（0 ≤ u < v < n、重複なし）。
* 根付き木: 1 行目 ``n root``、2 行目に n 個の親（根の親は根自身）。
* 彩色: 1 行目 ``n m``、続く m 行に ``u v C``（C は R か B、(u, v) の昇順）。
* 埋め込み: パターン頂点ごとに ``x h`` を 1 行、パターン頂点の順。
"""

from __future__ import annotations

import json
from typing import Any, Iterator, Mapping

from domain.errors import InputError, ParseError
from domain.models import (
    BlueExpansion,
    Colour,
    Dichotomy,
    EdgeColouring,
    Embedding,
    Graph,
    RedMultipartite,
    RootedTree,
    TableColouring,
)


def _lines(text: str) -> list[str]:
    lines = text.split("\n")
    while lines and not lines[-1].strip():
        lines.pop()
    return lines


def _integers(line: str, count: int, *, line_no: int, source: str | None) -> list[int]:
    fields = line.split()
    if len(fields) != count:
        raise ParseError(f"{count} 個の整数が必要ですが {len(fields)} 個です", line=line_no, source=source)
    try:
        values = [int(field, 10) for field in fields]
    except ValueError as exc:
        raise ParseError(f"整数として解釈できません: {line!r}", line=line_no, source=source) from exc
    if any(value < 0 for value in values):
        raise ParseError("負の値は使えません", line=line_no, source=source)
    return values


def _edge_lines(
    lines: list[str], *, fields: int, source: str | None
) -> tuple[int, Iterator[tuple[int, list[str]]]]:
    if not lines:
        raise ParseError("ヘッダ行がありません", line=1, source=source)
    n, m = _integers(lines[0], 2, line_no=1, source=source)
    if len(lines) - 1 != m:
        raise ParseError(f"{m} 行の辺が必要ですが {len(lines) - 1} 行です", line=len(lines), source=source)

    def rows() -> Iterator[tuple[int, list[str]]]:
        for offset, line in enumerate(lines[1:], start=2):
            parts = line.split()
            if len(parts) != fields:
                raise ParseError(f"{fields} 列が必要です: {line!r}", line=offset, source=source)
            yield offset, parts

    return n, rows()


def _edge(parts: list[str], n: int, seen: set[tuple[int, int]], *, line_no: int, source: str | None) -> tuple[int, int]:
    u, v = _integers(" ".join(parts[:2]), 2, line_no=line_no, source=source)
    if not u < v < n:
        raise ParseError(f"0 ≤ u < v < {n} を満たしません: {u} {v}", line=line_no, source=source)
    if (u, v) in seen:
        raise ParseError(f"辺 ({u}, {v}) が重複しています", line=line_no, source=source)
    seen.add((u, v))
    return u, v


def parse_graph(text: str, *, source: str | None = None) -> Graph:
    n, rows = _edge_lines(_lines(text), fields=2, source=source)
    seen: set[tuple[int, int]] = set()
    edges = [_edge(parts, n, seen, line_no=line_no, source=source) for line_no, parts in rows]
    return Graph.from_edges(n, edges)


def format_graph(graph: Graph) -> str:
    rows = [f"{graph.n} {graph.edge_count}"]
    rows.extend(f"{u} {v}" for u, v in graph.edges())
    return "\n".join(rows) + "\n"


def parse_tree(text: str, *, source: str | None = None) -> RootedTree:
    lines = _lines(text)
    if len(lines) < 1:
        raise ParseError("ヘッダ行がありません", line=1, source=source)
    n, root = _integers(lines[0], 2, line_no=1, source=source)
    if len(lines) != 2:
        raise ParseError("親の一覧を 2 行目に 1 行で与えてください", line=min(len(lines), 3), source=source)
    parent = _integers(lines[1], n, line_no=2, source=source)
    try:
        return RootedTree(root=root, parent=tuple(parent))
    except InputError as exc:
        raise ParseError(str(exc), line=2, source=source) from exc


def format_tree(tree: RootedTree) -> str:
    return f"{tree.n} {tree.root}\n" + " ".join(str(p) for p in tree.parent) + "\n"


def parse_colouring(text: str, graph: Graph, *, source: str | None = None) -> TableColouring:
    """
    Raises:
        ParseError: 書式の誤り、色記号の誤り、グラフに存在しない辺を含む場合。
    """

    n, rows = _edge_lines(_lines(text), fields=3, source=source)
    if n != graph.n:
        raise ParseError(f"頂点数 {n} がグラフの頂点数 {graph.n} と一致しません", line=1, source=source)
    table: dict[tuple[int, int], Colour] = {}
    seen: set[tuple[int, int]] = set()
    for line_no, parts in rows:
        u, v = _edge(parts, n, seen, line_no=line_no, source=source)
        if not graph.has_edge(u, v):
            raise ParseError(f"({u}, {v}) はグラフの辺ではありません", line=line_no, source=source)
        try:
            table[(u, v)] = Colour(parts[2])
        except ValueError as exc:
            raise ParseError(f"色は R か B です: {parts[2]!r}", line=line_no, source=source) from exc
    try:
        return TableColouring(graph, table)
    except InputError as exc:
        raise ParseError(str(exc), line=1, source=source) from exc


def format_colouring(colouring: EdgeColouring) -> str:
    graph = colouring.graph
    rows = [f"{graph.n} {graph.edge_count}"]
    rows.extend(f"{u} {v} {colour.value}" for (u, v), colour in colouring.items())
    return "\n".join(rows) + "\n"


def parse_embedding(text: str, *, source: str | None = None) -> Embedding:
    image: list[int] = []
    for line_no, line in enumerate(_lines(text), start=1):
        x, h = _integers(line, 2, line_no=line_no, source=source)
        if x != len(image):
            raise ParseError(f"パターン頂点 {len(image)} の行が必要です", line=line_no, source=source)
        image.append(h)
    return Embedding(tuple(image))


def format_embedding(embedding: Embedding) -> str:
    return "".join(f"{x} {h}\n" for x, h in enumerate(embedding.image))


def parse_dichotomy(text: str, *, source: str | None = None) -> Dichotomy:
    """``dichotomy`` コマンドの JSON 出力を読み戻す。"""

    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"JSON として解釈できません: {exc.msg}", line=exc.lineno, source=source) from exc
    if not isinstance(payload, dict):
        raise ParseError("トップレベルはオブジェクトである必要があります", line=1, source=source)
    kind = payload.get("kind")
    try:
        if kind == "blue-expansion":
            return BlueExpansion(
                vertices=tuple(int(v) for v in payload["vertices"]),
                exact=bool(payload.get("exact", True)),
            )
        if kind == "red-multipartite":
            return RedMultipartite(
                parts=tuple(tuple(int(v) for v in part) for part in payload["parts"]),
                peeled=tuple(tuple(int(v) for v in x) for x in payload.get("peeled", ())),
            )
    except (KeyError, TypeError, ValueError, InputError) as exc:
        raise ParseError(f"{kind} の内容が不正です: {exc}", line=1, source=source) from exc
    raise ParseError(f"未知の kind です: {kind!r}", line=1, source=source)


def dump_json(payload: Mapping[str, Any]) -> str:
    """sort_keys・2 空白インデント・末尾改行付きの決定的な JSON 文字列。"""

    return json.dumps(payload, ensure_ascii=False, sort_keys=True, indent=2) + "\n"


__all__ = [
    "dump_json",
    "format_colouring",
    "format_embedding",
    "format_graph",
    "format_tree",
    "parse_colouring",
    "parse_dichotomy",
    "parse_embedding",
    "parse_graph",
    "parse_tree",
]
