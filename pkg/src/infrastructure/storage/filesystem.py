"""
ローカルファイルシステム上のテキスト成果物の読み書き。
"""

from __future__ import annotations

import sys
from pathlib import Path
from typing import TextIO

from domain.errors import InputError

STDIO = "-"


class LocalTextStore:
    """
    CLI が扱うテキスト成果物の入出力。パス ``-`` は標準入出力を表す。
    """

    def __init__(self, stdin: TextIO | None = None, stdout: TextIO | None = None) -> None:
        self._stdin = stdin
        self._stdout = stdout

    def read_text(self, path: Path | str) -> str:
        if str(path) == STDIO:
            return (self._stdin or sys.stdin).read()
        resolved = Path(path)
        if not resolved.is_file():
            raise InputError(f"ファイルが存在しません: {resolved}")
        return resolved.read_text(encoding="utf-8")

    def write_text(self, path: Path | str | None, text: str) -> None:
        if path is None or str(path) == STDIO:
            stream = self._stdout or sys.stdout
            stream.write(text)
            stream.flush()
            return
        resolved = Path(path)
        resolved.parent.mkdir(parents=True, exist_ok=True)
        resolved.write_text(text, encoding="utf-8")

    def source_name(self, path: Path | str) -> str:
        return "<stdin>" if str(path) == STDIO else str(path)
