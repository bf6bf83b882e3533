#!/usr/bin/env python3
"""
リリース前の自動チェックをまとめて実行するスクリプト。

実行内容:
    1. ruff lint
    2. mypy type check
    3. pytest (unit + integration)
    4. CLI スモーク（constants を dev 環境で実行）

使い方:
    $ python scripts/checks/run_release_gate.py [--skip-smoke]
"""

from __future__ import annotations

import argparse
import os
import subprocess
import sys
from pathlib import Path

PROJECT_ROOT = Path(__file__).resolve().parents[2]

COMMANDS = [
    [sys.executable, "-m", "ruff", "check", "src", "tests"],
    [sys.executable, "-m", "mypy", "src"],
    [sys.executable, "-m", "pytest"],
]

SMOKE = [sys.executable, "-m", "interfaces.cli", "--env", "dev", "constants", "--k", "1", "--d", "2"]


def run_command(command: list[str]) -> int:
    print(f"\n[INFO] Running command: {' '.join(command)}")
    env = {**os.environ, "PYTHONPATH": str(PROJECT_ROOT / "src")}
    process = subprocess.run(command, cwd=PROJECT_ROOT, env=env)
    if process.returncode != 0:
        print(f"[ERROR] Command failed: {' '.join(command)}", file=sys.stderr)
    return process.returncode


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description="ramsey-forge release gate")
    parser.add_argument("--skip-smoke", action="store_true")
    args = parser.parse_args(argv)

    commands = list(COMMANDS)
    if not args.skip_smoke:
        commands.append(SMOKE)

    failures = [command for command in commands if run_command(command) != 0]
    if failures:
        print("\n[SUMMARY] Release gate failed.", file=sys.stderr)
        for failed_command in failures:
            print(f"  - {' '.join(failed_command)}", file=sys.stderr)
        return 1

    print("\n[SUMMARY] Release gate passed successfully.")
    return 0


if __name__ == "__main__":
    sys.exit(main())
