"""
インターフェース層のパッケージ初期化。
"""

from .cli import create_cli

__all__ = ["create_cli"]
