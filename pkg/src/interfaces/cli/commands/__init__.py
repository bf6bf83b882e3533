"""
CLI サブコマンドの公開API。
"""

from . import constructions, degenerate, embedding, expander, pipeline, verify

__all__ = ["constructions", "degenerate", "embedding", "expander", "pipeline", "verify"]
