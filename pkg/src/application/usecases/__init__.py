"""
ユースケース層の公開API。
"""

from .ramsey_pipeline import (
    STAGES,
    PipelineOutcome,
    PipelineRequest,
    RamseyPipeline,
    RamseyPipelineUseCase,
    best_rooting,
)

__all__ = [
    "PipelineOutcome",
    "PipelineRequest",
    "RamseyPipeline",
    "RamseyPipelineUseCase",
    "STAGES",
    "best_rooting",
]
