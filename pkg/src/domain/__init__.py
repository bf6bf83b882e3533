"""
ドメイン層のパッケージ初期化。
"""

from .errors import (
    BudgetExceededError,
    ContractViolationError,
    GenerationError,
    InputError,
    LiftFailure,
    NotFoundError,
    ParameterError,
    ParseError,
    PreconditionError,
    RamseyForgeError,
    SizeError,
)
from .models import Colour, EdgeColouring, Embedding, Graph, Ordering, RootedTree
from .value_objects import RngSeed, SearchBudget, SpectralProfile

__all__ = [
    "BudgetExceededError",
    "Colour",
    "ContractViolationError",
    "EdgeColouring",
    "Embedding",
    "GenerationError",
    "Graph",
    "InputError",
    "LiftFailure",
    "NotFoundError",
    "Ordering",
    "ParameterError",
    "ParseError",
    "PreconditionError",
    "RamseyForgeError",
    "RngSeed",
    "RootedTree",
    "SearchBudget",
    "SizeError",
    "SpectralProfile",
]
