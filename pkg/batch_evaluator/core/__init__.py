"""Core modülü - enum'lar ve exception'lar"""

from .enums import (
    Strategy,
    Procedure,
    ScoreFormat,
    JudgeMode,
    ParseStatus,
    RepartitionBasis,
    JobStatus,
)
from . import exceptions

__all__ = [
    "Strategy",
    "Procedure",
    "ScoreFormat",
    "JudgeMode",
    "ParseStatus",
    "RepartitionBasis",
    "JobStatus",
    "exceptions",
]
