"""Parsing modülü - hakem yanıtlarından skor çıkarma"""

from .parser import ParsedScores, parse_batch_scores, DEFAULT_CLAMP_TOLERANCE
from .formatter import format_scores, format_score_list, format_value

__all__ = [
    "ParsedScores",
    "parse_batch_scores",
    "DEFAULT_CLAMP_TOLERANCE",
    "format_scores",
    "format_score_list",
    "format_value",
]
