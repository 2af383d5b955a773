"""Batch Evaluator - LLM hakem ile batch'li metin değerlendirme ve tanılama"""

from .engine import BatchEvaluator, RunResult, ScoreTable, ensemble_scores, run_batch_evaluation
from .config import RunConfig, JudgeConfig, AppConfig
from .sample import Sample, Criterion
from .core.enums import Strategy, Procedure, ScoreFormat, JudgeMode, RepartitionBasis
from .core.exceptions import (
    EvaluatorError,
    ConfigError,
    JudgeError,
    ParseError,
    DatasetError,
)
from .judge import ApiJudge, SimulatedJudge, SimJudgeConfig, CostLedger

__version__ = "1.0.0"
__all__ = [
    'BatchEvaluator',
    'RunResult',
    'ScoreTable',
    'ensemble_scores',
    'run_batch_evaluation',
    'RunConfig',
    'JudgeConfig',
    'AppConfig',
    'Sample',
    'Criterion',
    'Strategy',
    'Procedure',
    'ScoreFormat',
    'JudgeMode',
    'RepartitionBasis',
    'EvaluatorError',
    'ConfigError',
    'JudgeError',
    'ParseError',
    'DatasetError',
    'ApiJudge',
    'SimulatedJudge',
    'SimJudgeConfig',
    'CostLedger',
]
