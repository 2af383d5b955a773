"""Engine modülü - Tur döngüsü, skor tablosu ve çıktı dosyaları"""

from .engine import BatchEvaluator, RunResult, run_batch_evaluation
from .manifest import FILES, LoadedRun, RunArtifacts, RunManifest
from .score_table import ScoreTable, ensemble_scores

__all__ = [
    'BatchEvaluator',
    'RunResult',
    'run_batch_evaluation',
    'FILES',
    'LoadedRun',
    'RunArtifacts',
    'RunManifest',
    'ScoreTable',
    'ensemble_scores',
]
