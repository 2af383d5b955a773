"""Diagnostics modülü - diag raporu, simülasyon taraması ve grafikler"""

from .analysis import (
    BatchBiasPoint,
    DecompositionPoint,
    all_scores,
    batch_biases,
    decomposition_curve,
    entropy_of,
    mean_bias,
    round_correlations,
    safe_correlation,
)
from .report import DiagReport, analyze, build_report, write_report
from .sweep import SWEEP_COLUMNS, CellResult, SweepSpec, run_cell, run_sweep, write_sweep_csv
from .plot import plot_diag

__all__ = [
    'BatchBiasPoint',
    'DecompositionPoint',
    'all_scores',
    'batch_biases',
    'decomposition_curve',
    'entropy_of',
    'mean_bias',
    'round_correlations',
    'safe_correlation',
    'DiagReport',
    'analyze',
    'build_report',
    'write_report',
    'SWEEP_COLUMNS',
    'CellResult',
    'SweepSpec',
    'run_cell',
    'run_sweep',
    'write_sweep_csv',
    'plot_diag',
]
