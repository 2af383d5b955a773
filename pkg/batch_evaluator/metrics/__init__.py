"""Metrics modülü - Korelasyon, batch bias, ayrışım, entropi, gürültü sınırı, attention"""

from .attention import check_causal, normalize_attention, scale_attention, span_labels
from .correlation import (
    CorrelationReport,
    align,
    correlate_maps,
    correlation_report,
    pearson,
    spearman,
)
from .ensemble import (
    DECIMAL_BIN_WIDTH,
    INTEGER_BIN_WIDTH,
    Decomposition,
    batch_bias,
    decompose,
    default_bin_width,
    mean_decomposition,
    score_entropy,
    score_histogram,
)
from .robustness import RobustnessReport, simulate_rank_robustness, spearman_noise_bound

__all__ = [
    'check_causal',
    'normalize_attention',
    'scale_attention',
    'span_labels',
    'CorrelationReport',
    'align',
    'correlate_maps',
    'correlation_report',
    'pearson',
    'spearman',
    'DECIMAL_BIN_WIDTH',
    'INTEGER_BIN_WIDTH',
    'Decomposition',
    'batch_bias',
    'decompose',
    'default_bin_width',
    'mean_decomposition',
    'score_entropy',
    'score_histogram',
    'RobustnessReport',
    'simulate_rank_robustness',
    'spearman_noise_bound',
]
