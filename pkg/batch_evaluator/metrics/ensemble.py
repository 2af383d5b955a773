"""
Ensemble Metrikleri

- batch_bias: Bir batch'in tur skor toplamı ile ensemble toplamı arasındaki
  farkın örnek başına mutlak değeri
- decompose: Err(s̄, y) = Err(S, y) - Var(S) ayrışımı
- score_entropy: Skor histogramının entropisi (bit)
"""

import math
from dataclasses import dataclass
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

import numpy as np

from ..core.enums import ScoreFormat
from ..core.exceptions import EmptyMetricInput, InvalidBinWidth, KeyMismatch

IDENTITY_TOLERANCE = 1e-9

DECIMAL_BIN_WIDTH = 0.1
INTEGER_BIN_WIDTH = 1.0


def batch_bias(batch_scores: Mapping[str, float], ensemble: Mapping[str, float]) -> float:
    """
    |Σ s_i - Σ s̄_i| / |B|

    Raises:
        KeyMismatch: Anahtar kümeleri farklıysa veya boşsa
    """
    if not batch_scores:
        raise KeyMismatch("Batch boş")
    if set(batch_scores) != set(ensemble):
        raise KeyMismatch("Batch ve ensemble anahtarları farklı")
    keys = sorted(batch_scores)
    diff = math.fsum(batch_scores[k] for k in keys) - math.fsum(ensemble[k] for k in keys)
    return abs(diff) / len(keys)


@dataclass
class Decomposition:
    """
    - err_ensemble: (s̄ - y)^2
    - err_mean: mean((s - y)^2)
    - variance: mean((s - s̄)^2)
    """
    err_ensemble: float
    err_mean: float
    variance: float

    def to_dict(self) -> Dict[str, float]:
        return {
            "err_ensemble": self.err_ensemble,
            "err_mean": self.err_mean,
            "variance": self.variance,
        }


def decompose(scores: Sequence[float], y: float) -> Decomposition:
    """
    Tek örneğin tur skorları için ayrışım

    Raises:
        EmptyMetricInput: scores boşsa
    """
    if len(scores) == 0:
        raise EmptyMetricInput("decompose için en az bir skor gerekli")
    s = np.asarray(scores, dtype=float)
    mean = float(s.mean())
    err_ensemble = (mean - y) ** 2
    err_mean = float(np.mean((s - y) ** 2))
    variance = float(np.mean((s - mean) ** 2))
    scale = max(1.0, abs(err_mean))
    assert abs(err_ensemble - (err_mean - variance)) <= IDENTITY_TOLERANCE * scale
    return Decomposition(err_ensemble, err_mean, variance)


def mean_decomposition(items: Sequence[Decomposition]) -> Decomposition:
    """Örnekler üzerinden ortalama ayrışım (ayrışım doğrusal olduğu için özdeşlik korunur)"""
    if not items:
        raise EmptyMetricInput("Ortalama için ayrışım yok")
    n = len(items)
    return Decomposition(
        math.fsum(d.err_ensemble for d in items) / n,
        math.fsum(d.err_mean for d in items) / n,
        math.fsum(d.variance for d in items) / n,
    )


def default_bin_width(fmt: ScoreFormat) -> float:
    return INTEGER_BIN_WIDTH if fmt == ScoreFormat.INTEGER else DECIMAL_BIN_WIDTH


def _bin_indices(scores: Sequence[float], bin_width: float, score_min: Optional[float]) -> np.ndarray:
    if not bin_width > 0 or not math.isfinite(bin_width):
        raise InvalidBinWidth(bin_width)
    if len(scores) == 0:
        raise EmptyMetricInput("Entropi için skor yok")
    s = np.asarray(scores, dtype=float)
    lo = float(s.min()) if score_min is None else float(score_min)
    # Bin'ler lo + k * width merkezlidir
    return np.floor((s - lo) / bin_width + 0.5 + 1e-9).astype(int)


def score_histogram(scores: Sequence[float], bin_width: float,
                    score_min: Optional[float] = None) -> List[Tuple[float, int]]:
    """
    (bin merkezi, adet) listesi, boş bin'ler hariç

    Raises:
        InvalidBinWidth: bin_width <= 0
        EmptyMetricInput: scores boşsa
    """
    idx = _bin_indices(scores, bin_width, score_min)
    lo = float(np.min(scores)) if score_min is None else float(score_min)
    values, counts = np.unique(idx, return_counts=True)
    return [(round(lo + int(k) * bin_width, 10), int(c)) for k, c in zip(values, counts)]


def score_entropy(scores: Sequence[float], bin_width: float,
                  score_min: Optional[float] = None) -> float:
    """
    -Σ p log2 p (boş olmayan bin'ler üzerinden)

    Raises:
        InvalidBinWidth: bin_width <= 0
        EmptyMetricInput: scores boşsa
    """
    idx = _bin_indices(scores, bin_width, score_min)
    _, counts = np.unique(idx, return_counts=True)
    p = counts / counts.sum()
    return float(-np.sum(p * np.log2(p)) + 0.0)
