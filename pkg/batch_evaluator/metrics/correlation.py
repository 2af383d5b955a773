"""
Korelasyon Metrikleri

Tahmin skorları ile insan skorları arasındaki Pearson ve Spearman
korelasyonları. Spearman bağlı değerlerde ortalama rank kullanır.
p-değerleri n - 2 serbestlik dereceli t yaklaşımıdır; n < 3 ise NaN.

Kullanım:
    r, p = pearson(pred, human)
    report = correlation_report(pred, human)
"""

import math
from dataclasses import dataclass
from typing import Dict, List, Mapping, Sequence, Tuple

import numpy as np
from scipy import stats

from ..core.exceptions import DegenerateInput, KeyMismatch, LengthMismatch


def _prepare(x: Sequence[float], y: Sequence[float]) -> Tuple[np.ndarray, np.ndarray]:
    if len(x) != len(y):
        raise LengthMismatch(len(x), len(y))
    if len(x) < 2:
        raise DegenerateInput(f"Korelasyon için en az 2 çift gerekli: {len(x)}")
    xa = np.asarray(x, dtype=float)
    ya = np.asarray(y, dtype=float)
    if np.ptp(xa) == 0 or np.ptp(ya) == 0:
        raise DegenerateInput()
    return xa, ya


def _clip(r: float) -> float:
    return float(min(1.0, max(-1.0, r)))


def pearson(x: Sequence[float], y: Sequence[float]) -> Tuple[float, float]:
    """
    Pearson korelasyonu

    Returns:
        (r, p): p, n < 3 ise NaN

    Raises:
        LengthMismatch: Uzunluklar farklıysa
        DegenerateInput: Vektörlerden biri sabitse
    """
    xa, ya = _prepare(x, y)
    if len(xa) < 3:
        r = np.corrcoef(xa, ya)[0, 1]
        return _clip(r), math.nan
    result = stats.pearsonr(xa, ya)
    return _clip(result[0]), float(result[1])


def spearman(x: Sequence[float], y: Sequence[float]) -> Tuple[float, float]:
    """
    Spearman korelasyonu (ortalama rank ile Pearson)

    Raises:
        LengthMismatch, DegenerateInput: pearson ile aynı
    """
    xa, ya = _prepare(x, y)
    if len(xa) < 3:
        r = np.corrcoef(stats.rankdata(xa), stats.rankdata(ya))[0, 1]
        return _clip(r), math.nan
    result = stats.spearmanr(xa, ya)
    return _clip(result[0]), float(result[1])


@dataclass
class CorrelationReport:
    pearson: float
    spearman: float
    p_value_pearson: float
    p_value_spearman: float
    n: int

    def to_dict(self) -> Dict[str, float]:
        return {
            "pearson": self.pearson,
            "spearman": self.spearman,
            "p_value_pearson": self.p_value_pearson,
            "p_value_spearman": self.p_value_spearman,
            "n": self.n,
        }


def correlation_report(x: Sequence[float], y: Sequence[float]) -> CorrelationReport:
    r_p, p_p = pearson(x, y)
    r_s, p_s = spearman(x, y)
    return CorrelationReport(r_p, r_s, p_p, p_s, len(x))


def align(pred: Mapping[str, float], reference: Mapping[str, float],
          strict: bool = True) -> Tuple[List[float], List[float]]:
    """
    İki id -> skor eşlemesini aynı id sırasıyla vektörlere çevirir

    strict=False ise yalnızca ortak id'ler kullanılır.

    Raises:
        KeyMismatch: strict iken anahtar kümeleri farklıysa veya ortak id yoksa
    """
    if strict and set(pred) != set(reference):
        only_pred = sorted(set(pred) - set(reference))[:5]
        only_ref = sorted(set(reference) - set(pred))[:5]
        raise KeyMismatch(f"Anahtarlar farklı: yalnız tahminde {only_pred}, yalnız referansta {only_ref}")
    ids = sorted(set(pred) & set(reference))
    if not ids:
        raise KeyMismatch("Ortak id yok")
    return [pred[i] for i in ids], [reference[i] for i in ids]


def correlate_maps(pred: Mapping[str, float], reference: Mapping[str, float],
                   strict: bool = True) -> CorrelationReport:
    x, y = align(pred, reference, strict)
    return correlation_report(x, y)
