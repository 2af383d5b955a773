"""
Koşu Analizleri

Bir koşunun skor tablosu ve bölümlerinden tanılama ölçümleri üretir.
Hem diskten okunan koşular (diag) hem de bellekteki koşular (simulate)
aynı fonksiyonları kullanır.
"""

import math
from dataclasses import dataclass
from typing import Dict, List, Mapping, Optional, Sequence

from ..batching.partition import Partition
from ..core.exceptions import DegenerateInput, KeyMismatch
from ..engine.score_table import ScoreTable
from ..metrics.correlation import CorrelationReport, correlate_maps
from ..metrics.ensemble import (
    Decomposition,
    batch_bias,
    decompose,
    mean_decomposition,
    score_entropy,
    score_histogram,
)


@dataclass
class BatchBiasPoint:
    round: int
    batch: int
    size: int
    bias: float


@dataclass
class DecompositionPoint:
    round: int
    samples: int
    decomposition: Decomposition

    def to_dict(self) -> Dict[str, float]:
        return {"round": self.round, "samples": self.samples, **self.decomposition.to_dict()}


def safe_correlation(pred: Mapping[str, float],
                     reference: Mapping[str, float]) -> Optional[CorrelationReport]:
    """Ortak id'ler üzerinden korelasyon; tanımsızsa None"""
    try:
        return correlate_maps(pred, reference, strict=False)
    except (DegenerateInput, KeyMismatch):
        return None


def batch_biases(table: ScoreTable, partitions: Sequence[Partition],
                 ensemble: Mapping[str, float]) -> List[BatchBiasPoint]:
    """
    Her tur ve batch için batch bias

    Batch'in o turda skoru olmayan örnekleri atlanır; hiç skoru olmayan batch'ler raporlanmaz.
    """
    points = []
    for partition in partitions:
        if partition.round >= table.rounds_completed:
            continue
        round_scores = table.round_scores(partition.round)
        for batch_index, batch in enumerate(partition.batches):
            present = {i: round_scores[i] for i in batch if i in round_scores and i in ensemble}
            if not present:
                continue
            bias = batch_bias(present, {i: ensemble[i] for i in present})
            points.append(BatchBiasPoint(partition.round, batch_index, len(present), bias))
    return points


def mean_bias(points: Sequence[BatchBiasPoint], round_index: Optional[int] = None) -> float:
    selected = [p.bias for p in points if round_index is None or p.round == round_index]
    if not selected:
        return math.nan
    return math.fsum(selected) / len(selected)


def decomposition_curve(table: ScoreTable, truth: Mapping[str, float]) -> List[DecompositionPoint]:
    """
    Tur r için (1..N) ilk r turun skorlarıyla örnek başına ayrışımın ortalaması

    Gerçek değeri olmayan veya hiç skoru olmayan örnekler atlanır.
    """
    curve = []
    for r in range(1, table.rounds_completed + 1):
        items = []
        for sample_id, slots in table.entries.items():
            if sample_id not in truth:
                continue
            present = [s for s in slots[:r] if s is not None]
            if present:
                items.append(decompose(present, truth[sample_id]))
        if items:
            curve.append(DecompositionPoint(r, len(items), mean_decomposition(items)))
    return curve


def all_scores(table: ScoreTable) -> List[float]:
    """Tüm turların mevcut skorları"""
    return [s for slots in table.entries.values() for s in slots if s is not None]


def round_correlations(table: ScoreTable, truth: Mapping[str, float]) -> List[Optional[CorrelationReport]]:
    """Tek tur skorlarının gerçek değerle korelasyonu (tur başına)"""
    return [safe_correlation(table.round_scores(r), truth) for r in range(table.rounds_completed)]


def entropy_of(table: ScoreTable, bin_width: float) -> float:
    scores = all_scores(table)
    if not scores:
        return math.nan
    return score_entropy(scores, bin_width, table.criterion.score_min)


def histogram_of(table: ScoreTable, bin_width: float):
    scores = all_scores(table)
    if not scores:
        return []
    return score_histogram(scores, bin_width, table.criterion.score_min)
