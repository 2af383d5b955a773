"""
Batch Bölümleme Modülü

Örnek id'lerini her tur için batch'lere böler.

Stratejiler:
    - random: Karıştır ve B'lik parçalara böl
    - homogeneous: Skora göre sırala, ardışık B'lik dilimler
    - heterogeneous: Sıralı diziyi L = ceil(n/B) boyutlu dilimlere ayır,
      i. batch her dilimin i. elemanını alır
    - fixed: Önceki bölümü aynen koru

Tüm fonksiyonlar saftır; sıralamada eşitlikler (skor, id) ile kırılır.

Kullanım:
    rng = round_rng(seed=7, round_index=0)
    first = partition_random(ids, 10, rng)
    second = partition_heterogeneous(ids, running_means, 10, round_index=1)
"""

import math
from dataclasses import dataclass
from typing import Any, Dict, List, Mapping, Optional, Sequence

import numpy as np

from ..core.enums import Strategy
from ..core.exceptions import EmptyInput, MissingScore

Batch = List[str]


@dataclass
class Partition:
    """
    Bir turun batch listesi

    batches: Sıralı batch listesi, her batch sıralı id listesi
    round: Turun 0 tabanlı indeksi
    """
    batches: List[Batch]
    round: int = 0
    strategy: Strategy = Strategy.RANDOM

    @property
    def sizes(self) -> List[int]:
        return [len(b) for b in self.batches]

    def ids(self) -> List[str]:
        return [sample_id for batch in self.batches for sample_id in batch]

    def covers(self, ids: Sequence[str]) -> bool:
        """Her id tam olarak bir kez geçiyor mu?"""
        flat = self.ids()
        return len(flat) == len(set(flat)) and set(flat) == set(ids) and len(flat) == len(ids)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "round": self.round,
            "strategy": self.strategy.value,
            "batches": [list(b) for b in self.batches],
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "Partition":
        return cls(
            batches=[list(b) for b in data["batches"]],
            round=int(data.get("round", 0)),
            strategy=Strategy(data.get("strategy", "random")),
        )


def round_rng(seed: int, round_index: int) -> np.random.Generator:
    """Tur başına bağımsız, tekrar üretilebilir generator"""
    return np.random.default_rng([seed, round_index])


def _check(ids: Sequence[str], batch_size: int) -> None:
    if not ids:
        raise EmptyInput()
    if batch_size < 1:
        raise ValueError("batch_size en az 1 olmalı")


def _chunk(ordered: Sequence[str], size: int) -> List[Batch]:
    return [list(ordered[i:i + size]) for i in range(0, len(ordered), size)]


def sort_by_score(ids: Sequence[str], scores: Mapping[str, float]) -> List[str]:
    """
    Skora göre artan sıralama, eşitlikte id

    Raises:
        MissingScore: Skoru olmayan id varsa
    """
    for sample_id in ids:
        if sample_id not in scores or scores[sample_id] is None:
            raise MissingScore(sample_id)
    return sorted(ids, key=lambda sample_id: (scores[sample_id], sample_id))


def partition_random(ids: Sequence[str], batch_size: int, rng: np.random.Generator,
                     round_index: int = 0) -> Partition:
    """
    Rastgele bölümleme

    Args:
        ids: Örnek id'leri
        batch_size: B
        rng: Tohumlanmış numpy generator
        round_index: Kaydedilecek tur indeksi

    Returns:
        Partition: ceil(n/B) batch, sonuncusu kısa olabilir
    """
    _check(ids, batch_size)
    order = rng.permutation(len(ids))
    shuffled = [ids[i] for i in order]
    return Partition(_chunk(shuffled, batch_size), round_index, Strategy.RANDOM)


def partition_homogeneous(ids: Sequence[str], scores: Mapping[str, float], batch_size: int,
                          round_index: int = 0) -> Partition:
    """
    Homojen bölümleme: benzer skorlar aynı batch'te

    i. batch sıralı dizinin [(i-1)*B, i*B) dilimidir.
    """
    _check(ids, batch_size)
    ordered = sort_by_score(ids, scores)
    return Partition(_chunk(ordered, batch_size), round_index, Strategy.HOMOGENEOUS)


def quantile_splits(ids: Sequence[str], scores: Mapping[str, float], batch_size: int) -> List[Batch]:
    """
    Sıralı diziyi L = ceil(n/B) boyutlu ardışık dilimlere ayırır

    Son dilim kısa olabilir. Dilim sayısı en fazla B'dir.
    """
    _check(ids, batch_size)
    ordered = sort_by_score(ids, scores)
    split_size = math.ceil(len(ordered) / batch_size)
    return _chunk(ordered, split_size)


def partition_heterogeneous(ids: Sequence[str], scores: Mapping[str, float], batch_size: int,
                            round_index: int = 0) -> Partition:
    """
    Heterojen bölümleme: her batch her skor diliminden en fazla bir örnek alır

    i. batch, j. dilimin ((i + off_j) mod L). elemanını alır (varsa),
    off_j = (round_index * j) mod L. round_index = 0 iken kaydırma yoktur:
    20 örnek, B=10 için 1. batch tek sıralar, 2. batch çift sıralardır.
    Sonraki turlarda kaydırma, skorlar değişmese bile batch'lerin
    aynen tekrarlanmasını önler.

    Batch boyutları en fazla 1 farklıdır.
    """
    splits = quantile_splits(ids, scores, batch_size)
    n_batches = len(splits[0])
    batches: List[Batch] = [[] for _ in range(n_batches)]
    for j, split in enumerate(splits):
        offset = (round_index * j) % n_batches
        for i in range(n_batches):
            k = (i + offset) % n_batches
            if k < len(split):
                batches[i].append(split[k])
    return Partition(batches, round_index, Strategy.HETEROGENEOUS)


def make_partition(
    strategy: Strategy,
    ids: Sequence[str],
    batch_size: int,
    round_index: int,
    rng: np.random.Generator,
    scores: Optional[Mapping[str, float]] = None,
    previous: Optional[Partition] = None,
) -> Partition:
    """
    Stratejiye göre tur bölümü üretir

    Skor gerektiren stratejilerde scores None ise rastgele bölüme düşer.
    FIXED, önceki bölümü yeni tur indeksiyle döndürür.
    """
    if strategy == Strategy.FIXED and previous is not None:
        return Partition([list(b) for b in previous.batches], round_index, Strategy.FIXED)
    if strategy in (Strategy.RANDOM, Strategy.FIXED) or scores is None:
        partition = partition_random(ids, batch_size, rng, round_index)
        if strategy == Strategy.FIXED:
            partition.strategy = Strategy.FIXED
        return partition
    if strategy == Strategy.HOMOGENEOUS:
        return partition_homogeneous(ids, scores, batch_size, round_index)
    return partition_heterogeneous(ids, scores, batch_size, round_index)
