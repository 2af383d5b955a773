"""
Skor Tablosu

Örnek başına tur tur skor geçmişi ve ensemble ortalaması.

Kullanım:
    table = ScoreTable(ids, criterion)
    table.add_round({"a": 2.4, "b": None})
    ensemble = ensemble_scores(table)
"""

import logging
import math
from typing import Any, Dict, List, Mapping, Optional, Sequence

from ..core.exceptions import EmptyTable
from ..sample.criterion import Criterion

Slot = Optional[float]


class ScoreTable:
    """
    Skor tablosu

    Her id için tur başına bir slot tutar; eksik skor None'dır.
    Her id'nin slot sayısı rounds_completed'a eşittir.
    Tabloyu yalnızca koordinatör (engine) değiştirir.
    """

    def __init__(self, ids: Sequence[str], criterion: Criterion):
        if len(set(ids)) != len(ids):
            raise ValueError("ScoreTable id'leri benzersiz olmalı")
        self._criterion = criterion
        self.entries: Dict[str, List[Slot]] = {sample_id: [] for sample_id in ids}
        self.rounds_completed = 0

    @property
    def ids(self) -> List[str]:
        return list(self.entries)

    @property
    def criterion(self) -> Criterion:
        return self._criterion

    def add_round(self, scores: Mapping[str, Slot]) -> None:
        """
        Bir turun skorlarını ekler; scores'ta olmayan id'ler eksik sayılır

        Raises:
            KeyError: Tabloda olmayan id varsa
            ValueError: Skor kriter aralığında değilse
        """
        unknown = set(scores) - set(self.entries)
        if unknown:
            raise KeyError(f"Tabloda olmayan id'ler: {sorted(unknown)}")
        for sample_id, value in scores.items():
            if value is not None and not self._criterion.contains(value):
                raise ValueError(f"{sample_id} skoru kriter aralığında değil: {value}")
        for sample_id, slots in self.entries.items():
            slots.append(scores.get(sample_id))
        self.rounds_completed += 1

    def round_scores(self, round_index: int) -> Dict[str, float]:
        """Bir turun mevcut skorları"""
        return {
            sample_id: slots[round_index]
            for sample_id, slots in self.entries.items()
            if slots[round_index] is not None
        }

    def last_round(self) -> Dict[str, float]:
        if self.rounds_completed == 0:
            return {}
        return self.round_scores(self.rounds_completed - 1)

    def running_mean(self) -> Dict[str, float]:
        """Tamamlanan turların ortalaması (en az bir skoru olan id'ler)"""
        result = {}
        for sample_id, slots in self.entries.items():
            present = [s for s in slots if s is not None]
            if present:
                result[sample_id] = math.fsum(present) / len(present)
        return result

    def missing_ids(self) -> List[str]:
        """Hiçbir turda skor almamış id'ler"""
        return [
            sample_id for sample_id, slots in self.entries.items()
            if all(s is None for s in slots)
        ]

    def to_records(self) -> List[Dict[str, Any]]:
        """score_table.jsonl satırları"""
        return [{"id": sample_id, "scores": list(slots)} for sample_id, slots in self.entries.items()]

    @classmethod
    def from_records(cls, records: Sequence[Mapping[str, Any]], criterion: Criterion) -> "ScoreTable":
        table = cls([r["id"] for r in records], criterion)
        rounds = {len(r["scores"]) for r in records}
        if len(rounds) > 1:
            raise ValueError("score_table satırlarının slot sayıları farklı")
        n_rounds = rounds.pop() if rounds else 0
        for r in range(n_rounds):
            table.add_round({rec["id"]: rec["scores"][r] for rec in records})
        return table


def ensemble_scores(table: ScoreTable) -> Dict[str, float]:
    """
    Örnek başına mevcut slotların ortalaması

    Hiç skoru olmayan örnekler sonuçta yer almaz ve loglanır.

    Raises:
        EmptyTable: Hiç tur tamamlanmamışsa
    """
    if table.rounds_completed < 1:
        raise EmptyTable()
    ensemble = table.running_mean()
    missing = table.missing_ids()
    if missing:
        logging.getLogger("engine").warning(
            f"{len(missing)} örnek hiçbir turda skor almadı: {missing[:10]}"
        )
    return ensemble
