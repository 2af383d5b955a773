"""
Dataset (Veri Seti) Modülü

Kanonik satır tabanlı format:

    {"dataset": {"name": "...", "provenance": "...", "criteria": [<Criterion>, ...]}}
    {"id": "s1", "fields": {"Conversation": "...", "Response": "..."}, "human": {"Coherence": 2.5}}
    ...

İlk satır başlıktır; sonraki her satır bir örnektir.
Benchmark ham formatları tools/convert_benchmarks.py ile dönüştürülür.

Kullanım:
    dataset = load_dataset("data/topical_chat.jsonl")
    save_dataset(dataset, "out/copy.jsonl")
"""

import hashlib
import json
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Union

from ..core.exceptions import DatasetNotFound, EmptyDataset, SampleError, SchemaViolation
from ..sample.criterion import Criterion
from ..sample.sample import Sample

logger = logging.getLogger("dataset")

HEADER_KEY = "dataset"


@dataclass
class Dataset:
    """
    Veri seti

    Yüklendikten sonra salt okunurdur; thread'ler arasında paylaşılabilir.
    raw_digest, dosyadan okunduysa dosya baytlarının sha256 özetidir.
    """
    name: str
    samples: List[Sample]
    criteria: List[Criterion] = field(default_factory=list)
    provenance: str = ""
    raw_digest: Optional[str] = None

    def __len__(self) -> int:
        return len(self.samples)

    @property
    def ids(self) -> List[str]:
        return [s.id for s in self.samples]

    def criterion(self, name: Optional[str] = None) -> Criterion:
        """
        Adı verilen kriter (None ise ilki)

        Raises:
            KeyError: Kriter tanımlı değilse
        """
        for criterion in self.criteria:
            if name is None or criterion.name == name:
                return criterion
        raise KeyError(f"Veri setinde kriter yok: {name}")

    def human_scores(self, criterion_name: str) -> Dict[str, float]:
        """id -> insan skoru (skoru olmayan örnekler atlanır)"""
        result = {}
        for sample in self.samples:
            value = sample.human_score(criterion_name)
            if value is not None:
                result[sample.id] = value
        return result

    @property
    def digest(self) -> str:
        return self.raw_digest or samples_digest(self.samples)

    def header(self) -> Dict[str, Any]:
        return {
            HEADER_KEY: {
                "name": self.name,
                "provenance": self.provenance,
                "criteria": [c.to_dict() for c in self.criteria],
            }
        }


def samples_digest(samples: Sequence[Sample]) -> str:
    """Örneklerin kanonik JSON'unun sha256 özeti"""
    h = hashlib.sha256()
    for sample in samples:
        h.update(json.dumps(sample.to_dict(), sort_keys=True, ensure_ascii=False).encode("utf-8"))
        h.update(b"\n")
    return h.hexdigest()


def validate_dataset(dataset: Dataset) -> None:
    """
    Veri seti invariantlarını kontrol eder

    Satır numaraları dosya satırlarıdır (başlık = 1, ilk örnek = 2).

    Raises:
        EmptyDataset: Örnek yoksa
        SchemaViolation: Tekrarlanan id, tanımsız kriter veya aralık dışı insan skoru
    """
    if not dataset.samples:
        raise EmptyDataset(f"Veri setinde örnek yok: {dataset.name}")
    criteria = {c.name: c for c in dataset.criteria}
    seen: Dict[str, int] = {}
    for offset, sample in enumerate(dataset.samples):
        line = offset + 2
        if sample.id in seen:
            raise SchemaViolation(line, f"id '{sample.id}' {seen[sample.id]}. satırda da var")
        seen[sample.id] = line
        for name, value in (sample.human_scores or {}).items():
            criterion = criteria.get(name)
            if criterion is None:
                raise SchemaViolation(line, f"tanımsız kriter: {name}")
            if not criterion.contains(value):
                raise SchemaViolation(
                    line,
                    f"{name} skoru {value} [{criterion.score_min}, {criterion.score_max}] dışında",
                )


def parse_dataset(text: str, name: str = "") -> Dataset:
    """
    Kanonik metni Dataset'e çevirir

    Raises:
        SchemaViolation: Bozuk satır
        EmptyDataset: Örnek yoksa
    """
    lines = text.splitlines()
    header: Dict[str, Any] = {}
    samples: List[Sample] = []
    for number, raw in enumerate(lines, start=1):
        if not raw.strip():
            continue
        try:
            record = json.loads(raw)
        except json.JSONDecodeError as e:
            raise SchemaViolation(number, f"geçersiz JSON: {e.msg}") from e
        if not isinstance(record, dict):
            raise SchemaViolation(number, "kayıt bir JSON nesnesi olmalı")

        if HEADER_KEY in record:
            if header or samples:
                raise SchemaViolation(number, "başlık yalnızca ilk satırda olabilir")
            header = record[HEADER_KEY] or {}
            continue

        for key in ("id", "fields"):
            if key not in record:
                raise SchemaViolation(number, f"'{key}' alanı eksik")
        try:
            samples.append(Sample.from_dict(record))
        except (SampleError, TypeError, ValueError) as e:
            raise SchemaViolation(number, str(e)) from e

    try:
        criteria = [Criterion.from_dict(c) for c in header.get("criteria", [])]
    except (SampleError, TypeError, ValueError) as e:
        raise SchemaViolation(1, f"kriter tanımı geçersiz: {e}") from e

    dataset = Dataset(
        name=header.get("name") or name,
        samples=samples,
        criteria=criteria,
        provenance=header.get("provenance", ""),
    )
    validate_dataset(dataset)
    return dataset


def load_dataset(path: Union[str, Path]) -> Dataset:
    """
    Veri setini dosyadan yükler

    Args:
        path: Kanonik .jsonl dosyası

    Returns:
        Dataset: Doğrulanmış veri seti (raw_digest = dosya özeti)

    Raises:
        DatasetNotFound: Dosya yoksa
        EmptyDataset: Dosya örnek içermiyorsa
        SchemaViolation: Şema hatası (satır numarasıyla)
    """
    path = Path(path)
    if not path.exists():
        raise DatasetNotFound(path)
    raw = path.read_bytes()
    dataset = parse_dataset(raw.decode("utf-8"), name=path.stem)
    dataset.raw_digest = hashlib.sha256(raw).hexdigest()
    logger.info(f"{path.name} yüklendi: {len(dataset)} örnek, {len(dataset.criteria)} kriter")
    return dataset


def dump_dataset(dataset: Dataset) -> str:
    lines = [json.dumps(dataset.header(), ensure_ascii=False)]
    lines.extend(json.dumps(s.to_dict(), ensure_ascii=False) for s in dataset.samples)
    return "\n".join(lines) + "\n"


def save_dataset(dataset: Dataset, path: Union[str, Path]) -> Path:
    """Veri setini kanonik formatta yazar"""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(dump_dataset(dataset), encoding="utf-8")
    return path
