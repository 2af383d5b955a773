"""
BatchJob (Batch İşi) Sınıfı

Bir turdaki tek bir batch'in hakeme gönderilecek hali:
render edilmiş prompt ve batch sırasıyla örnek id'leri.

Kullanım:
    job = BatchJob.create(round_index=0, batch_index=3, sample_ids=batch, prompt=text)
    pool.submit(job)
"""

from dataclasses import dataclass, field
from datetime import datetime, timezone
from typing import Any, Dict, List, Tuple
import uuid

from ..core.enums import JobStatus


@dataclass
class BatchJob:
    """
    Batch işi

    (round, batch_index) anahtarı sonuçların sıralanmasında kullanılır;
    sonuçlar thread'lerden herhangi bir sırayla gelebilir.
    """
    round: int
    batch_index: int
    sample_ids: List[str]
    prompt: str
    id: str = field(default_factory=lambda: str(uuid.uuid4()))
    created_at: datetime = field(default_factory=lambda: datetime.now(timezone.utc))
    status: JobStatus = JobStatus.PENDING

    def __post_init__(self):
        if not self.sample_ids:
            raise ValueError("BatchJob en az bir örnek içermeli")
        if not self.prompt:
            raise ValueError("BatchJob prompt'u boş olamaz")

    @property
    def key(self) -> Tuple[int, int]:
        return (self.round, self.batch_index)

    @property
    def size(self) -> int:
        return len(self.sample_ids)

    @classmethod
    def create(cls, round_index: int, batch_index: int, sample_ids: List[str], prompt: str) -> "BatchJob":
        """
        Factory metodu

        Args:
            round_index: 0 tabanlı tur
            batch_index: Tur içindeki batch sırası
            sample_ids: Batch sırasıyla id'ler (Sample1 = ilk id)
            prompt: Render edilmiş prompt

        Returns:
            BatchJob: Yeni iş
        """
        return cls(round=round_index, batch_index=batch_index,
                   sample_ids=list(sample_ids), prompt=prompt)

    def to_dict(self) -> Dict[str, Any]:
        """Log ve hata raporları için özet (prompt hariç)"""
        return {
            "job_id": self.id,
            "round": self.round,
            "batch": self.batch_index,
            "sample_ids": list(self.sample_ids),
            "status": self.status.value,
        }
