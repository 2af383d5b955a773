"""
BatchOutcome (Batch Sonucu) Sınıfı

Bir batch işinin sonucu: örnek başına skorlar veya başarısızlık nedeni,
ve tüm denemelerin transcript kayıtları.

Kullanım:
    outcome = BatchOutcome.success(job, scores, clamped, transcripts)
    # veya
    outcome = BatchOutcome.exhausted(job, transcripts)
    outcome = BatchOutcome.failed(job, error, transcripts)
"""

from dataclasses import dataclass, field
from datetime import datetime, timezone
from typing import Any, Dict, List, Optional

from ..core.enums import JobStatus
from ..judge.gateway import JudgeTranscript
from .job import BatchJob


@dataclass
class BatchOutcome:
    """
    Batch sonucu

    - scores: örnek id -> skor (yalnızca COMPLETED durumunda dolu)
    - clamped: Aralığa çekilen örnek id'leri
    - error: EXHAUSTED / FAILED durumunda son hata mesajı
    - exception: FAILED durumunda engine'in tur sonunda tekrar fırlatacağı hata
    """
    round: int
    batch_index: int
    sample_ids: List[str]
    status: JobStatus
    scores: Dict[str, float] = field(default_factory=dict)
    clamped: List[str] = field(default_factory=list)
    transcripts: List[JudgeTranscript] = field(default_factory=list)
    error: Optional[str] = None
    exception: Optional[BaseException] = None
    started_at: Optional[datetime] = None
    completed_at: datetime = field(default_factory=lambda: datetime.now(timezone.utc))

    @property
    def is_success(self) -> bool:
        return self.status == JobStatus.COMPLETED

    @property
    def attempts(self) -> int:
        return len(self.transcripts)

    @property
    def duration(self) -> Optional[float]:
        if self.started_at and self.completed_at:
            return (self.completed_at - self.started_at).total_seconds()
        return None

    @classmethod
    def success(cls, job: BatchJob, scores: Dict[str, float], clamped: List[str],
                transcripts: List[JudgeTranscript], started_at: Optional[datetime] = None) -> "BatchOutcome":
        return cls(
            round=job.round,
            batch_index=job.batch_index,
            sample_ids=list(job.sample_ids),
            status=JobStatus.COMPLETED,
            scores=scores,
            clamped=clamped,
            transcripts=transcripts,
            started_at=started_at,
        )

    @classmethod
    def exhausted(cls, job: BatchJob, transcripts: List[JudgeTranscript], error: Optional[str],
                  started_at: Optional[datetime] = None) -> "BatchOutcome":
        """Ayrıştırma denemeleri bitti; batch'in örnekleri bu turda eksik"""
        return cls(
            round=job.round,
            batch_index=job.batch_index,
            sample_ids=list(job.sample_ids),
            status=JobStatus.EXHAUSTED,
            transcripts=transcripts,
            error=error,
            started_at=started_at,
        )

    @classmethod
    def failed(cls, job: BatchJob, error: BaseException, transcripts: Optional[List[JudgeTranscript]] = None,
               started_at: Optional[datetime] = None) -> "BatchOutcome":
        return cls(
            round=job.round,
            batch_index=job.batch_index,
            sample_ids=list(job.sample_ids),
            status=JobStatus.FAILED,
            transcripts=list(transcripts or []),
            error=str(error),
            exception=error,
            started_at=started_at,
        )

    def summary(self) -> Dict[str, Any]:
        """partitions.jsonl içindeki batch durumu"""
        return {
            "batch": self.batch_index,
            "status": self.status.value,
            "attempts": self.attempts,
            "clamped": list(self.clamped),
            "error": self.error,
        }
