"""
Batch Executor Modülü

Bir BatchJob'u çalıştırır: hakeme gönderir, yanıtı ayrıştırır,
ayrıştırılamazsa prompt'u max_parse_retries kez daha gönderir.

Kullanım:
    executor = BatchExecutor(judge, criterion, run_config)
    outcome = executor.execute(job)
"""

import logging
from datetime import datetime, timezone
from typing import List

from ..config import RunConfig
from ..core.enums import ParseStatus
from ..core.exceptions import JudgeError, ParseError
from ..judge.gateway import JudgeGateway, JudgeRequest, JudgeTranscript, TokenUsage
from ..job.job import BatchJob
from ..job.outcome import BatchOutcome
from ..parsing.parser import parse_batch_scores
from ..sample.criterion import Criterion


class BatchExecutor:
    """
    Batch çalıştırıcı

    Özellikler:
    - Ayrıştırma hatasında tekrar: toplam 1 + max_parse_retries deneme
    - Hakem hatası tekrar edilmez (hakem kendi içinde tekrar eder), FAILED döner
    - Her deneme bir JudgeTranscript üretir
    - Hiçbir durumda exception dışarı sızmaz; sonuç her zaman BatchOutcome
    """

    def __init__(self, judge: JudgeGateway, criterion: Criterion, config: RunConfig,
                 max_output_tokens: int = 1024):
        self._judge = judge
        self._criterion = criterion
        self._config = config
        self._max_output_tokens = max_output_tokens
        self._logger = logging.getLogger("worker")

    def execute(self, job: BatchJob) -> BatchOutcome:
        """
        İşi çalıştır

        Args:
            job: Render edilmiş batch işi

        Returns:
            BatchOutcome: COMPLETED, EXHAUSTED veya FAILED
        """
        started_at = datetime.now(timezone.utc)
        transcripts: List[JudgeTranscript] = []
        last_error = None
        total_attempts = 1 + self._config.max_parse_retries

        for attempt in range(total_attempts):
            request = JudgeRequest(
                prompt=job.prompt,
                temperature=self._config.temperature,
                max_output=self._max_output_tokens,
                round=job.round,
                batch_index=job.batch_index,
                sample_ids=tuple(job.sample_ids),
                procedure=self._config.procedure,
                attempt=attempt,
            )

            try:
                response = self._judge.complete(request)
            except JudgeError as e:
                usage = getattr(e, "usage", None) or TokenUsage()
                transcripts.append(
                    self._transcript(job, attempt, getattr(e, "response_text", None), usage, "judge_error", str(e))
                )
                self._logger.error(f"Batch {job.key} hakem hatası: {e}")
                return BatchOutcome.failed(job, e, transcripts, started_at)
            except Exception as e:
                # Beklenmeyen hata: sonucu yine de döndür, engine tur sonunda fırlatır
                self._logger.exception(f"Batch {job.key} beklenmeyen hata")
                return BatchOutcome.failed(job, e, transcripts, started_at)

            try:
                parsed = parse_batch_scores(
                    response.text,
                    job.size,
                    self._criterion,
                    self._config.procedure,
                    self._config.clamp_tolerance,
                )
            except ParseError as e:
                last_error = str(e)
                transcripts.append(
                    self._transcript(job, attempt, response.text, response.usage,
                                     ParseStatus.FAILED.value, last_error)
                )
                self._logger.warning(
                    f"Batch {job.key} ayrıştırılamadı (deneme {attempt + 1}/{total_attempts}): {e}"
                )
                continue

            transcripts.append(
                self._transcript(job, attempt, response.text, response.usage, parsed.status.value, None)
            )
            scores = {sample_id: parsed.scores[k] for k, sample_id in enumerate(job.sample_ids, start=1)}
            clamped = [job.sample_ids[k - 1] for k in sorted(parsed.clamped)]
            if clamped:
                self._logger.warning(f"Batch {job.key}: {len(clamped)} skor aralığa çekildi: {clamped}")
            return BatchOutcome.success(job, scores, clamped, transcripts, started_at)

        transcripts[-1].parse_status = ParseStatus.EXHAUSTED.value
        self._logger.warning(f"Batch {job.key} {total_attempts} denemede ayrıştırılamadı, eksik işaretlendi")
        return BatchOutcome.exhausted(job, transcripts, last_error, started_at)

    @staticmethod
    def _transcript(job: BatchJob, attempt: int, response, usage: TokenUsage,
                    status: str, error) -> JudgeTranscript:
        return JudgeTranscript(
            round=job.round,
            batch=job.batch_index,
            attempt=attempt,
            sample_ids=tuple(job.sample_ids),
            prompt=job.prompt,
            response=response,
            usage=usage,
            parse_status=status,
            error=error,
        )
