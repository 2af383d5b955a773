"""
Ana Engine Sınıfı

Batch'li değerlendirme döngüsünün merkezi kontrol noktası.
Her turda örnekler batch'lere bölünür, prompt'lar render edilir,
batch'ler DispatchPool üzerinden hakeme gönderilir, yanıtlar ayrıştırılır
ve skorlar ScoreTable'a eklenir. Son olarak tur skorları ortalanır.

Kullanım:
    with BatchEvaluator(judge, criterion, template, config, out_dir="runs/r1") as evaluator:
        result = evaluator.run(samples)
    print(result.ensemble)
"""

import logging
import math
from dataclasses import dataclass, field
from datetime import datetime, timezone
from pathlib import Path
from threading import Lock
from typing import Any, Callable, Dict, List, Optional, Sequence, Union

from ..batching.partition import Partition, make_partition, round_rng
from ..config import RunConfig
from ..core.enums import JobStatus, RepartitionBasis
from ..core.exceptions import (
    AllRoundsMissing,
    ConfigError,
    EmptyInput,
    EvaluatorError,
    SampleError,
)
from ..dataset.dataset import samples_digest
from ..job.job import BatchJob
from ..job.outcome import BatchOutcome
from ..judge.gateway import JudgeGateway, JudgeTranscript
from ..judge.ledger import CostLedger
from ..prompts.template import GENERIC_TASK, PromptTemplate, lookup, render
from ..sample.criterion import Criterion
from ..sample.sample import Sample
from ..status import ComponentStatus
from ..worker.executor import BatchExecutor
from ..worker.pool import DispatchPool
from .manifest import RunArtifacts, RunManifest
from .score_table import ScoreTable, ensemble_scores

Clock = Callable[[], datetime]


def _utc_now() -> datetime:
    return datetime.now(timezone.utc)


@dataclass
class RunResult:
    """
    Bir koşunun sonucu

    - missing: Hiç skor almayan örnekler varsa AllRoundsMissing (koşu yine tamamlanır)
    - exhausted_fraction: Ayrıştırma denemeleri tükenen batch oranı (tüm turlar)
    """
    table: ScoreTable
    ensemble: Dict[str, float]
    ledger: CostLedger
    manifest: RunManifest
    transcripts: List[JudgeTranscript] = field(default_factory=list)
    partitions: List[Partition] = field(default_factory=list)
    outcomes: List[List[BatchOutcome]] = field(default_factory=list)
    missing: Optional[AllRoundsMissing] = None
    exhausted_fraction: float = 0.0


class BatchEvaluator:
    """
    Batch Evaluator - döngünün koordinatörü

    Özellikler:
    - Tur 1 seed'li rastgele bölüm; sonraki turlar config.strategy ile
    - Bir turun batch'leri max_in_flight kadar eşzamanlı
    - Turlar sıralı; ScoreTable'ı yalnızca run() değiştirir
    - Sonuçlar (round, batch_index) sırasıyla birleştirilir
    - out_dir verilirse manifest ilk hakem çağrısından önce yazılır
    """

    def __init__(
        self,
        judge: JudgeGateway,
        criterion: Criterion,
        template: Optional[PromptTemplate] = None,
        config: Optional[RunConfig] = None,
        out_dir: Optional[Union[str, Path]] = None,
        clock: Optional[Clock] = None,
        max_output_tokens: int = 1024,
    ):
        """
        Args:
            judge: Canlı veya simüle hakem
            criterion: Değerlendirme kriteri
            template: Prompt şablonu (varsayılan: generic görev, config.procedure)
            config: Koşu yapılandırması
            out_dir: Çıktı klasörü (None ise dosya yazılmaz)
            clock: Manifest zaman damgaları için saat
            max_output_tokens: Hakem çağrısı başına çıktı token limiti

        Raises:
            ConfigError: Şablonun prosedürü/formatı config ve kriterle uyuşmuyorsa
        """
        self._config = config or RunConfig()
        logging.basicConfig(level=getattr(logging, self._config.log_level))
        self._logger = logging.getLogger("engine")

        self._judge = judge
        self._criterion = criterion
        self._template = template or lookup(self._config.procedure, criterion.format, task=GENERIC_TASK)
        if self._template.procedure != self._config.procedure:
            raise ConfigError(
                f"Şablon prosedürü ({self._template.procedure.value}) config ile uyuşmuyor "
                f"({self._config.procedure.value})",
                code="CFG025",
            )
        if self._template.format != criterion.format:
            raise ConfigError(
                f"Şablon formatı ({self._template.format.value}) kriter formatıyla uyuşmuyor "
                f"({criterion.format.value})",
                code="CFG026",
            )
        self._artifacts = RunArtifacts(out_dir) if out_dir is not None else None
        self._clock = clock or _utc_now

        self._executor = BatchExecutor(judge, criterion, self._config, max_output_tokens)
        self._pool: Optional[DispatchPool] = None
        self._started = False
        self._lock = Lock()
        self._rounds_done = 0

    @property
    def config(self) -> RunConfig:
        return self._config

    @property
    def template(self) -> PromptTemplate:
        return self._template

    def start(self):
        """DispatchPool'u başlatır"""
        with self._lock:
            if self._started:
                raise EvaluatorError("BatchEvaluator zaten başlatılmış", code="ENG001")
            self._pool = DispatchPool(self._config.max_in_flight, self._executor.execute)
            self._pool.start()
            self._started = True
            self._logger.info(f"BatchEvaluator başlatıldı ({self._config.max_in_flight} thread)")

    def shutdown(self):
        with self._lock:
            if not self._started:
                return
            if self._pool:
                self._pool.shutdown()
            self._pool = None
            self._started = False
            self._logger.info("BatchEvaluator kapatıldı")

    def run(self, samples: Sequence[Sample], dataset_digest: Optional[str] = None,
            dataset_name: str = "") -> RunResult:
        """
        N turluk değerlendirmeyi çalıştırır

        Args:
            samples: Değerlendirilecek örnekler (id'ler benzersiz)
            dataset_digest: Okunan veri setinin özeti (None ise örneklerden hesaplanır)
            dataset_name: Manifest için veri seti adı

        Returns:
            RunResult: Skor tablosu, ensemble skorları, defter ve kayıtlar

        Raises:
            EmptyInput: samples boşsa
            SampleError: Tekrarlanan id varsa
            JudgeError: Hakem tekrar denemelerden sonra da başarısızsa (tur yazıldıktan sonra)
        """
        if not samples:
            raise EmptyInput("Değerlendirilecek örnek yok")
        by_id: Dict[str, Sample] = {}
        for sample in samples:
            if sample.id in by_id:
                raise SampleError(f"Tekrarlanan sample id: {sample.id}", code="SMP006")
            by_id[sample.id] = sample
        ids = list(by_id)

        owns_pool = not self._started
        if owns_pool:
            self.start()
        try:
            return self._run(ids, by_id, dataset_digest or samples_digest(samples), dataset_name)
        finally:
            if owns_pool:
                self.shutdown()

    def _run(self, ids: List[str], by_id: Dict[str, Sample], digest: str, dataset_name: str) -> RunResult:
        config = self._config
        ledger = self._judge.ledger
        ledger.set_items(len(ids))
        table = ScoreTable(ids, self._criterion)

        manifest = RunManifest(
            run_config=config.to_dict(),
            criterion=self._criterion.to_dict(),
            judge=self._judge.describe(),
            dataset_name=dataset_name,
            dataset_digest=digest,
            dataset_size=len(ids),
            template_id=self._template.name,
            template_digest=self._template.digest,
        )
        manifest.timing["started_at"] = self._clock().isoformat()
        if self._artifacts:
            self._artifacts.prepare()
            self._artifacts.write_manifest(manifest)

        result = RunResult(table=table, ensemble={}, ledger=ledger, manifest=manifest)
        partition: Optional[Partition] = None
        n_batches = 0
        n_exhausted = 0

        for round_index in range(config.rounds):
            scores = self._repartition_scores(table) if round_index > 0 else None
            partition = make_partition(
                config.strategy, ids, config.batch_size, round_index,
                round_rng(config.seed, round_index), scores, partition,
            )
            outcomes = self._dispatch_round(partition, by_id)

            round_scores: Dict[str, Optional[float]] = {}
            for outcome in outcomes:
                round_scores.update(outcome.scores)
                result.transcripts.extend(outcome.transcripts)
            table.add_round(round_scores)
            result.partitions.append(partition)
            result.outcomes.append(outcomes)

            exhausted = sum(1 for o in outcomes if o.status == JobStatus.EXHAUSTED)
            failed = [o for o in outcomes if o.status == JobStatus.FAILED]
            n_batches += len(outcomes)
            n_exhausted += exhausted
            self._rounds_done += 1
            self._logger.info(
                f"Tur {round_index + 1}/{config.rounds} bitti: {len(outcomes)} batch, "
                f"{exhausted} eksik, {len(failed)} başarısız"
            )

            if self._artifacts:
                self._artifacts.append_partition(partition, outcomes)
                self._artifacts.append_transcripts(t for o in outcomes for t in o.transcripts)

            if failed:
                error = failed[0].exception or EvaluatorError(failed[0].error or "Batch başarısız")
                self._finish(result, status="failed", error=str(error))
                raise error

        result.exhausted_fraction = n_exhausted / n_batches if n_batches else 0.0
        result.ensemble = ensemble_scores(table)
        missing = table.missing_ids()
        if missing:
            result.missing = AllRoundsMissing(missing)
        self._finish(result, status="completed")
        return result

    def _dispatch_round(self, partition: Partition, by_id: Dict[str, Sample]) -> List[BatchOutcome]:
        """Turun batch'lerini havuza gönderir, sonuçları batch sırasıyla döndürür"""
        jobs = []
        for batch_index, batch in enumerate(partition.batches):
            prompt = render(self._template, [by_id[x] for x in batch], self._criterion)
            jobs.append(BatchJob.create(partition.round, batch_index, batch, prompt))

        assert self._pool is not None
        for job in jobs:
            self._pool.submit(job)
        outcomes = self._pool.collect(len(jobs))
        return sorted(outcomes, key=lambda o: (o.round, o.batch_index))

    def _repartition_scores(self, table: ScoreTable) -> Optional[Dict[str, float]]:
        """
        Yeniden bölüm için örnek başına skor

        Skoru olmayan örnekler mevcut skorların ortalamasıyla doldurulur;
        hiç skor yoksa None (rastgele bölüm).
        """
        if self._config.repartition_on == RepartitionBasis.LAST_ROUND:
            scores = table.last_round()
        else:
            scores = table.running_mean()
        if not scores:
            self._logger.warning("Önceki turlarda hiç skor yok, rastgele bölüme düşülüyor")
            return None
        fill = math.fsum(scores.values()) / len(scores)
        return {sample_id: scores.get(sample_id, fill) for sample_id in table.ids}

    def _finish(self, result: RunResult, status: str, error: Optional[str] = None) -> None:
        result.manifest.status = status
        result.manifest.error = error
        result.manifest.timing["finished_at"] = self._clock().isoformat()
        if not self._artifacts:
            return
        self._artifacts.write_score_table(result.table)
        self._artifacts.write_ensemble(result.table.ids, result.ensemble)
        self._artifacts.write_ledger(result.ledger)
        self._artifacts.write_manifest(result.manifest)

    def get_status(self) -> Dict[str, Any]:
        """Engine durumu"""
        status: Dict[str, Any] = {
            "engine": {
                "is_running": self._started,
                "rounds_completed": self._rounds_done,
            },
            "components": {
                "judge": self._judge.get_status().to_dict(),
                "ledger": self._judge.ledger.get_status().to_dict(),
            },
        }
        if self._pool:
            status["components"]["dispatch_pool"] = self._pool.get_status().to_dict()
        return status

    def get_component_status(self, name: str) -> Optional[ComponentStatus]:
        if name == "dispatch_pool" and self._pool:
            return self._pool.get_status()
        if name == "judge":
            return self._judge.get_status()
        if name == "ledger":
            return self._judge.ledger.get_status()
        return None

    # Context manager
    def __enter__(self):
        self.start()
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        self.shutdown()
        return False


def run_batch_evaluation(
    samples: Sequence[Sample],
    criterion: Criterion,
    template: Optional[PromptTemplate],
    config: RunConfig,
    judge: JudgeGateway,
    out_dir: Optional[Union[str, Path]] = None,
    clock: Optional[Clock] = None,
    dataset_digest: Optional[str] = None,
    dataset_name: str = "",
) -> RunResult:
    """
    Tek çağrılık koşu

    Returns:
        RunResult: table, ensemble ve ledger içerir
    """
    with BatchEvaluator(judge, criterion, template, config, out_dir, clock) as evaluator:
        return evaluator.run(samples, dataset_digest, dataset_name)
