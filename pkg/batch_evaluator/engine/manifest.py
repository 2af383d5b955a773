"""
Koşu Manifest'i ve Çıktı Dosyaları

Bir koşunun çıktı klasörü:
    manifest.json       Yapılandırma, seed, veri seti özeti, şablon, hakem, zamanlama
    transcripts.jsonl   Her prompt / yanıt denemesi
    partitions.jsonl    Tur başına batch'ler ve batch durumları
    score_table.jsonl   Örnek başına tur skorları (eksik = null)
    ensemble.jsonl      Örnek başına ensemble skoru
    ledger.json         Token ve maliyet defteri

Manifest ilk hakem çağrısından önce yazılır, koşu bitince yeniden yazılır.
Zaman damgaları yalnızca "timing" bloğundadır; iki koşu karşılaştırılırken
bu blok dışarıda bırakılır.
"""

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, Iterable, List, Optional, Sequence, Union

from ..core.exceptions import MissingArtifacts
from ..judge.gateway import JudgeTranscript
from ..judge.ledger import CostLedger
from ..job.outcome import BatchOutcome
from ..batching.partition import Partition
from ..sample.criterion import Criterion
from .score_table import ScoreTable

MANIFEST_VERSION = 1

FILES = {
    "manifest": "manifest.json",
    "transcripts": "transcripts.jsonl",
    "partitions": "partitions.jsonl",
    "score_table": "score_table.jsonl",
    "ensemble": "ensemble.jsonl",
    "ledger": "ledger.json",
}


@dataclass
class RunManifest:
    """
    Koşu manifest'i

    dataset_digest, engine'e verilen veri setinin (dosyadan okunduysa
    dosya baytlarının) sha256 özetidir.
    """
    run_config: Dict[str, Any]
    criterion: Dict[str, Any]
    judge: Dict[str, Any]
    dataset_name: str
    dataset_digest: str
    dataset_size: int
    template_id: str
    template_digest: str
    status: str = "running"
    outputs: Dict[str, str] = field(default_factory=lambda: dict(FILES))
    timing: Dict[str, Optional[str]] = field(default_factory=lambda: {"started_at": None, "finished_at": None})
    error: Optional[str] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "version": MANIFEST_VERSION,
            "run_config": self.run_config,
            "criterion": self.criterion,
            "judge": self.judge,
            "dataset": {
                "name": self.dataset_name,
                "digest": self.dataset_digest,
                "size": self.dataset_size,
            },
            "template": {"id": self.template_id, "digest": self.template_digest},
            "status": self.status,
            "outputs": dict(self.outputs),
            "timing": dict(self.timing),
            "error": self.error,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "RunManifest":
        dataset = data.get("dataset", {})
        template = data.get("template", {})
        return cls(
            run_config=data["run_config"],
            criterion=data["criterion"],
            judge=data.get("judge", {}),
            dataset_name=dataset.get("name", ""),
            dataset_digest=dataset.get("digest", ""),
            dataset_size=int(dataset.get("size", 0)),
            template_id=template.get("id", ""),
            template_digest=template.get("digest", ""),
            status=data.get("status", ""),
            outputs=dict(data.get("outputs", FILES)),
            timing=dict(data.get("timing", {})),
            error=data.get("error"),
        )

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def _dump_line(record: Dict[str, Any]) -> str:
    return json.dumps(record, ensure_ascii=False) + "\n"


def _read_jsonl(path: Path) -> List[Dict[str, Any]]:
    with open(path, "r", encoding="utf-8") as f:
        return [json.loads(line) for line in f if line.strip()]


@dataclass
class LoadedRun:
    """Diag için diskten okunan koşu"""
    manifest: RunManifest
    criterion: Criterion
    table: ScoreTable
    ensemble: Dict[str, float]
    partitions: List[Partition]
    batch_status: List[List[Dict[str, Any]]]
    ledger: Dict[str, Any]


class RunArtifacts:
    """
    Çıktı klasörü yazıcı / okuyucu

    Manifest'teki yollar klasöre göredir; klasör taşınabilir.
    """

    def __init__(self, out_dir: Union[str, Path]):
        self.out_dir = Path(out_dir)

    def path(self, key: str) -> Path:
        return self.out_dir / FILES[key]

    def prepare(self) -> None:
        """Klasörü oluştur, satır dosyalarını boşalt"""
        self.out_dir.mkdir(parents=True, exist_ok=True)
        for key in ("transcripts", "partitions"):
            self.path(key).write_text("", encoding="utf-8")

    def write_manifest(self, manifest: RunManifest) -> None:
        self.path("manifest").write_text(manifest.to_json(), encoding="utf-8")

    def append_transcripts(self, transcripts: Iterable[JudgeTranscript]) -> None:
        with open(self.path("transcripts"), "a", encoding="utf-8") as f:
            for transcript in transcripts:
                f.write(_dump_line(transcript.to_dict()))

    def append_partition(self, partition: Partition, outcomes: Sequence[BatchOutcome]) -> None:
        record = partition.to_dict()
        record["outcomes"] = [o.summary() for o in outcomes]
        with open(self.path("partitions"), "a", encoding="utf-8") as f:
            f.write(_dump_line(record))

    def write_score_table(self, table: ScoreTable) -> None:
        with open(self.path("score_table"), "w", encoding="utf-8") as f:
            for record in table.to_records():
                f.write(_dump_line(record))

    def write_ensemble(self, ids: Sequence[str], ensemble: Dict[str, float]) -> None:
        """Hiç skoru olmayan örnekler score = null ile yazılır"""
        with open(self.path("ensemble"), "w", encoding="utf-8") as f:
            for sample_id in ids:
                f.write(_dump_line({"id": sample_id, "score": ensemble.get(sample_id)}))

    def write_ledger(self, ledger: CostLedger) -> None:
        self.path("ledger").write_text(
            json.dumps(ledger.to_dict(), indent=2, sort_keys=True) + "\n", encoding="utf-8"
        )

    def missing(self) -> List[str]:
        return [name for key, name in FILES.items() if not self.path(key).exists()]

    def load(self) -> LoadedRun:
        """
        Tamamlanmış koşuyu okur

        Raises:
            MissingArtifacts: Dosyalardan biri yoksa
        """
        missing = self.missing()
        if missing:
            raise MissingArtifacts(missing)

        manifest = RunManifest.from_dict(json.loads(self.path("manifest").read_text(encoding="utf-8")))
        criterion = Criterion.from_dict(manifest.criterion)
        table = ScoreTable.from_records(_read_jsonl(self.path("score_table")), criterion)
        ensemble = {
            r["id"]: r["score"] for r in _read_jsonl(self.path("ensemble")) if r["score"] is not None
        }
        partition_records = _read_jsonl(self.path("partitions"))
        partitions = [Partition.from_dict(r) for r in partition_records]
        batch_status = [r.get("outcomes", []) for r in partition_records]
        ledger = json.loads(self.path("ledger").read_text(encoding="utf-8"))
        return LoadedRun(manifest, criterion, table, ensemble, partitions, batch_status, ledger)
