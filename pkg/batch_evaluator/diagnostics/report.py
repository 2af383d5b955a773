"""
Tanılama Raporu (diag)

Tamamlanmış bir koşunun çıktı klasöründen rapor üretir:
    - ensemble ve tek tur korelasyonları (insan skorlarına karşı)
    - tur başına ve genel ortalama batch bias
    - skor dağılımı entropisi ve histogramı
    - tur başına Err(s̄,y) / Err(S,y) / Var(S) eğrisi

Rapor JSON ve grafik için CSV dosyaları olarak yazılır.

Kullanım:
    report = build_report("runs/r1", dataset=load_dataset("data.jsonl"))
    write_report(report, "runs/r1/diag")
"""

import csv
import json
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

from ..dataset.dataset import Dataset
from ..engine.manifest import LoadedRun, RunArtifacts
from ..metrics.correlation import CorrelationReport
from ..metrics.ensemble import default_bin_width
from .analysis import (
    BatchBiasPoint,
    DecompositionPoint,
    batch_biases,
    decomposition_curve,
    entropy_of,
    histogram_of,
    mean_bias,
    round_correlations,
    safe_correlation,
)

logger = logging.getLogger("diag")

REPORT_FILE = "diag_report.json"
HISTOGRAM_CSV = "histogram.csv"
DECOMPOSITION_CSV = "decomposition.csv"
BATCH_BIAS_CSV = "batch_bias.csv"
CORRELATION_CSV = "correlations.csv"


@dataclass
class DiagReport:
    run_dir: str
    criterion: str
    strategy: str
    rounds: int
    bin_width: float
    entropy: float
    histogram: List[tuple]
    batch_bias: List[BatchBiasPoint]
    decomposition: List[DecompositionPoint] = field(default_factory=list)
    ensemble_correlation: Optional[CorrelationReport] = None
    round_correlations: List[Optional[CorrelationReport]] = field(default_factory=list)
    missing: List[str] = field(default_factory=list)

    @property
    def mean_batch_bias(self) -> float:
        return mean_bias(self.batch_bias)

    def round_batch_bias(self) -> List[float]:
        return [mean_bias(self.batch_bias, r) for r in range(self.rounds)]

    def to_dict(self) -> Dict[str, Any]:
        def corr(report: Optional[CorrelationReport]):
            return report.to_dict() if report else None

        return {
            "run_dir": self.run_dir,
            "criterion": self.criterion,
            "strategy": self.strategy,
            "rounds": self.rounds,
            "correlation": {
                "ensemble": corr(self.ensemble_correlation),
                "per_round": [corr(r) for r in self.round_correlations],
            },
            "batch_bias": {
                "mean": self.mean_batch_bias,
                "per_round": self.round_batch_bias(),
            },
            "entropy": {"bits": self.entropy, "bin_width": self.bin_width},
            "decomposition": [p.to_dict() for p in self.decomposition],
            "missing": list(self.missing),
        }


def analyze(loaded: LoadedRun, truth: Optional[Dict[str, float]] = None,
            bin_width: Optional[float] = None, run_dir: str = "") -> DiagReport:
    """
    Args:
        loaded: Diskten okunmuş koşu
        truth: id -> insan (veya gizli) skor; None ise korelasyon ve ayrışım atlanır
        bin_width: Entropi bin genişliği (varsayılan: formata göre)
    """
    table = loaded.table
    width = bin_width or default_bin_width(loaded.criterion.format)
    report = DiagReport(
        run_dir=run_dir,
        criterion=loaded.criterion.name,
        strategy=str(loaded.manifest.run_config.get("strategy", "")),
        rounds=table.rounds_completed,
        bin_width=width,
        entropy=entropy_of(table, width),
        histogram=histogram_of(table, width),
        batch_bias=batch_biases(table, loaded.partitions, loaded.ensemble),
        missing=table.missing_ids(),
    )
    if truth:
        report.ensemble_correlation = safe_correlation(loaded.ensemble, truth)
        report.round_correlations = round_correlations(table, truth)
        report.decomposition = decomposition_curve(table, truth)
    return report


def build_report(run_dir: Union[str, Path], dataset: Optional[Dataset] = None,
                 criterion_name: Optional[str] = None,
                 bin_width: Optional[float] = None) -> DiagReport:
    """
    Raises:
        MissingArtifacts: Çıktı dosyalarından biri yoksa
    """
    loaded = RunArtifacts(run_dir).load()
    truth = None
    if dataset is not None:
        truth = dataset.human_scores(criterion_name or loaded.criterion.name)
        if not truth:
            logger.warning(f"{dataset.name}: '{loaded.criterion.name}' için insan skoru yok")
    report = analyze(loaded, truth, bin_width, str(run_dir))
    logger.info(
        f"diag: {report.rounds} tur, ortalama batch bias {report.mean_batch_bias:.4f}, "
        f"entropi {report.entropy:.3f} bit"
    )
    return report


def _write_csv(path: Path, header: List[str], rows) -> None:
    with open(path, "w", encoding="utf-8", newline="") as f:
        writer = csv.writer(f)
        writer.writerow(header)
        writer.writerows(rows)


def write_report(report: DiagReport, out_dir: Union[str, Path]) -> Path:
    """JSON rapor ve CSV dosyalarını yazar, klasörü döndürür"""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    (out / REPORT_FILE).write_text(
        json.dumps(report.to_dict(), indent=2, sort_keys=True) + "\n", encoding="utf-8"
    )
    _write_csv(out / HISTOGRAM_CSV, ["bin_center", "count"], report.histogram)
    _write_csv(
        out / BATCH_BIAS_CSV,
        ["round", "batch", "size", "bias"],
        [(p.round, p.batch, p.size, p.bias) for p in report.batch_bias],
    )
    _write_csv(
        out / DECOMPOSITION_CSV,
        ["round", "samples", "err_ensemble", "err_mean", "variance"],
        [
            (p.round, p.samples, p.decomposition.err_ensemble,
             p.decomposition.err_mean, p.decomposition.variance)
            for p in report.decomposition
        ],
    )
    rows = []
    if report.ensemble_correlation:
        c = report.ensemble_correlation
        rows.append(("ensemble", c.pearson, c.spearman, c.p_value_pearson, c.p_value_spearman, c.n))
    for r, c in enumerate(report.round_correlations, start=1):
        if c:
            rows.append((r, c.pearson, c.spearman, c.p_value_pearson, c.p_value_spearman, c.n))
    _write_csv(out / CORRELATION_CSV,
               ["round", "pearson", "spearman", "p_pearson", "p_spearman", "n"], rows)
    return out
