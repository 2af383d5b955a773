"""
Simülasyon Taraması (simulate)

Sentetik veri seti ve simüle hakem ile strateji / batch boyutu / tur /
bias / gürültü / format ızgarasını çalıştırır. Her hücre, seed'ler üzerinden
ortalama alınmış bir satırdır.

Kullanım:
    spec = SweepSpec.from_dict({"batch_sizes": [1, 2, 5, 10], "seeds": [0, 1, 2]})
    rows = run_sweep(spec)
    write_sweep_csv(rows, "sweep.csv")
"""

import csv
import itertools
import logging
import math
from dataclasses import dataclass, field, fields
from pathlib import Path
from typing import Any, Dict, Iterator, List, Union

from ..config import RunConfig
from ..core.enums import Procedure, ScoreFormat, Strategy
from ..core.exceptions import ConfigError, InvalidSweep
from ..dataset.synth import synth_dataset
from ..engine.engine import RunResult, run_batch_evaluation
from ..judge.simulated import SimJudgeConfig, SimulatedJudge
from ..prompts.template import GENERIC_TASK, builtin_criterion
from ..metrics.ensemble import default_bin_width
from .analysis import batch_biases, decomposition_curve, entropy_of, mean_bias, safe_correlation

logger = logging.getLogger("diag")

SWEEP_COLUMNS = [
    "strategy", "batch_size", "rounds", "bias_alpha", "noise_sigma", "format",
    "seeds", "pearson", "spearman", "batch_bias", "entropy",
    "err_ensemble", "err_mean", "variance",
]


@dataclass
class SweepSpec:
    """Tarama eksenleri; her eksen en az bir değer içermeli"""
    strategies: List[Strategy] = field(default_factory=lambda: [Strategy.HETEROGENEOUS])
    batch_sizes: List[int] = field(default_factory=lambda: [10])
    rounds: List[int] = field(default_factory=lambda: [5])
    bias_alphas: List[float] = field(default_factory=lambda: [0.5])
    noise_sigmas: List[float] = field(default_factory=lambda: [0.2])
    formats: List[ScoreFormat] = field(default_factory=lambda: [ScoreFormat.DECIMAL])
    procedure: Procedure = Procedure.TWO_STAGE
    seeds: List[int] = field(default_factory=lambda: [0])
    n: int = 100

    def __post_init__(self):
        try:
            self.strategies = [Strategy(s) for s in self.strategies]
            self.formats = [ScoreFormat(f) for f in self.formats]
            self.procedure = Procedure(self.procedure)
        except ValueError as e:
            raise InvalidSweep(f"Geçersiz değer: {e}") from e
        for f in fields(self):
            value = getattr(self, f.name)
            if isinstance(value, list) and not value:
                raise InvalidSweep(f"Tarama ekseni boş: {f.name}")
        if self.n < 1:
            raise InvalidSweep(f"n en az 1 olmalı: {self.n}")
        if any(b < 1 for b in self.batch_sizes):
            raise InvalidSweep("batch_sizes değerleri en az 1 olmalı")
        if any(r < 1 for r in self.rounds):
            raise InvalidSweep("rounds değerleri en az 1 olmalı")
        if any(s < 0 for s in self.noise_sigmas):
            raise InvalidSweep("noise_sigmas negatif olamaz")
        if any(s < 0 for s in self.seeds):
            raise InvalidSweep("seeds negatif olamaz")

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "SweepSpec":
        known = {f.name for f in fields(cls)}
        unknown = set(data) - known
        if unknown:
            raise InvalidSweep(f"Bilinmeyen tarama alanları: {sorted(unknown)}")
        return cls(**data)

    def cells(self) -> Iterator[Dict[str, Any]]:
        for strategy, b, r, alpha, sigma, fmt in itertools.product(
            self.strategies, self.batch_sizes, self.rounds,
            self.bias_alphas, self.noise_sigmas, self.formats,
        ):
            yield {
                "strategy": strategy,
                "batch_size": b,
                "rounds": r,
                "bias_alpha": alpha,
                "noise_sigma": sigma,
                "fmt": fmt,
            }


@dataclass
class CellResult:
    """Tek (ayar, seed) koşusunun ölçümleri"""
    result: RunResult
    truth: Dict[str, float]
    pearson: float
    spearman: float
    batch_bias: float
    entropy: float
    err_ensemble: float
    err_mean: float
    variance: float


def run_cell(strategy: Strategy, batch_size: int, rounds: int, bias_alpha: float,
             noise_sigma: float, fmt: ScoreFormat, seed: int, n: int = 100,
             procedure: Procedure = Procedure.TWO_STAGE, max_in_flight: int = 4) -> CellResult:
    """
    Tek hücre: synth(n) + simüle hakem + tam koşu

    Raises:
        InvalidSweep: Ayarlar geçersizse
    """
    criterion = builtin_criterion(GENERIC_TASK, fmt=ScoreFormat(fmt))
    dataset = synth_dataset(n, criterion, seed=seed)
    truth = dataset.human_scores(criterion.name)
    try:
        judge = SimulatedJudge(SimJudgeConfig.from_criterion(
            criterion, truth, bias_alpha=bias_alpha, noise_sigma=noise_sigma, seed=seed,
        ))
        config = RunConfig(
            rounds=rounds, batch_size=batch_size, strategy=strategy, procedure=procedure,
            seed=seed, max_in_flight=max_in_flight, log_level="WARNING",
        )
    except ConfigError as e:
        raise InvalidSweep(str(e)) from e

    result = run_batch_evaluation(dataset.samples, criterion, None, config, judge,
                                  dataset_digest=dataset.digest, dataset_name=dataset.name)
    corr = safe_correlation(result.ensemble, truth)
    curve = decomposition_curve(result.table, truth)
    last = curve[-1].decomposition if curve else None
    return CellResult(
        result=result,
        truth=truth,
        pearson=corr.pearson if corr else math.nan,
        spearman=corr.spearman if corr else math.nan,
        batch_bias=mean_bias(batch_biases(result.table, result.partitions, result.ensemble)),
        entropy=entropy_of(result.table, default_bin_width(criterion.format)),
        err_ensemble=last.err_ensemble if last else math.nan,
        err_mean=last.err_mean if last else math.nan,
        variance=last.variance if last else math.nan,
    )


def _mean(values: List[float]) -> float:
    finite = [v for v in values if not math.isnan(v)]
    return math.fsum(finite) / len(finite) if finite else math.nan


def run_sweep(spec: SweepSpec) -> List[Dict[str, Any]]:
    """
    Returns:
        List[Dict]: SWEEP_COLUMNS sütunlu satırlar (seed ortalaması)
    """
    rows = []
    for cell in spec.cells():
        results = [
            run_cell(seed=seed, n=spec.n, procedure=spec.procedure, **cell)
            for seed in spec.seeds
        ]
        row = {
            "strategy": cell["strategy"].value,
            "batch_size": cell["batch_size"],
            "rounds": cell["rounds"],
            "bias_alpha": cell["bias_alpha"],
            "noise_sigma": cell["noise_sigma"],
            "format": cell["fmt"].value,
            "seeds": len(results),
        }
        for metric in ("pearson", "spearman", "batch_bias", "entropy",
                       "err_ensemble", "err_mean", "variance"):
            row[metric] = _mean([getattr(r, metric) for r in results])
        logger.info(f"simulate: {row}")
        rows.append(row)
    return rows


def write_sweep_csv(rows: List[Dict[str, Any]], path: Union[str, Path]) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="") as f:
        writer = csv.DictWriter(f, fieldnames=SWEEP_COLUMNS)
        writer.writeheader()
        writer.writerows(rows)
    return path
