"""
Simülasyon Hakemi

Gizli gerçek kaliteden, batch bağlamına bağlı bir bias ile skor üreten
deterministik hakem. Yanıtlar şablona uygundur ve ayrıştırıcıdan geçer.

Skor modeli (batch içindeki her örnek i için):
    s_i = clip(q_i + alpha * (mean_batch(q) - mean_global(q)) + eps_i)

eps_i ~ N(0, sigma), (seed, tur, sha256(örnek id)) ile tohumlanır. Böylece
yalnızca bölümlemesi farklı iki koşu aynı örnek gürültüsünü görür ve
thread sırası sonucu değiştiremez.
Ondalık format tek basamağa yuvarlar, tam sayı formatı en yakın tam sayıya.
"""

import math
from dataclasses import dataclass
from typing import Dict, List, Mapping, Optional, Sequence

import numpy as np

from ..core.enums import Procedure, ScoreFormat
from ..core.exceptions import ConfigError, UnknownSample
from ..parsing.formatter import format_scores
from ..sample.criterion import Criterion
from ..sample.sample import stable_id_key
from .gateway import JudgeGateway, JudgeRequest, JudgeResponse, TokenUsage, whitespace_tokens
from .ledger import CostLedger


@dataclass
class SimJudgeConfig:
    """
    Simülasyon hakemi ayarları

    - true_quality: örnek id -> gizli kalite (kriter aralığında)
    - bias_alpha: Batch bağlamı bias gücü
    - noise_sigma: Gaussian gürültü std (>= 0)
    """
    true_quality: Dict[str, float]
    bias_alpha: float = 0.0
    noise_sigma: float = 0.0
    seed: int = 0
    format: ScoreFormat = ScoreFormat.DECIMAL
    score_min: float = 1.0
    score_max: float = 3.0

    def __post_init__(self):
        if isinstance(self.format, str):
            self.format = ScoreFormat(self.format)
        if self.noise_sigma < 0:
            raise ConfigError("noise_sigma negatif olamaz", code="CFG018")
        if not self.true_quality:
            raise ConfigError("true_quality boş olamaz", code="CFG022")
        for sample_id, q in self.true_quality.items():
            if not self.score_min <= q <= self.score_max:
                raise ConfigError(f"{sample_id} kalitesi aralık dışında: {q}", code="CFG023")
        self._global_mean = float(np.mean(list(self.true_quality.values())))

    @property
    def global_mean(self) -> float:
        return self._global_mean

    @classmethod
    def from_criterion(cls, criterion: Criterion, true_quality: Mapping[str, float],
                       bias_alpha: float = 0.0, noise_sigma: float = 0.0,
                       seed: int = 0) -> "SimJudgeConfig":
        return cls(
            true_quality=dict(true_quality),
            bias_alpha=bias_alpha,
            noise_sigma=noise_sigma,
            seed=seed,
            format=criterion.format,
            score_min=criterion.score_min,
            score_max=criterion.score_max,
        )


def _noise(sample_id: str, cfg: SimJudgeConfig, round_index: int) -> float:
    if cfg.noise_sigma == 0:
        return 0.0
    rng = np.random.default_rng([cfg.seed, round_index, stable_id_key(sample_id)])
    return float(rng.normal(0.0, cfg.noise_sigma))


def simulated_scores(sample_ids: Sequence[str], cfg: SimJudgeConfig,
                     round_index: int = 0) -> List[float]:
    """
    Batch'teki örneklerin skorları (batch sırasıyla)

    Raises:
        UnknownSample: Kalitesi bilinmeyen id varsa
    """
    for sample_id in sample_ids:
        if sample_id not in cfg.true_quality:
            raise UnknownSample(sample_id)

    qualities = [cfg.true_quality[i] for i in sample_ids]
    shift = cfg.bias_alpha * (float(np.mean(qualities)) - cfg.global_mean)

    scores = []
    for sample_id, q in zip(sample_ids, qualities):
        raw = q + shift + _noise(sample_id, cfg, round_index)
        raw = min(cfg.score_max, max(cfg.score_min, raw))
        if cfg.format == ScoreFormat.INTEGER:
            value = float(math.floor(raw + 0.5))
        else:
            value = round(raw, 1)
        scores.append(min(cfg.score_max, max(cfg.score_min, value)))
    return scores


def simulate_judge(sample_ids: Sequence[str], cfg: SimJudgeConfig, round_index: int = 0,
                   procedure: Procedure = Procedure.TWO_STAGE) -> str:
    """Şablona uygun yanıt metni"""
    return format_scores(simulated_scores(sample_ids, cfg, round_index), procedure, cfg.format)


class SimulatedJudge(JudgeGateway):
    """
    Deterministik hakem

    Token kullanımı boşluk tabanlı yaklaşımdır.
    """

    name = "simulated_judge"

    def __init__(self, config: SimJudgeConfig, ledger: Optional[CostLedger] = None):
        super().__init__(ledger)
        self.config = config

    def _complete(self, request: JudgeRequest) -> JudgeResponse:
        text = simulate_judge(request.sample_ids, self.config, request.round, request.procedure)
        return JudgeResponse(
            text=text,
            usage=TokenUsage(whitespace_tokens(request.prompt), whitespace_tokens(text)),
        )

    def describe(self) -> Dict[str, object]:
        return {
            "name": self.name,
            "bias_alpha": self.config.bias_alpha,
            "noise_sigma": self.config.noise_sigma,
            "seed": self.config.seed,
            "format": self.config.format.value,
        }
