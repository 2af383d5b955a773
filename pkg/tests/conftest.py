"""
Ortak test fixture'ları

Simüle hakem, küçük örnek listeleri ve sabit saat.
"""

from datetime import datetime, timezone

import pytest

from batch_evaluator import Criterion, Sample, ScoreFormat
from batch_evaluator.judge import CostLedger, SimJudgeConfig, SimulatedJudge
from batch_evaluator.prompts import GENERIC_TASK, builtin_criterion


@pytest.fixture
def criterion() -> Criterion:
    """Generic görev kriteri, [1,3] ondalık"""
    return builtin_criterion(GENERIC_TASK)


@pytest.fixture
def integer_criterion() -> Criterion:
    return builtin_criterion(GENERIC_TASK, fmt=ScoreFormat.INTEGER)


def make_samples(n: int, criterion_name: str = "Quality", lo: float = 1.0, hi: float = 3.0):
    """n örnek; kaliteler lo..hi arasında eşit aralıklı"""
    samples = []
    for k in range(n):
        quality = lo if n == 1 else lo + (hi - lo) * k / (n - 1)
        samples.append(Sample(
            id=f"s{k:03d}",
            fields={"Text": f"Sample text number {k}."},
            human_scores={criterion_name: round(quality, 6)},
        ))
    return samples


def make_sim_judge(criterion: Criterion, samples, bias_alpha=0.0, noise_sigma=0.0, seed=0,
                   ledger=None) -> SimulatedJudge:
    truth = {s.id: s.human_score(criterion.name) for s in samples}
    cfg = SimJudgeConfig.from_criterion(criterion, truth, bias_alpha=bias_alpha,
                                        noise_sigma=noise_sigma, seed=seed)
    return SimulatedJudge(cfg, ledger or CostLedger())


@pytest.fixture
def samples():
    return make_samples(20)


@pytest.fixture
def fixed_clock():
    """Manifest zaman damgalarını sabitleyen saat"""
    stamp = datetime(2024, 1, 1, tzinfo=timezone.utc)
    return lambda: stamp
