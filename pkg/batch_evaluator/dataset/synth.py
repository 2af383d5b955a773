"""
Sentetik Veri Seti

Simüle hakem deneyleri için gizli kaliteleri bilinen veri seti üretir.
Kaliteler kriter aralığında düzgün dağılır ve human_scores olarak saklanır.

Kullanım:
    dataset = synth_dataset(100, criterion, seed=0)
"""

from typing import Optional

import numpy as np

from ..core.exceptions import ConfigError
from ..sample.criterion import Criterion
from ..sample.sample import Sample
from .dataset import Dataset

SYNTH_FIELD = "Text"


def synth_dataset(n: int, criterion: Criterion, seed: int = 0, name: Optional[str] = None) -> Dataset:
    """
    Args:
        n: Örnek sayısı (>= 1)
        criterion: Kalite aralığını veren kriter
        seed: numpy seed'i

    Returns:
        Dataset: "syn-00000" biçiminde id'li n örnek

    Raises:
        ConfigError: n < 1
    """
    if n < 1:
        raise ConfigError(f"synth için n en az 1 olmalı: {n}", code="CFG024")
    rng = np.random.default_rng(seed)
    qualities = rng.uniform(criterion.score_min, criterion.score_max, size=n)
    width = max(5, len(str(n - 1)))

    samples = []
    for k, quality in enumerate(qualities):
        sample_id = f"syn-{k:0{width}d}"
        samples.append(Sample(
            id=sample_id,
            fields={SYNTH_FIELD: f"Synthetic sample {sample_id}."},
            human_scores={criterion.name: float(quality)},
        ))
    return Dataset(
        name=name or f"synthetic-{n}-seed{seed}",
        samples=samples,
        criteria=[criterion],
        provenance=f"synth(n={n}, seed={seed}, uniform[{criterion.score_min}, {criterion.score_max}])",
    )
