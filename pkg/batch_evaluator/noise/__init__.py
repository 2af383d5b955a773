"""Noise modülü - Silme ve eş anlamlı değiştirme ile girdi gürültüsü"""

from .perturb import (
    LEXICON_PATH,
    NoiseConfig,
    default_lexicon,
    load_lexicon,
    parse_lexicon,
    perturb,
    perturb_dataset,
    perturb_sample,
    robustness_delta,
)

__all__ = [
    'LEXICON_PATH',
    'NoiseConfig',
    'default_lexicon',
    'load_lexicon',
    'parse_lexicon',
    'perturb',
    'perturb_dataset',
    'perturb_sample',
    'robustness_delta',
]
