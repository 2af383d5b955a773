"""Dataset modülü - Kanonik veri seti formatı ve sentetik üretici"""

from .dataset import (
    Dataset,
    dump_dataset,
    load_dataset,
    parse_dataset,
    samples_digest,
    save_dataset,
    validate_dataset,
)
from .synth import SYNTH_FIELD, synth_dataset

__all__ = [
    'Dataset',
    'dump_dataset',
    'load_dataset',
    'parse_dataset',
    'samples_digest',
    'save_dataset',
    'validate_dataset',
    'SYNTH_FIELD',
    'synth_dataset',
]
