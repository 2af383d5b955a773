"""Sample modülü - örnek ve kriter tanımları"""

from .sample import Sample, stable_id_key
from .criterion import Criterion

__all__ = ["Sample", "Criterion", "stable_id_key"]
