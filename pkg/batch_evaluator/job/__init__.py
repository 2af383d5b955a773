"""Job modülü - batch işi ve sonucu"""

from .job import BatchJob
from .outcome import BatchOutcome

__all__ = ["BatchJob", "BatchOutcome"]
