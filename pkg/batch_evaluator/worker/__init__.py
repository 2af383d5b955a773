"""Worker modülü - eşzamanlı batch gönderimi"""

from .pool import DispatchPool
from .executor import BatchExecutor

__all__ = ["DispatchPool", "BatchExecutor"]
