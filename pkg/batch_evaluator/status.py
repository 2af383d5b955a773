"""Bileşen durum raporu"""

from dataclasses import dataclass, field
from typing import Any, Dict


@dataclass
class ComponentStatus:
    """
    Bileşen durumu

    DispatchPool, hakemler ve maliyet defteri get_status() ile bu sınıfı döndürür.
    BatchEvaluator.get_status() hepsini tek bir dict altında toplar.
    """
    name: str
    health: str  # "healthy" | "degraded" | "unhealthy"
    metrics: Dict[str, Any] = field(default_factory=dict)

    @property
    def is_healthy(self) -> bool:
        return self.health == "healthy"

    def to_dict(self) -> Dict[str, Any]:
        """Dict'e dönüştür"""
        return {
            "name": self.name,
            "health": self.health,
            "metrics": dict(self.metrics),
        }
