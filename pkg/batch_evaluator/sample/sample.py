"""
Sample (Örnek) Sınıfı

Değerlendirilecek tek bir birim: diyalog cevabı, hikaye, özet cümlesi vb.
Alanlar sıralıdır; prompt içinde bu sırayla yazılır.

Kullanım:
    sample = Sample(
        id="tc-001",
        fields={"Conversation": "...", "Response": "..."},
        human_scores={"Coherence": 2.67},
    )
"""

import hashlib
from dataclasses import dataclass, field
from typing import Any, Dict, Optional

from ..core.exceptions import SampleError


@dataclass
class Sample:
    """
    Değerlendirme örneği

    - id: Veri seti içinde benzersiz, boş olmayan kimlik
    - fields: Alan adı -> metin (sıralı, boş olamaz)
    - human_scores: Kriter adı -> insan skoru (opsiyonel)
    """
    id: str
    fields: Dict[str, str]
    human_scores: Optional[Dict[str, float]] = None

    def __post_init__(self):
        if not isinstance(self.id, str) or not self.id:
            raise SampleError("Sample id boş olamaz")
        if not self.fields:
            raise SampleError(f"Sample '{self.id}' en az bir alan içermeli")
        for name, text in self.fields.items():
            if not isinstance(text, str) or not text.strip():
                raise SampleError(f"Sample '{self.id}' içindeki '{name}' alanı boş")
        if self.human_scores is not None:
            self.human_scores = {k: float(v) for k, v in self.human_scores.items()}

    def human_score(self, criterion_name: str) -> Optional[float]:
        """Kritere ait insan skoru, yoksa None"""
        if not self.human_scores:
            return None
        return self.human_scores.get(criterion_name)

    def to_dict(self) -> Dict[str, Any]:
        """Kanonik satır formatı"""
        return {
            "id": self.id,
            "fields": dict(self.fields),
            "human": dict(self.human_scores) if self.human_scores else {},
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "Sample":
        return cls(
            id=data.get("id", ""),
            fields=dict(data.get("fields") or {}),
            human_scores=dict(data["human"]) if data.get("human") else None,
        )


def stable_id_key(sample_id: str) -> int:
    """id'den süreçler arası sabit 64 bit anahtar (numpy seed bileşeni olarak)"""
    return int.from_bytes(hashlib.sha256(sample_id.encode("utf-8")).digest()[:8], "big")
