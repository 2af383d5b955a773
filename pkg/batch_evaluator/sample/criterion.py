"""
Criterion (Kriter) Sınıfı

Adlandırılmış bir kalite boyutu: tanım, seviye açıklamaları (anchor),
skor aralığı ve skor formatı.

Kullanım:
    criterion = Criterion(
        name="Coherence",
        definition="Does the response serve as a valid continuation ...?",
        anchors=[(1, "(no) means ..."), (2, "(somewhat) means ..."), (3, "(yes) means ...")],
        score_min=1,
        score_max=3,
        format=ScoreFormat.DECIMAL,
    )
"""

from dataclasses import dataclass, replace
from typing import Any, Dict, List, Optional, Tuple

from ..core.enums import ScoreFormat
from ..core.exceptions import SampleError


def _format_level(value: float) -> str:
    """1.0 -> "1", 2.5 -> "2.5" """
    if float(value).is_integer():
        return str(int(value))
    return repr(float(value))


@dataclass
class Criterion:
    """
    Değerlendirme kriteri

    header verilirse kriter başlığı olarak kullanılır; içindeki {range}, {lo}
    ve {hi} alanları format'a göre doldurulur. Verilmezse ad, aralık ve
    tanımdan başlık üretilir.
    """
    name: str
    definition: str
    anchors: List[Tuple[float, str]]
    score_min: float
    score_max: float
    format: ScoreFormat = ScoreFormat.DECIMAL
    header: Optional[str] = None

    def __post_init__(self):
        if isinstance(self.format, str):
            self.format = ScoreFormat(self.format)
        if not self.name:
            raise SampleError("Kriter adı boş olamaz", code="SMP002")
        self.score_min = float(self.score_min)
        self.score_max = float(self.score_max)
        if not self.score_min < self.score_max:
            raise SampleError(
                f"{self.name}: score_min ({self.score_min}) score_max'tan küçük olmalı",
                code="SMP003",
            )
        if not self.anchors:
            raise SampleError(f"{self.name}: en az bir anchor gerekli", code="SMP004")
        anchors = []
        for level, description in self.anchors:
            level = float(level)
            if not self.score_min <= level <= self.score_max:
                raise SampleError(
                    f"{self.name}: anchor seviyesi {level} aralık dışında", code="SMP005"
                )
            anchors.append((level, description))
        self.anchors = anchors

    @property
    def is_integer(self) -> bool:
        return self.format == ScoreFormat.INTEGER

    def contains(self, value: float) -> bool:
        return self.score_min <= value <= self.score_max

    def with_format(self, fmt: ScoreFormat) -> "Criterion":
        """Aynı kriterin başka formattaki kopyası"""
        return replace(self, format=fmt)

    def block_text(self) -> str:
        """
        Prompt'taki kriter bloğu

        Ondalık format:
            Coherence (floating point numbers within the interval [1,3]): <tanım>

            - A float score near 1 (no) means ...
        Tam sayı formatı:
            Coherence (1-3): <tanım>

            - A score of 1 (no) means ...
        """
        lo, hi = _format_level(self.score_min), _format_level(self.score_max)
        if self.is_integer:
            range_text = f"{lo}-{hi}"
        else:
            range_text = f"floating point numbers within the interval [{lo},{hi}]"
        if self.header:
            head = self.header.format(range=range_text, lo=lo, hi=hi)
        else:
            head = f"{self.name} ({range_text}): {self.definition}"

        prefix = "- A score of" if self.is_integer else "- A float score near"
        lines = [head]
        for level, description in self.anchors:
            lines.append(f"{prefix} {_format_level(level)} {description}")
        return "\n\n".join(lines)

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "name": self.name,
            "definition": self.definition,
            "anchors": [[_level_json(level), text] for level, text in self.anchors],
            "score_min": _level_json(self.score_min),
            "score_max": _level_json(self.score_max),
            "format": self.format.value,
        }
        if self.header:
            data["header"] = self.header
        return data

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "Criterion":
        return cls(
            name=data.get("name", ""),
            definition=data.get("definition", ""),
            anchors=[(a[0], a[1]) for a in data.get("anchors", [])],
            score_min=data.get("score_min", 0),
            score_max=data.get("score_max", 0),
            format=ScoreFormat(data.get("format", "decimal")),
            header=data.get("header"),
        )


def _level_json(value: float):
    return int(value) if float(value).is_integer() else float(value)
