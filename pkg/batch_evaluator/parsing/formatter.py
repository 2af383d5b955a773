"""
Skor Bloğu Üretici

Şablona uygun hakem yanıtı üretir. Simülasyon hakemi ve ayrıştırıcı
testleri bu modülü kullanır; parse_batch_scores ile ters işlemdir.
"""

from typing import List, Optional, Sequence

from ..core.enums import Procedure, ScoreFormat

ANALYSIS_OPENER = "I will do my best to provide individual analysis for each sample. Analysis:"
DEFAULT_ANALYSIS = "The sample is assessed against the evaluation criteria."


def format_value(value: float, fmt: ScoreFormat) -> str:
    """Tam sayı: "2"; ondalık: repr ile kayıpsız ("2.4", "2.0")"""
    if fmt == ScoreFormat.INTEGER:
        return str(int(value))
    return repr(float(value))


def format_score_list(values: Sequence[float], fmt: ScoreFormat) -> str:
    """'Float Scores: [Sample1:2.4, Sample2:1.8]' veya 'Scores: [Sample1:2, ...]'"""
    label = "Float Scores" if fmt == ScoreFormat.DECIMAL else "Scores"
    entries = ", ".join(
        f"Sample{k}:{format_value(v, fmt)}" for k, v in enumerate(values, start=1)
    )
    return f"{label}: [{entries}]"


def format_scores(
    values: Sequence[float],
    procedure: Procedure,
    fmt: ScoreFormat,
    analyses: Optional[Sequence[str]] = None,
) -> str:
    """
    Prosedüre uygun tam yanıt metni

    Args:
        values: Sample1..SampleN skorları
        procedure: Yanıt prosedürü
        fmt: Skor formatı
        analyses: Örnek başına analiz cümleleri (opsiyonel)

    Returns:
        str: Hakem yanıtı
    """
    n = len(values)
    notes: List[str] = list(analyses) if analyses is not None else [DEFAULT_ANALYSIS] * n

    if procedure == Procedure.ONE_STAGE:
        kind = "float score" if fmt == ScoreFormat.DECIMAL else "score"
        lines = [f"I will do my best to provide individual analysis and give a suitable {kind} for each sample in order."]
        for k, (value, note) in enumerate(zip(values, notes), start=1):
            lines.append(f"Sample {k}: {note}")
            lines.append(f"Score of Sample{k}:[{format_value(value, fmt)}]")
        return "\n".join(lines)

    parts = [ANALYSIS_OPENER]
    parts.extend(f"Sample {k}: {note}" for k, note in enumerate(notes, start=1))
    text = "\n".join(parts)

    if procedure == Procedure.THREE_STAGE:
        # Yüksekten düşüğe; eşitlikte numara sırası
        order = sorted(range(1, n + 1), key=lambda k: (-values[k - 1], k))
        ranking = " > ".join(f"Sample{k}" for k in order)
        text += f"\n\nRanking: {ranking}\nReasons: the ranking follows the analysis above."

    return text + "\n\n" + format_score_list(values, fmt)
