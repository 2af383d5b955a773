"""
Attention Normalizasyonu

Otoregresif modelde x. token'ın (1 tabanlı) bir önceki token'a beklenen
attention'ı 1/x'tir. Her Att(x, y) x ile çarpılarak beklenen değer 1'e çekilir,
sonra metin aralıkları (span) arasındaki ortalama alınır:

    Att(s1, s2) = Avg({Att(x, y) | x ∈ s1, y ∈ s2, y <= x})

Nedensel girdisi olmayan span çiftleri (s2 tamamen s1'den sonra) NaN'dır.
Model çıkarımı bu modülün işi değildir; matris dışarıdan verilir.
"""

from typing import List, Sequence, Tuple

import numpy as np

from ..core.exceptions import NonCausalMatrix, SpanOutOfRange

Span = Tuple[str, Tuple[int, int]]

ROW_SUM_TOLERANCE = 1e-6


def check_causal(att: np.ndarray) -> None:
    """
    Raises:
        NonCausalMatrix: Kare değilse, üst üçgen sıfır değilse, negatif değer
            varsa veya satırlar 1'e toplanmıyorsa
    """
    if att.ndim != 2 or att.shape[0] != att.shape[1]:
        raise NonCausalMatrix(f"Kare matris bekleniyor: {att.shape}")
    if np.any(att < 0):
        raise NonCausalMatrix("Negatif attention değeri")
    if np.any(np.triu(att, k=1) != 0):
        raise NonCausalMatrix("Üst üçgende sıfır olmayan değer")
    sums = att.sum(axis=1)
    if not np.allclose(sums, 1.0, atol=ROW_SUM_TOLERANCE):
        bad = int(np.argmax(np.abs(sums - 1.0)))
        raise NonCausalMatrix(f"Satır {bad} toplamı 1 değil: {sums[bad]}")


def scale_attention(att: Sequence[Sequence[float]]) -> np.ndarray:
    """Att(x, y) * x (x 1 tabanlı satır)"""
    matrix = np.asarray(att, dtype=float)
    check_causal(matrix)
    positions = np.arange(1, matrix.shape[0] + 1, dtype=float)
    return matrix * positions[:, None]


def _check_spans(spans: Sequence[Span], size: int) -> None:
    taken = np.zeros(size, dtype=bool)
    for label, (start, end) in spans:
        if not 0 <= start < end <= size:
            raise SpanOutOfRange(label)
        if taken[start:end].any():
            raise SpanOutOfRange(label)
        taken[start:end] = True


def normalize_attention(att: Sequence[Sequence[float]], spans: Sequence[Span]) -> np.ndarray:
    """
    Args:
        att: Alt üçgensel, satırları nedensel önek üzerinde 1'e toplanan matris
        spans: (etiket, (başlangıç, bitiş)) listesi; 0 tabanlı, bitiş hariç

    Returns:
        np.ndarray: len(spans) x len(spans) ortalama normalize attention

    Raises:
        NonCausalMatrix: Matris nedensel değilse
        SpanOutOfRange: Span matris dışında veya başka bir span ile çakışıyorsa
    """
    scaled = scale_attention(att)
    size = scaled.shape[0]
    _check_spans(spans, size)
    causal = np.tril(np.ones((size, size), dtype=bool))

    result = np.full((len(spans), len(spans)), np.nan)
    for a, (_, (sa, ea)) in enumerate(spans):
        for b, (_, (sb, eb)) in enumerate(spans):
            mask = causal[sa:ea, sb:eb]
            if mask.any():
                result[a, b] = float(scaled[sa:ea, sb:eb][mask].mean())
    return result


def span_labels(spans: Sequence[Span]) -> List[str]:
    return [label for label, _ in spans]
