"""
Exception Hiyerarşisi

Bu modül, sistemde kullanılan özel exception'ları içerir.
Tüm exception'lar EvaluatorError'dan türer.

Hiyerarşi:
    EvaluatorError (base)
    ├── ConfigError (yapılandırma hataları, aynı zamanda ValueError)
    ├── SampleError (örnek / kriter tanım hataları)
    ├── PartitionError (batch bölümleme hataları)
    │   ├── EmptyInput
    │   └── MissingScore
    ├── TemplateError (prompt hataları)
    │   ├── EmptyBatch
    │   ├── FieldMissing
    │   └── TemplateNotFound
    ├── ParseError (yanıt ayrıştırma hataları)
    │   ├── MarkerNotFound
    │   ├── CountMismatch
    │   ├── DuplicateIndex
    │   ├── OutOfRange
    │   └── NonIntegerScore
    ├── JudgeError (hakem hataları)
    │   ├── JudgeUnavailable
    │   ├── AuthFailure
    │   ├── RateLimited
    │   ├── JudgeTimeout
    │   ├── BudgetExceeded
    │   └── UnknownSample
    ├── ScoreTableError (skor tablosu hataları)
    │   ├── EmptyTable
    │   └── AllRoundsMissing
    ├── MetricError (metrik hataları)
    │   ├── LengthMismatch, DegenerateInput, KeyMismatch, EmptyMetricInput
    │   ├── InvalidBinWidth, InvalidN
    │   └── SpanOutOfRange, NonCausalMatrix
    ├── DatasetError (veri seti hataları)
    │   ├── SchemaViolation
    │   ├── EmptyDataset
    │   └── DatasetNotFound
    └── DiagnosticsError (tanılama hataları)
        ├── MissingArtifacts
        └── InvalidSweep
"""

from pathlib import Path
from typing import Any, List, Optional, Union


class EvaluatorError(Exception):
    """
    Değerlendirici Hataları - Base exception

    Tüm sistem hataları bu sınıftan türer.
    Hata mesajı ve kod içerir.
    """
    def __init__(self, message: str, code: Optional[str] = None):
        super().__init__(message)
        self.message = message
        self.code = code  # Hata kodu (örn: "JDG001")

    def __str__(self):
        if self.code:
            return f"[{self.code}] {self.message}"
        return self.message


class ConfigError(EvaluatorError, ValueError):
    """
    Yapılandırma Hataları

    Config oluşturma veya doğrulama sırasında oluşan hatalar.
    ValueError'dan da türer, böylece dataclass validasyonu ile uyumludur.
    """
    def __init__(self, message: str, code: Optional[str] = "CFG001"):
        super().__init__(message, code)


class SampleError(EvaluatorError):
    """Sample / Criterion tanımı geçersiz"""
    def __init__(self, message: str, code: Optional[str] = "SMP001"):
        super().__init__(message, code)


# ---------------------------------------------------------------------------
# Bölümleme
# ---------------------------------------------------------------------------

class PartitionError(EvaluatorError):
    """Batch bölümleme hataları"""
    pass


class EmptyInput(PartitionError):
    """Bölümlenecek id listesi boş"""
    def __init__(self, message: str = "Bölümlenecek örnek yok"):
        super().__init__(message, code="PRT001")


class MissingScore(PartitionError):
    """Skora dayalı strateji için bir id'nin skoru yok"""
    def __init__(self, sample_id: str):
        super().__init__(f"Skor bulunamadı: {sample_id}", code="PRT002")
        self.sample_id = sample_id


# ---------------------------------------------------------------------------
# Prompt
# ---------------------------------------------------------------------------

class TemplateError(EvaluatorError):
    """Prompt şablonu hataları"""
    pass


class EmptyBatch(TemplateError):
    """Boş batch render edilemez"""
    def __init__(self, message: str = "Batch boş, prompt oluşturulamaz"):
        super().__init__(message, code="TPL001")


class FieldMissing(TemplateError):
    """Örnekte şablonun beklediği alan yok"""
    def __init__(self, sample_id: str, field_name: str):
        super().__init__(
            f"Örnek '{sample_id}' içinde '{field_name}' alanı yok", code="TPL002"
        )
        self.sample_id = sample_id
        self.field_name = field_name


class TemplateNotFound(TemplateError):
    """İstenen şablon kataloğda yok"""
    def __init__(self, message: str):
        super().__init__(message, code="TPL003")


# ---------------------------------------------------------------------------
# Ayrıştırma
# ---------------------------------------------------------------------------

class ParseError(EvaluatorError):
    """
    Ayrıştırma Hataları

    Hakem yanıtından skor çıkarılamadığında fırlatılır.
    Executor bu aileyi yakalayıp batch'i tekrar dener.
    """
    pass


class MarkerNotFound(ParseError):
    """Skor bloğu işareti bulunamadı"""
    def __init__(self, marker: str):
        super().__init__(f"Yanıtta skor işareti bulunamadı: {marker!r}", code="PRS001")
        self.marker = marker


class CountMismatch(ParseError):
    """Skorlanan örnek numaraları 1..expected ile örtüşmüyor"""
    def __init__(self, expected: int, found: int, missing: Optional[List[int]] = None,
                 unexpected: Optional[List[int]] = None):
        message = f"Skor sayısı uyuşmuyor: beklenen {expected}, bulunan {found}"
        if missing:
            message += f", eksik {missing}"
        if unexpected:
            message += f", beklenmeyen {unexpected}"
        super().__init__(message, code="PRS002")
        self.expected = expected
        self.found = found
        self.missing = list(missing or [])
        self.unexpected = list(unexpected or [])


class DuplicateIndex(ParseError):
    """Aynı örnek numarası birden fazla kez skorlanmış"""
    def __init__(self, index: int):
        super().__init__(f"Tekrarlanan örnek numarası: Sample{index}", code="PRS003")
        self.index = index


class OutOfRange(ParseError):
    """Skor kriter aralığının tolerans dışında"""
    def __init__(self, index: int, value: float):
        super().__init__(f"Sample{index} skoru aralık dışında: {value}", code="PRS004")
        self.index = index
        self.value = value


class NonIntegerScore(ParseError):
    """Tam sayı formatında ondalık skor"""
    def __init__(self, index: int, value: float):
        super().__init__(f"Sample{index} skoru tam sayı değil: {value}", code="PRS005")
        self.index = index
        self.value = value


# ---------------------------------------------------------------------------
# Hakem
# ---------------------------------------------------------------------------

class JudgeError(EvaluatorError):
    """Hakem (judge) hataları"""
    pass


class JudgeUnavailable(JudgeError):
    """Hakem servisine ulaşılamıyor (tekrar denemeler tükendi)"""
    def __init__(self, message: str):
        super().__init__(message, code="JDG001")


class AuthFailure(JudgeError):
    """Kimlik doğrulama başarısız veya anahtar yok"""
    def __init__(self, message: str):
        super().__init__(message, code="JDG002")


class RateLimited(JudgeError):
    """Oran limiti tekrar denemelerden sonra da aşılıyor"""
    def __init__(self, message: str):
        super().__init__(message, code="JDG003")


class JudgeTimeout(JudgeError):
    """İstek zaman aşımına uğradı (tekrar denemelerden sonra)"""
    def __init__(self, message: str):
        super().__init__(message, code="JDG004")


class BudgetExceeded(JudgeError):
    """Maliyet defteri kullanıcı limitini geçti"""
    def __init__(self, spent: Any, cap: Any):
        super().__init__(f"Bütçe aşıldı: harcanan {spent}, limit {cap}", code="JDG005")
        self.spent = spent
        self.cap = cap


class UnknownSample(JudgeError):
    """Simülasyon hakemi gerçek kaliteyi bilmediği bir örnek aldı"""
    def __init__(self, sample_id: str):
        super().__init__(f"Bilinmeyen örnek: {sample_id}", code="JDG006")
        self.sample_id = sample_id


# ---------------------------------------------------------------------------
# Skor tablosu
# ---------------------------------------------------------------------------

class ScoreTableError(EvaluatorError):
    """Skor tablosu hataları"""
    pass


class EmptyTable(ScoreTableError):
    """Hiç tur tamamlanmamış"""
    def __init__(self, message: str = "Skor tablosunda tamamlanmış tur yok"):
        super().__init__(message, code="TBL001")


class AllRoundsMissing(ScoreTableError):
    """
    Bazı örnekler hiçbir turda skor almadı

    Engine bunu fırlatmaz; RunResult içinde raporlar.
    """
    def __init__(self, sample_ids: List[str]):
        super().__init__(
            f"{len(sample_ids)} örnek hiçbir turda skor almadı", code="TBL002"
        )
        self.sample_ids = list(sample_ids)


# ---------------------------------------------------------------------------
# Metrikler
# ---------------------------------------------------------------------------

class MetricError(EvaluatorError):
    """Metrik hesaplama hataları"""
    pass


class LengthMismatch(MetricError):
    def __init__(self, left: int, right: int):
        super().__init__(f"Vektör uzunlukları farklı: {left} != {right}", code="MET001")
        self.left = left
        self.right = right


class DegenerateInput(MetricError):
    """Sabit vektör, korelasyon tanımsız"""
    def __init__(self, message: str = "Sabit vektör: korelasyon tanımsız"):
        super().__init__(message, code="MET002")


class KeyMismatch(MetricError):
    def __init__(self, message: str = "Anahtar kümeleri eşleşmiyor"):
        super().__init__(message, code="MET003")


class InvalidBinWidth(MetricError):
    def __init__(self, width: float):
        super().__init__(f"Geçersiz bin genişliği: {width}", code="MET004")
        self.width = width


class InvalidN(MetricError):
    def __init__(self, n: int):
        super().__init__(f"Geçersiz örnek sayısı: {n}", code="MET005")
        self.n = n


class SpanOutOfRange(MetricError):
    def __init__(self, label: str):
        super().__init__(f"Span matris dışında veya çakışıyor: {label}", code="MET006")
        self.label = label


class NonCausalMatrix(MetricError):
    def __init__(self, message: str):
        super().__init__(message, code="MET007")


class EmptyMetricInput(MetricError):
    def __init__(self, message: str = "Boş girdi"):
        super().__init__(message, code="MET008")


# ---------------------------------------------------------------------------
# Veri seti
# ---------------------------------------------------------------------------

class DatasetError(EvaluatorError):
    """Veri seti hataları"""
    pass


class SchemaViolation(DatasetError):
    """Kanonik şemaya uymayan satır (satır numarası 1'den başlar)"""
    def __init__(self, line: int, reason: str):
        super().__init__(f"Satır {line}: {reason}", code="DST001")
        self.line = line
        self.reason = reason


class EmptyDataset(DatasetError):
    def __init__(self, message: str = "Veri setinde örnek yok"):
        super().__init__(message, code="DST002")


class DatasetNotFound(DatasetError):
    def __init__(self, path: Union[str, Path]):
        super().__init__(f"Veri seti bulunamadı: {path}", code="DST004")
        self.path = path


# ---------------------------------------------------------------------------
# Tanılama
# ---------------------------------------------------------------------------

class DiagnosticsError(EvaluatorError):
    """Tanılama hataları"""
    pass


class MissingArtifacts(DiagnosticsError):
    def __init__(self, missing: List[str]):
        super().__init__(f"Eksik çıktı dosyaları: {', '.join(missing)}", code="DGN001")
        self.missing = list(missing)


class InvalidSweep(DiagnosticsError):
    def __init__(self, message: str):
        super().__init__(message, code="DGN002")
