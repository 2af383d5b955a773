"""
Core Enums Modülü

Bu modül, sistemde kullanılan enum'ları içerir:
- Strategy: Batch kompozisyon stratejisi
- Procedure: Değerlendirme prosedürü (tek/iki/üç aşama)
- ScoreFormat: Skor formatı (tam sayı veya ondalık)
- JudgeMode: Hakem tipi (canlı API veya simülasyon)
- ParseStatus: Yanıt ayrıştırma sonucu
- RepartitionBasis: Yeniden bölümlemede kullanılan skor kaynağı
- JobStatus: Batch işinin durumu
"""

from enum import Enum


class Strategy(Enum):
    """
    Batch Kompozisyon Stratejisi

    Her turdan sonra örneklerin batch'lere nasıl yeniden dağıtılacağını belirler.

    - RANDOM: Her turda rastgele karıştır
    - HOMOGENEOUS: Benzer skorlu örnekleri aynı batch'e koy
    - HETEROGENEOUS: Her batch'e her skor diliminden en fazla bir örnek koy
    - FIXED: İlk turdaki rastgele bölümü tüm turlarda koru (kontrol grubu)
    """
    RANDOM = "random"
    HOMOGENEOUS = "homogeneous"
    HETEROGENEOUS = "heterogeneous"
    FIXED = "fixed"


class Procedure(Enum):
    """
    Değerlendirme Prosedürü

    - ONE_STAGE: Örnek örnek analiz + skor
    - TWO_STAGE: Önce tüm analizler, sonra tüm skorlar
    - THREE_STAGE: Analiz, sıralama, skor
    """
    ONE_STAGE = "one_stage"
    TWO_STAGE = "two_stage"
    THREE_STAGE = "three_stage"


class ScoreFormat(Enum):
    """Skor formatı"""
    INTEGER = "integer"  # Tam sayı skorlar
    DECIMAL = "decimal"  # Ondalık (float) skorlar


class JudgeMode(Enum):
    """Hakem tipi"""
    API = "api"  # Canlı chat-completion API
    SIM = "sim"  # Deterministik simülasyon


class ParseStatus(Enum):
    """
    Yanıt ayrıştırma durumu

    Transcript kayıtlarında her denemenin sonucunu belirtir.
    """
    OK = "ok"                # Başarılı
    CLAMPED = "clamped"      # Başarılı, bazı skorlar aralığa çekildi
    FAILED = "failed"        # Ayrıştırılamadı, tekrar denenecek
    EXHAUSTED = "exhausted"  # Tüm denemeler bitti, batch eksik sayılır


class RepartitionBasis(Enum):
    """Yeniden bölümleme skor kaynağı"""
    RUNNING_MEAN = "running_mean"  # Tamamlanan tüm turların ortalaması
    LAST_ROUND = "last_round"      # Sadece son turun skorları


class JobStatus(Enum):
    """
    Batch işi durumu

    - PENDING: Kuyrukta
    - RUNNING: Bir thread hakeme gönderiyor
    - COMPLETED: Skorlar ayrıştırıldı
    - EXHAUSTED: Ayrıştırma denemeleri bitti, batch bu turda eksik
    - FAILED: Hakem hatası veya beklenmeyen hata
    """
    PENDING = "pending"
    RUNNING = "running"
    COMPLETED = "completed"
    EXHAUSTED = "exhausted"
    FAILED = "failed"
