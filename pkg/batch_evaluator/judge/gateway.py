"""
Hakem Geçidi

Canlı API ve simülasyon hakemleri için ortak arayüz.

Kullanım:
    judge = SimulatedJudge(sim_config, ledger)
    response = judge.complete(JudgeRequest(prompt=..., round=0, batch_index=3))
"""

import logging
import threading
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Any, Dict, Optional, Tuple

from ..core.enums import Procedure
from ..core.exceptions import BudgetExceeded, JudgeError
from ..status import ComponentStatus
from .ledger import CostLedger


@dataclass
class JudgeRequest:
    """
    Tek bir hakem çağrısı

    sample_ids ve procedure, simülasyon hakeminin prompt'u yeniden
    ayrıştırmadan batch'i bilmesi içindir; canlı hakem bunları kullanmaz.
    """
    prompt: str
    temperature: float = 0.2
    max_output: int = 1024
    round: int = 0
    batch_index: int = 0
    sample_ids: Tuple[str, ...] = ()
    procedure: Procedure = Procedure.TWO_STAGE
    attempt: int = 0

    def __post_init__(self):
        if not self.prompt:
            raise ValueError("prompt boş olamaz")
        if self.temperature < 0:
            raise ValueError("temperature negatif olamaz")
        self.sample_ids = tuple(self.sample_ids)


@dataclass
class TokenUsage:
    prompt_tokens: int = 0
    completion_tokens: int = 0

    @property
    def total_tokens(self) -> int:
        return self.prompt_tokens + self.completion_tokens

    def to_dict(self) -> Dict[str, int]:
        return {"prompt_tokens": self.prompt_tokens, "completion_tokens": self.completion_tokens}


@dataclass
class JudgeResponse:
    text: str
    usage: TokenUsage = field(default_factory=TokenUsage)


@dataclass
class JudgeTranscript:
    """
    Bir prompt / yanıt alışverişi

    transcripts.jsonl dosyasında satır başına bir kayıt.
    """
    round: int
    batch: int
    attempt: int
    sample_ids: Tuple[str, ...]
    prompt: str
    response: Optional[str]
    usage: TokenUsage
    parse_status: str
    error: Optional[str] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "round": self.round,
            "batch": self.batch,
            "attempt": self.attempt,
            "sample_ids": list(self.sample_ids),
            "prompt": self.prompt,
            "response": self.response,
            "usage": self.usage.to_dict(),
            "parse_status": self.parse_status,
            "error": self.error,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "JudgeTranscript":
        usage = data.get("usage") or {}
        return cls(
            round=int(data["round"]),
            batch=int(data["batch"]),
            attempt=int(data.get("attempt", 0)),
            sample_ids=tuple(data.get("sample_ids", [])),
            prompt=data.get("prompt", ""),
            response=data.get("response"),
            usage=TokenUsage(usage.get("prompt_tokens", 0), usage.get("completion_tokens", 0)),
            parse_status=data.get("parse_status", ""),
            error=data.get("error"),
        )


def whitespace_tokens(text: str) -> int:
    """Boşluk tabanlı yaklaşık token sayısı"""
    return len(text.split())


class JudgeGateway(ABC):
    """
    Hakem base sınıfı

    complete() şablon metodudur: alt sınıfın _complete() çağrısını yapar,
    kullanımı deftere yazar, bütçeyi kontrol eder ve alışverişi loglar.
    Birden fazla thread aynı hakemi paylaşabilir.
    """

    name = "judge"

    def __init__(self, ledger: Optional[CostLedger] = None):
        self.ledger = ledger if ledger is not None else CostLedger()
        self._logger = logging.getLogger("judge")
        self._lock = threading.Lock()
        self._calls = 0
        self._failures = 0

    def complete(self, request: JudgeRequest) -> JudgeResponse:
        """
        Prompt'u hakeme gönderir

        Raises:
            AuthFailure, RateLimited, JudgeTimeout, JudgeUnavailable: Canlı modda
            BudgetExceeded: Kullanım kaydedildikten sonra limit aşıldıysa
        """
        try:
            response = self._complete(request)
        except JudgeError:
            with self._lock:
                self._failures += 1
            raise

        with self._lock:
            self._calls += 1
        self.ledger.record(response.usage.prompt_tokens, response.usage.completion_tokens)
        self._logger.debug(
            f"round={request.round} batch={request.batch_index} attempt={request.attempt} "
            f"prompt_tokens={response.usage.prompt_tokens} "
            f"completion_tokens={response.usage.completion_tokens}"
        )
        try:
            self.ledger.check_budget()
        except BudgetExceeded as e:
            # Kullanım deftere yazıldı; transcript da aynı kullanımı taşımalı
            e.usage = response.usage
            e.response_text = response.text
            raise
        return response

    @abstractmethod
    def _complete(self, request: JudgeRequest) -> JudgeResponse:
        """Alt sınıf: tek bir çağrı yapar"""

    def describe(self) -> Dict[str, Any]:
        """Manifest'e yazılan hakem bilgisi"""
        return {"name": self.name}

    def get_status(self) -> ComponentStatus:
        with self._lock:
            metrics = {"calls": self._calls, "failures": self._failures}
        health = "healthy" if not self.ledger.over_budget else "unhealthy"
        return ComponentStatus(name=self.name, health=health, metrics=metrics)
